#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "convexity/rational.hpp"
#include "convexity/space.hpp"

namespace convexity {

inline constexpr std::size_t kDefaultGroundCap = 4096;

/// Row-major integer grid {0..sides[0]-1} x ... x {0..sides[d-1]-1}; the last
/// coordinate varies fastest, so point (x, y) of a square grid has index
/// x * side + y.
class GridShape {
 public:
  explicit GridShape(std::vector<std::size_t> sides);

  std::size_t dimension() const { return sides_.size(); }
  std::size_t size() const { return size_; }
  const std::vector<std::size_t>& sides() const { return sides_; }

  std::size_t index(std::span<const std::int64_t> coords) const;
  std::vector<std::int64_t> coords(std::size_t index) const;

 private:
  std::vector<std::size_t> sides_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 1;
};

/// Box convexity on a grid: hull(Y) is every grid point inside the
/// coordinatewise [min, max] ranges of Y.
ConvexitySpace make_box_space(std::size_t dim, std::size_t side, std::size_t ground_cap = kDefaultGroundCap);
ConvexitySpace make_box_space(std::vector<std::size_t> sides, std::size_t ground_cap = kDefaultGroundCap);

/// Lattice convexity on a grid: hull(Y) is every grid point lying in the real
/// convex hull of Y, decided exactly.
ConvexitySpace make_lattice_space(std::size_t dim, std::size_t side, std::size_t ground_cap = kDefaultGroundCap);
ConvexitySpace make_lattice_space(std::vector<std::size_t> sides, std::size_t ground_cap = kDefaultGroundCap);

/// Exact test of p in conv(points) over the rationals: phase-one simplex on
/// the convex-combination system with Bland's rule. No floating point.
bool point_in_rational_hull(const RationalVector& p, std::span<const RationalVector> points);

/// Integer-grid membership routes used by the lattice oracle. Exposed so the
/// general simplex route can be checked against them.
namespace lattice_detail {
/// Planar route: exact integer convex polygon plus orientation tests.
std::vector<bool> planar_hull_members(const GridShape& grid, const PointSet& y);
/// Any dimension: bounding-face restriction, then the simplex route.
std::vector<bool> general_hull_members(const GridShape& grid, const PointSet& y);
}  // namespace lattice_detail

/// Space whose convex sets are the intersection closure of
/// family.sets + {empty, X}.
ConvexitySpace make_explicit_space(const SetFamily& family);

/// Explicit space that keeps `family` exactly as given (no closure). Its hull
/// oracle is still the intersection of the members containing Y; the space
/// may violate the axioms, which is what check_axioms is for.
ConvexitySpace make_unclosed_explicit_space(const SetFamily& family);

/// Closure of `sets` + {empty, X} under pairwise intersection, canonical order.
std::vector<PointSet> intersection_closure(std::size_t ground_size, const std::vector<PointSet>& sets);

/// n one-layer coordinate slabs on the grid {0..n/d-1}^d: group i holds the
/// n/d slabs orthogonal to axis i. Members are boxes of make_box_space(d, n/d).
SetFamily box_lower_bound_family(std::size_t dim, std::size_t n);

/// Rebuilds a space from its descriptor.
ConvexitySpace make_space(const SpaceDescriptor& descriptor, std::size_t ground_cap = kDefaultGroundCap);

}  // namespace convexity
