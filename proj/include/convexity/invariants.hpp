#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "convexity/point_set.hpp"
#include "convexity/space.hpp"

namespace convexity {

struct RadonPartition {
  PointSet a;
  PointSet b;

  friend bool operator==(const RadonPartition&, const RadonPartition&) = default;
};

/// First partition Y = A + B with hull(A) meeting hull(B). A always holds the
/// smallest point of Y and candidates for A are scanned in canonical order.
std::optional<RadonPartition> radon_partition(const ConvexitySpace& space, const PointSet& y);
std::optional<RadonPartition> radon_partition(HullMemo& hulls, const PointSet& y);

/// The first n-subset of X (lexicographic) without a Radon partition, or
/// nullopt if every n-subset has one.
std::optional<PointSet> subset_without_radon_partition(HullMemo& hulls, std::size_t n);

/// Smallest n for which every n-subset of X has a Radon partition; nullopt
/// when X itself has none ("unbounded at this scale").
std::optional<std::size_t> radon_number(const ConvexitySpace& space, std::size_t cap = kDefaultEnumerationCap);

struct HellyResult {
  std::size_t number = 1;
  PointSet witness;  // a largest S with meet_x hull(S - x) empty

  friend bool operator==(const HellyResult&, const HellyResult&) = default;
};

/// Largest S with meet_{x in S} hull(S - {x}) empty. That property is closed
/// under taking subsets, so a depth-first search over increasing index
/// sequences that only extends qualifying sets visits every candidate.
HellyResult helly_number_independence(const ConvexitySpace& space, std::size_t cap = kDefaultEnumerationCap);

/// Largest inclusion-minimal non-intersecting family of convex sets, found by
/// search over the enumerated convex family.
std::size_t helly_number_direct(const ConvexitySpace& space, std::size_t cap = kDefaultEnumerationCap);

struct VennAtom {
  PointSet signature;  // over the family's member indices
  PointSet atom;       // ground points with that signature

  friend bool operator==(const VennAtom&, const VennAtom&) = default;
};

/// Realized signatures, ordered by their first ground point.
std::vector<VennAtom> venn_atoms(const SetFamily& family);

/// Max over m-member subfamilies of the number of distinct point signatures.
std::size_t dual_shatter(const SetFamily& family, std::size_t m);

/// Largest k such that some k members have all 2^k signatures realized.
std::size_t dual_vc_dimension(const SetFamily& family);

/// Largest k such that some k ground points are shattered.
std::size_t vc_dimension(const SetFamily& family);

/// The gamma sides of all halfspaces, as a family over X.
SetFamily halfspace_family(const ConvexitySpace& space, std::size_t cap = kDefaultEnumerationCap);

struct BoundCheck {
  std::string name;
  bool applicable = true;
  bool holds = true;
  std::string data;

  friend bool operator==(const BoundCheck&, const BoundCheck&) = default;
};

/// levi, eq1, moran_yehudayoff and (lattice spaces) onn.
std::vector<BoundCheck> check_bounds(const ConvexitySpace& space, std::size_t cap = kDefaultEnumerationCap);

struct InvariantSelection {
  bool radon = true;
  bool helly = true;
  bool helly_direct = true;
  bool vc = true;
  bool dual_vc = true;
  bool separable = true;
  bool bounds = true;
};

struct InvariantLimits {
  std::size_t enumeration_cap = kDefaultEnumerationCap;
  /// helly_number_direct only runs up to this many points.
  std::size_t helly_direct_cap = 12;
};

struct InvariantReport {
  std::string space;
  std::size_t points = 0;
  bool radon_computed = false;
  std::optional<std::size_t> radon;
  std::optional<std::size_t> helly_independence;
  std::optional<PointSet> helly_witness;
  std::optional<std::size_t> helly_direct;
  std::optional<std::size_t> halfspace_count;
  std::optional<std::size_t> vc_halfspaces;
  std::optional<std::size_t> dual_vc_halfspaces;
  std::optional<bool> separable;
  std::vector<BoundCheck> bound_checks;

  friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

/// Throws VerificationFailure when both Helly computations ran and disagree.
InvariantReport compute_invariants(const ConvexitySpace& space, const InvariantSelection& selection = {},
                                   const InvariantLimits& limits = {});

}  // namespace convexity
