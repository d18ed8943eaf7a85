#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "convexity/point_set.hpp"
#include "convexity/rational.hpp"

namespace convexity {

inline constexpr std::size_t kDefaultEnumerationCap = 24;

struct GroundPoint {
  std::size_t index = 0;
  RationalVector coords;  // empty unless the space is geometric
  std::string label;
};

/// A finite list of subsets of {0..ground_size-1}.
struct SetFamily {
  std::size_t ground_size = 0;
  std::vector<PointSet> sets;

  static SetFamily from_indices(std::size_t ground_size, const std::vector<std::vector<std::size_t>>& sets);

  /// Throws InvalidArgument if a member is over a different ground set.
  void validate() const;

  friend bool operator==(const SetFamily&, const SetFamily&) = default;
};

enum class SpaceKind { box, lattice, explicit_family };

std::string to_string(SpaceKind kind);

/// Enough information to rebuild a space (and to serialize it).
struct SpaceDescriptor {
  SpaceKind kind = SpaceKind::explicit_family;
  std::vector<std::size_t> sides;  // grid kinds only
  SetFamily family;                // explicit only, as supplied by the user
  bool closed = true;              // explicit only: intersection-closed on ingestion
  std::vector<std::string> labels;

  friend bool operator==(const SpaceDescriptor&, const SpaceDescriptor&) = default;
};

struct Halfspace {
  PointSet gamma;
  PointSet complement;

  friend bool operator==(const Halfspace&, const Halfspace&) = default;
};

/// Deterministic hull operator of a concrete space.
class HullOracle {
 public:
  virtual ~HullOracle() = default;
  virtual PointSet hull(const PointSet& y) const = 0;
};

/// A finite convexity space: ground points plus a hull oracle. Copies are
/// cheap and share the lazily enumerated convex family.
class ConvexitySpace {
 public:
  ConvexitySpace(std::vector<GroundPoint> ground, std::shared_ptr<const HullOracle> oracle,
                 SpaceDescriptor descriptor, std::optional<std::vector<PointSet>> declared_family = std::nullopt);

  std::size_t size() const { return ground_.size(); }
  const std::vector<GroundPoint>& ground() const { return ground_; }
  const SpaceDescriptor& descriptor() const { return descriptor_; }
  SpaceKind kind() const { return descriptor_.kind; }
  /// Grid dimension; 0 for explicit spaces.
  std::size_t dimension() const { return descriptor_.sides.size(); }

  /// The family as supplied for explicit spaces (after closure, if requested).
  const std::optional<std::vector<PointSet>>& declared_family() const { return declared_family_; }

  PointSet empty_set() const { return PointSet(size()); }
  PointSet full_set() const { return PointSet::full(size()); }
  PointSet singleton(std::size_t index) const;

  PointSet hull(const PointSet& y) const;
  const std::shared_ptr<const HullOracle>& oracle() const { return oracle_; }

  /// "box:2:3", "lattice:1:5", "explicit:6".
  std::string name() const;

  /// Backing store of enumerate_convex_sets / enumerate_halfspaces.
  const std::vector<PointSet>& convex_family(std::size_t cap) const;
  const std::vector<Halfspace>& halfspaces(std::size_t cap) const;

 private:
  struct Cache;

  std::vector<GroundPoint> ground_;
  std::shared_ptr<const HullOracle> oracle_;
  SpaceDescriptor descriptor_;
  std::optional<std::vector<PointSet>> declared_family_;
  std::shared_ptr<Cache> cache_;
};

/// Memoizing wrapper for algorithms that ask for many hulls.
class HullMemo {
 public:
  explicit HullMemo(const ConvexitySpace& space) : space_(&space) {}
  const PointSet& operator()(const PointSet& y);
  const ConvexitySpace& space() const { return *space_; }

 private:
  const ConvexitySpace* space_;
  std::unordered_map<PointSet, PointSet, PointSetHash> memo_;
};

struct AxiomCheck {
  enum class Status { pass, fail, vacuous };
  std::string name;
  Status status = Status::pass;
  std::string witness;  // set on failure
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;

  bool ok() const;
  const AxiomCheck* find(const std::string& name) const;
};

/// Throws InvalidArgument when `y` is over a different ground set.
PointSet hull(const ConvexitySpace& space, const PointSet& y);

bool is_convex(const ConvexitySpace& space, const PointSet& s);

/// C1 and C2 on the convex family, the three hull-operator laws, agreement
/// between the hull oracle and the family, and C3 (always vacuous here).
/// The hull laws are checked on every subset when |X| <= 12 and on a fixed
/// pseudo-random sample otherwise.
AxiomReport check_axioms(const ConvexitySpace& space, std::size_t cap = kDefaultEnumerationCap);

/// All hull-closed subsets in canonical order. Computed once per space
/// (closure-system enumeration, one hull call per element per closed set).
const std::vector<PointSet>& enumerate_convex_sets(const ConvexitySpace& space,
                                                   std::size_t cap = kDefaultEnumerationCap);

/// All convex sets whose complement is convex, in canonical order of gamma.
const std::vector<Halfspace>& enumerate_halfspaces(const ConvexitySpace& space,
                                                   std::size_t cap = kDefaultEnumerationCap);

/// The canonically smallest halfspace gamma with s inside gamma and x outside,
/// or nullopt when none exists. `s` must be convex and must not contain x.
std::optional<Halfspace> separate(const ConvexitySpace& space, const PointSet& s, std::size_t x,
                                  std::size_t cap = kDefaultEnumerationCap);

struct SeparabilityResult {
  bool separable = true;
  std::optional<PointSet> failing_set;
  std::optional<std::size_t> failing_point;
};

/// First failing (S, x) in canonical order of S, then increasing x.
SeparabilityResult is_separable(const ConvexitySpace& space, std::size_t cap = kDefaultEnumerationCap);

/// Intersection of all members of `family` containing y (X if none do).
PointSet hull_from_family(const std::vector<PointSet>& family, const PointSet& y);

}  // namespace convexity
