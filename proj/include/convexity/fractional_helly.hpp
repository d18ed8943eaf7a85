#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "convexity/rational.hpp"
#include "convexity/space.hpp"

namespace convexity {

struct FHReport {
  std::size_t n = 0;
  std::size_t k = 0;
  Integer intersecting_k_tuples = 0;
  Rational alpha;
  std::size_t max_intersecting = 0;
  Rational beta;
  std::optional<std::size_t> witness_point;  // empty only when no member has a point

  friend bool operator==(const FHReport&, const FHReport&) = default;
};

struct IntersectingSubfamily {
  std::size_t size = 0;
  std::optional<std::size_t> witness_point;
  std::vector<std::size_t> member_indices;
};

/// k-subsets are visited in colexicographic order. Requires 1 <= k <= |family|.
Integer count_intersecting_tuples(const SetFamily& family, std::size_t k);

/// Point of largest degree, lowest index on ties. Requires a nonempty family.
IntersectingSubfamily max_intersecting_subfamily(const SetFamily& family);

/// 1 - (1 - alpha)^(1/(d+1)); requires 0 < alpha < 1.
Real optimal_beta(const Rational& alpha, std::size_t d);

FHReport fh_report(const SetFamily& family, std::size_t k);

}  // namespace convexity
