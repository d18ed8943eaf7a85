#include "convexity/fractional_helly.hpp"

#include <boost/multiprecision/number.hpp>

#include "convexity/combinatorics.hpp"
#include "convexity/errors.hpp"

namespace convexity {

namespace {

void check_family(const SetFamily& family) {
  family.validate();
  if (family.sets.empty()) throw InvalidArgument("family must be nonempty");
}

Integer exact_binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  Integer out = 1;
  for (std::size_t i = 0; i < k; ++i) {
    out *= n - i;
    out /= i + 1;
  }
  return out;
}

}  // namespace

Integer count_intersecting_tuples(const SetFamily& family, std::size_t k) {
  check_family(family);
  const std::size_t n = family.sets.size();
  if (k < 1 || k > n) {
    throw InvalidArgument("k = " + std::to_string(k) + " must lie in [1, " + std::to_string(n) + "]");
  }
  Integer count = 0;
  std::vector<std::size_t> pick = first_combination(k);
  // suffix[i] is the meet of picked members i..k-1. A colex step only moves
  // a prefix of the positions, so the tail of this array stays valid.
  std::vector<PointSet> suffix(k + 1);
  suffix[k] = PointSet::full(family.ground_size);
  std::size_t stale = k;
  std::vector<std::size_t> previous;
  do {
    if (!previous.empty()) {
      stale = k;
      while (stale > 0 && pick[stale - 1] == previous[stale - 1]) --stale;
    }
    for (std::size_t i = stale; i-- > 0;) suffix[i] = suffix[i + 1] & family.sets[pick[i]];
    if (!suffix[0].empty()) ++count;
    previous = pick;
  } while (next_combination_colex(pick, n));
  return count;
}

IntersectingSubfamily max_intersecting_subfamily(const SetFamily& family) {
  check_family(family);
  std::vector<std::size_t> degree(family.ground_size, 0);
  for (const auto& s : family.sets) s.for_each([&](std::size_t x) { ++degree[x]; });
  IntersectingSubfamily out;
  for (std::size_t x = 0; x < family.ground_size; ++x) {
    if (degree[x] > out.size) {
      out.size = degree[x];
      out.witness_point = x;
    }
  }
  if (out.witness_point) {
    for (std::size_t i = 0; i < family.sets.size(); ++i) {
      if (family.sets[i].contains(*out.witness_point)) out.member_indices.push_back(i);
    }
  }
  return out;
}

Real optimal_beta(const Rational& alpha, std::size_t d) {
  if (alpha <= 0 || alpha >= 1) throw InvalidArgument("optimal_beta: alpha must lie in (0, 1), got " + to_string(alpha));
  const Rational gap = 1 - alpha;
  const Real rest = Real(numerator(gap)) / Real(denominator(gap));
  return Real(1) - boost::multiprecision::pow(rest, Real(1) / Real(d + 1));
}

FHReport fh_report(const SetFamily& family, std::size_t k) {
  FHReport r;
  r.n = family.sets.size();
  r.k = k;
  r.intersecting_k_tuples = count_intersecting_tuples(family, k);
  r.alpha = Rational(r.intersecting_k_tuples, exact_binomial(r.n, k));
  const auto best = max_intersecting_subfamily(family);
  r.max_intersecting = best.size;
  r.beta = Rational(best.size, r.n);
  r.witness_point = best.witness_point;
  return r;
}

}  // namespace convexity
