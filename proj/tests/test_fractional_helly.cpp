#include <random>

#include "doctest.h"

#include "convexity/builtin.hpp"
#include "convexity/combinatorics.hpp"
#include "convexity/errors.hpp"
#include "convexity/fractional_helly.hpp"
#include "oracles.hpp"

using namespace convexity;

namespace {

std::vector<oracle::Mask> masks(const SetFamily& f) {
  std::vector<oracle::Mask> out;
  for (const auto& s : f.sets) out.push_back(oracle::to_mask(s));
  return out;
}

SetFamily random_family(std::mt19937_64& rng, std::size_t ground, std::size_t members, unsigned density) {
  SetFamily f{ground, {}};
  for (std::size_t i = 0; i < members; ++i) {
    PointSet s(ground);
    for (std::size_t p = 0; p < ground; ++p) {
      if (rng() % 100 < density) s.insert(p);
    }
    f.sets.push_back(s);
  }
  return f;
}

// Largest intersecting subfamily by trying every subfamily.
std::size_t largest_intersecting_by_subfamilies(const std::vector<oracle::Mask>& family, std::size_t ground) {
  std::size_t best = 0;
  const oracle::Mask full = (oracle::Mask{1} << ground) - 1;
  for (std::uint32_t pick = 1; pick < (1u << family.size()); ++pick) {
    oracle::Mask meet = full;
    for (std::size_t i = 0; i < family.size(); ++i) {
      if (pick >> i & 1) meet &= family[i];
    }
    if (meet != 0) best = std::max<std::size_t>(best, __builtin_popcount(pick));
  }
  return best;
}

bool close(const Real& a, const Real& b) { return abs(a - b) < Real("1e-40"); }

}  // namespace

TEST_CASE("count_intersecting_tuples examples") {
  CHECK(count_intersecting_tuples(box_lower_bound_family(2, 6), 2) == 9);
  CHECK(count_intersecting_tuples(SetFamily::from_indices(4, {{0}, {1}, {2}, {3}}), 2) == 0);
  CHECK_THROWS_AS(count_intersecting_tuples(SetFamily::from_indices(2, {{0}}), 2), InvalidArgument);
  CHECK_THROWS_AS(count_intersecting_tuples(SetFamily::from_indices(2, {{0}}), 0), InvalidArgument);
}

TEST_CASE("tuple counts match a naive scan") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t ground = 1 + rng() % 10;
    const std::size_t members = 1 + rng() % 12;
    const auto f = random_family(rng, ground, members, 20 + rng() % 60);
    const auto ms = masks(f);
    for (std::size_t k = 1; k <= std::min<std::size_t>(4, members); ++k) {
      CHECK(count_intersecting_tuples(f, k) == oracle::intersecting_tuples(ms, k));
    }
  }
}

TEST_CASE("max_intersecting_subfamily examples") {
  const auto lb = max_intersecting_subfamily(box_lower_bound_family(2, 6));
  CHECK(lb.size == 2);
  CHECK(lb.witness_point == 0u);
  CHECK(lb.member_indices == std::vector<std::size_t>{0, 3});

  const auto same = max_intersecting_subfamily(SetFamily::from_indices(3, {{1, 2}, {1, 2}, {1, 2}}));
  CHECK(same.size == 3);
  CHECK(same.witness_point == 1u);
  CHECK_THROWS_AS(max_intersecting_subfamily(SetFamily{3, {}}), InvalidArgument);
}

TEST_CASE("largest intersecting subfamily matches exhaustive search") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t ground = 1 + rng() % 8;
    const std::size_t members = 1 + rng() % 15;
    const auto f = random_family(rng, ground, members, 10 + rng() % 60);
    const auto ms = masks(f);
    const auto got = max_intersecting_subfamily(f);
    CHECK(got.size == largest_intersecting_by_subfamilies(ms, ground));
    CHECK(got.size == oracle::max_intersecting(ms));
    CHECK(got.member_indices.size() == got.size);
    if (got.witness_point) {
      for (auto i : got.member_indices) CHECK(f.sets[i].contains(*got.witness_point));
    }
  }
}

TEST_CASE("adding a set never lowers the counts") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t ground = 2 + rng() % 7;
    auto f = random_family(rng, ground, 2 + rng() % 8, 40);
    const auto before_max = max_intersecting_subfamily(f).size;
    const auto before_pairs = count_intersecting_tuples(f, 2);
    f.sets.push_back(random_family(rng, ground, 1, 50).sets[0]);
    CHECK(max_intersecting_subfamily(f).size >= before_max);
    CHECK(count_intersecting_tuples(f, 2) >= before_pairs);
  }
}

TEST_CASE("optimal_beta examples") {
  CHECK(close(optimal_beta(Rational(3, 4), 1), Real("0.5")));
  for (std::size_t d = 1; d <= 5; ++d) {
    const Rational alpha = 1 - Rational(1, 1 << (d + 1));
    CHECK(close(optimal_beta(alpha, d), Real("0.5")));
  }
  const Rational near_one = 1 - Rational(1, Integer(1) << 200);
  CHECK(optimal_beta(near_one, 1) > Real("0.999999"));
  CHECK(optimal_beta(Rational(1, 1000), 2) < Real("0.001"));
  CHECK_THROWS_AS(optimal_beta(0, 1), InvalidArgument);
  CHECK_THROWS_AS(optimal_beta(1, 1), InvalidArgument);
  CHECK_THROWS_AS(optimal_beta(Rational(3, 2), 1), InvalidArgument);
  CHECK(to_string(optimal_beta(Rational(3, 5), 2), 12) == "0.263193700272");
}

TEST_CASE("fh_report examples") {
  const auto report = fh_report(box_lower_bound_family(2, 6), 2);
  CHECK(report.n == 6);
  CHECK(report.intersecting_k_tuples == 9);
  CHECK(report.alpha == Rational(9, 15));
  CHECK(report.max_intersecting == 2);
  CHECK(report.beta == Rational(2, 6));

  const auto single = fh_report(SetFamily::from_indices(2, {{1}}), 1);
  CHECK(single.alpha == 1);
  CHECK(single.beta == 1);
  const auto empty_member = fh_report(SetFamily::from_indices(2, {{}}), 1);
  CHECK(empty_member.alpha == 0);
}

TEST_CASE("lower-bound family counts for several parameters") {
  for (std::size_t d = 1; d <= 3; ++d) {
    for (std::size_t side = 1; side <= 3; ++side) {
      const std::size_t n = d * side;
      if (n < d) continue;
      const auto f = box_lower_bound_family(d, n);
      const auto report = fh_report(f, d);
      std::size_t expected = 1;
      for (std::size_t i = 0; i < d; ++i) expected *= side;
      CHECK(report.alpha * Rational(Integer(binomial(n, d))) == Rational(expected));
      CHECK(report.beta * n == Rational(d));
      // Any d + 1 members include two parallel slabs, which are disjoint.
      if (d + 1 <= n && side > 1) CHECK(count_intersecting_tuples(f, d + 1) == 0);
    }
  }
}

TEST_CASE("reports on lattice families are consistent with the base operations") {
  std::mt19937_64 rng(24);
  const auto space = make_lattice_space(2, 3);
  const auto& convex = enumerate_convex_sets(space);
  for (int trial = 0; trial < 40; ++trial) {
    SetFamily f{9, {}};
    for (std::size_t i = 0, m = 2 + rng() % 8; i < m; ++i) f.sets.push_back(convex[1 + rng() % (convex.size() - 1)]);
    const std::size_t k = 1 + rng() % f.sets.size();
    const auto report = fh_report(f, k);
    CHECK(report.alpha == Rational(count_intersecting_tuples(f, k)) / Rational(Integer(binomial(f.sets.size(), k))));
    CHECK(report.beta == Rational(max_intersecting_subfamily(f).size) / Rational(f.sets.size()));
  }
}
