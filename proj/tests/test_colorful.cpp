#include <random>
#include <set>

#include "doctest.h"

#include "convexity/builtin.hpp"
#include "convexity/colorful.hpp"
#include "convexity/combinatorics.hpp"
#include "convexity/errors.hpp"
#include "convexity/invariants.hpp"
#include "convexity/partite.hpp"
#include "oracles.hpp"

using namespace convexity;

namespace {

// Recomputes every claim of a certificate from scratch with mask hulls.
bool independent_certificate_check(const ConvexitySpace& space, const std::vector<LabeledFunction>& fs, std::size_t r,
                                   const SeparatedPairCertificate& cert) {
  const auto hull = oracle::library_hull(space);
  const oracle::Mask gamma = oracle::to_mask(cert.gamma.gamma);
  const oracle::Mask full = (oracle::Mask{1} << space.size()) - 1;
  if (hull(gamma) != gamma || hull(full & ~gamma) != (full & ~gamma)) return false;
  if (cert.i == cert.j || cert.i >= fs.size() || cert.j >= fs.size()) return false;
  const std::size_t e = fs[0].domain_size();
  std::size_t count = 0;
  for (std::size_t x = 0; x < e; ++x) {
    if (!cert.e0.contains(x)) continue;
    ++count;
    if (!(gamma >> fs[cert.i].values[x] & 1)) return false;
    if (gamma >> fs[cert.j].values[x] & 1) return false;
  }
  return count * (r - 1) >= e;
}

bool hulls_meet(const ConvexitySpace& space, const std::vector<LabeledFunction>& fs) {
  PointSet meet = space.full_set();
  for (const auto& f : fs) meet &= space.hull(f.image(space.size()));
  return !meet.empty();
}

struct Host {
  ConvexitySpace space;
  std::size_t r;
};

std::vector<Host> hosts() {
  std::vector<Host> out;
  for (auto space : {make_box_space(1, 5), make_box_space(2, 3), make_lattice_space(2, 3), make_box_space(2, 4)}) {
    const auto r = radon_number(space);
    REQUIRE(r);
    out.push_back({space, *r});
  }
  return out;
}

// Independent scan for a pair u != v in A and a halfspace separating the
// images of their edge sets inside `selection`.
bool separable_by_scan(const ConvexitySpace& space, const CompletePartiteHypergraph& h, const LabeledFunction& f,
                       const PartiteSelection& selection, std::size_t cls, const std::vector<std::size_t>& a) {
  const auto hull = oracle::library_hull(space);
  const auto hs = oracle::halfspaces(hull, space.size());
  auto image = [&](std::size_t w) {
    oracle::Mask out = 0;
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
      const auto tuple = h.edge_tuple(e);
      bool inside = tuple[cls] == w;
      for (std::size_t c = 0; c < h.k() && inside; ++c) {
        if (c == cls) continue;
        inside = std::find(selection[c].begin(), selection[c].end(), tuple[c]) != selection[c].end();
      }
      if (inside) out |= oracle::Mask{1} << f.values[e];
    }
    return out;
  };
  for (auto u : a) {
    for (auto v : a) {
      if (u == v) continue;
      for (auto g : hs) {
        if ((image(u) & ~g) == 0 && (image(v) & g) == 0) return true;
      }
    }
  }
  return false;
}

std::vector<PointSet> columns_of_3x3() {
  return {PointSet(9, {0, 1, 2}), PointSet(9, {3, 4, 5}), PointSet(9, {6, 7, 8})};
}

std::vector<PointSet> rows_of_3x3() {
  return {PointSet(9, {0, 3, 6}), PointSet(9, {1, 4, 7}), PointSet(9, {2, 5, 8})};
}

PointSet interval(std::size_t n, std::size_t a, std::size_t b) {
  PointSet s(n);
  for (std::size_t i = a; i <= b; ++i) s.insert(i);
  return s;
}

}  // namespace

TEST_CASE("weight examples") {
  const LabeledFunction f{{0, 0, 2, 1}};
  CHECK(weight(f, PointSet(3)) == 0);
  CHECK(weight(f, f.image(3)) == 4);
  CHECK(weight(f, PointSet(3, {0})) == 2);
  CHECK(f.image(3) == PointSet(3, {0, 1, 2}));
}

TEST_CASE("large_separated_pairs on a three point chain") {
  const auto chain = make_box_space(1, 3);
  const std::vector<LabeledFunction> fs{{{0, 0}}, {{2, 2}}};
  const auto result = large_separated_pairs(chain, fs, 3);
  const auto& cert = result.certificate;
  CHECK(cert.e0 == PointSet(2, {0, 1}));
  // x0 is the smallest common point of the heavy hulls, so the second function
  // is the one kept away from it.
  CHECK(result.trace.x0 == 0);
  CHECK(cert.i == 1);
  CHECK(cert.j == 0);
  CHECK(cert.gamma.gamma.contains(2));
  CHECK(cert.gamma.complement.contains(0));
  CHECK(verify_separated_pair(chain, fs, 3, cert));
  CHECK(independent_certificate_check(chain, fs, 3, cert));

  CHECK_THROWS_WITH_AS(large_separated_pairs(chain, {fs[0], fs[0]}, 3), doctest::Contains("hulls intersect"),
                       HypothesisViolation);
  CHECK_THROWS_AS(large_separated_pairs(chain, {fs[0]}, 3), InvalidArgument);
  CHECK_THROWS_AS(large_separated_pairs(chain, fs, 2), InvalidArgument);
}

TEST_CASE("large_separated_pairs certificates verify on random instances") {
  std::mt19937_64 rng(41);
  const auto hs = hosts();
  std::size_t verified = 0;
  std::size_t attempts = 0;
  while (verified < 200 && attempts < 20000) {
    ++attempts;
    const auto& host = hs[attempts % hs.size()];
    const std::size_t m = 2 + rng() % 2;
    const std::size_t e = 1 + rng() % 4;
    std::vector<LabeledFunction> fs(m);
    for (auto& f : fs) {
      // Keep each image inside a small random box so disjoint hulls are common.
      const std::size_t anchor = rng() % host.space.size();
      for (std::size_t x = 0; x < e; ++x) {
        f.values.push_back(rng() % 3 == 0 ? rng() % host.space.size() : anchor);
      }
    }
    if (hulls_meet(host.space, fs)) continue;
    const auto result = large_separated_pairs(host.space, fs, host.r);
    const auto& cert = result.certificate;
    CHECK(verify_separated_pair(host.space, fs, host.r, cert));
    CHECK(independent_certificate_check(host.space, fs, host.r, cert));

    // The weight inequalities, recomputed.
    const std::size_t n = m * e;
    std::size_t in_gamma = 0;
    std::size_t in_complement = 0;
    for (const auto& f : fs) {
      in_gamma += weight(f, cert.gamma.gamma);
      in_complement += weight(f, cert.gamma.complement);
    }
    CHECK(result.trace.total_weight == n);
    CHECK(in_gamma * (host.r - 1) <= (host.r - 2) * n);
    CHECK(in_complement * (host.r - 1) >= n);
    CHECK(weight(fs[cert.i], cert.gamma.complement) == 0);
    CHECK(cert.gamma.complement.contains(result.trace.x0));
    CHECK(result.trace.weight_in_gamma == in_gamma);
    CHECK(result.trace.weight_in_complement == in_complement);
    ++verified;
  }
  CHECK(verified == 200);
}

TEST_CASE("large_separated_pairs reports a space without the radon premise") {
  // In the 2x2 lattice every subset is convex, so no radon number exists and
  // the heavy hulls of four distinct points have no common point.
  const auto lattice = make_lattice_space(2, 2);
  const std::vector<LabeledFunction> fs{{{0}}, {{1}}, {{2}}, {{3}}};
  CHECK_THROWS_AS(large_separated_pairs(lattice, fs, 3), HypothesisViolation);
}

TEST_CASE("check_separable_subset examples") {
  const auto chain = make_box_space(1, 3);
  const auto h = CompletePartiteHypergraph::uniform(2, 2);
  const PartiteSelection all{{0, 1}, {0, 1}};
  CHECK_FALSE(check_separable_subset(chain, h, LabeledFunction{{1, 1, 1, 1}}, all, 1, {0, 1}));

  const LabeledFunction split{{0, 2, 0, 2}};
  const auto w = check_separable_subset(chain, h, split, all, 1, {0, 1});
  REQUIRE(w);
  CHECK(w->u == 0);
  CHECK(w->v == 1);
  CHECK(w->gamma.gamma == PointSet(3, {0}));
}

TEST_CASE("check_separable_subset agrees with an independent scan") {
  std::mt19937_64 rng(43);
  const auto space = make_box_space(2, 3);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t k = 2 + rng() % 2;
    const auto h = CompletePartiteHypergraph::uniform(k, 3);
    LabeledFunction f;
    for (std::size_t e = 0; e < h.edge_count(); ++e) f.values.push_back(rng() % 9);
    PartiteSelection selection(k);
    for (auto& cls : selection) {
      for (std::size_t p = 0; p < 3; ++p) {
        if (rng() % 3 != 0) cls.push_back(p);
      }
      if (cls.empty()) cls.push_back(rng() % 3);
    }
    const std::size_t cls = rng() % k;
    const auto& a = selection[cls];
    const auto got = check_separable_subset(space, h, f, selection, cls, a);
    CHECK(got.has_value() == separable_by_scan(space, h, f, selection, cls, a));
    if (got) {
      CHECK(got->u != got->v);
      PartiteSelection only_u = selection;
      only_u[cls] = {got->u};
      for (auto e : selection_edges(h, only_u)) CHECK(got->gamma.gamma.contains(f.values[e]));
      PartiteSelection only_v = selection;
      only_v[cls] = {got->v};
      for (auto e : selection_edges(h, only_v)) CHECK(got->gamma.complement.contains(f.values[e]));
    }
  }
}

TEST_CASE("refine_for_any_f with a constant function") {
  const auto chain = make_box_space(1, 3);
  const auto h = CompletePartiteHypergraph::uniform(2, 3);
  const LabeledFunction f{std::vector<std::size_t>(9, 1)};
  const auto out = refine_for_any_f(chain, h, f, 3, 2, 3);
  const auto* hit = std::get_if<RefineIntersecting>(&out);
  REQUIRE(hit);
  CHECK(hit->point == 1);
  CHECK(hit->a == std::vector<std::size_t>{0, 1});
}

TEST_CASE("refine_for_any_f separating two points") {
  const auto chain = make_box_space(1, 3);
  const auto h = CompletePartiteHypergraph::uniform(2, 2);
  const LabeledFunction f{{0, 2, 0, 2}};
  const auto out = refine_for_any_f(chain, h, f, 2, 2, 3);
  const auto* sep = std::get_if<RefineSeparated>(&out);
  REQUIRE(sep);
  CHECK(sep->w == PartiteSelection{{0, 1}, {0, 1}});
  REQUIRE(sep->separations.size() == 1);
  const auto again = check_separable_subset(chain, h, f, sep->w, 1, sep->separations[0].a);
  CHECK(again.has_value());
  CHECK(separable_by_scan(chain, h, f, sep->w, 1, {0, 1}));
}

TEST_CASE("refine_for_any_f stalls at the partite finder on a tiny instance") {
  const auto box = make_box_space(2, 3);
  const auto h = CompletePartiteHypergraph::uniform(2, 3);
  const LabeledFunction f{{5, 2, 4, 5, 0, 5, 5, 0, 6}};
  const auto out = refine_for_any_f(box, h, f, 3, 2, 4);
  const auto* inc = std::get_if<Inconclusive>(&out);
  REQUIRE(inc);
  CHECK(inc->stage == "partite-finder");
}

TEST_CASE("refine_for_any_f outcomes re-verify on random instances") {
  std::mt19937_64 rng(47);
  const auto space = make_box_space(2, 3);
  std::size_t separated = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t k = 2 + rng() % 2;
    const std::size_t t = 2 + rng() % 2;
    const auto h = CompletePartiteHypergraph::uniform(k, t);
    LabeledFunction f;
    for (std::size_t e = 0; e < h.edge_count(); ++e) f.values.push_back(rng() % 9);
    const auto out = refine_for_any_f(space, h, f, 2, 2, 4);
    if (const auto* hit = std::get_if<RefineIntersecting>(&out)) {
      PointSet meet = space.full_set();
      for (auto v : hit->a) {
        PartiteSelection sel(k);
        for (std::size_t c = 0; c + 1 < k; ++c) {
          for (std::size_t p = 0; p < t; ++p) sel[c].push_back(p);
        }
        sel[k - 1] = {v};
        PointSet img(9);
        for (auto e : selection_edges(h, sel)) img.insert(f.values[e]);
        meet &= space.hull(img);
      }
      CHECK(meet.contains(hit->point));
    } else if (const auto* sep = std::get_if<RefineSeparated>(&out)) {
      ++separated;
      for (const auto& cls : sep->w) CHECK(cls.size() == 2);
      for (const auto& s : sep->separations) {
        CHECK(separable_by_scan(space, h, f, sep->w, k - 1, s.a));
      }
    }
  }
  CHECK(separated > 0);
}

TEST_CASE("refine_for_any_f structural errors") {
  const auto chain = make_box_space(1, 3);
  const auto h = CompletePartiteHypergraph::uniform(2, 2);
  const LabeledFunction f{{0, 2, 0, 2}};
  CHECK_THROWS_AS(refine_for_any_f(chain, h, f, 3, 2, 3), InvalidArgument);
  CHECK_THROWS_AS(refine_for_any_f(chain, h, f, 2, 3, 3), InvalidArgument);
  CHECK_THROWS_AS(refine_for_any_f(chain, h, f, 2, 1, 3), InvalidArgument);
  CHECK_THROWS_AS(refine_for_any_f(chain, h, LabeledFunction{{0, 1}}, 2, 2, 3), InvalidArgument);
}

TEST_CASE("weak_colorful_run with a shared point") {
  const auto box = make_box_space(2, 3);
  ColorfulInstance inst;
  inst.families = {{PointSet(9, {4}), PointSet(9, {3, 4}), PointSet(9, {4, 5})},
                   {PointSet(9, {1, 4}), PointSet(9, {4, 7}), PointSet::full(9)}};
  inst.m = 2;
  inst.r = 4;
  const auto out = weak_colorful_run(box, inst);
  const auto* w = std::get_if<MTupleWitness>(&out);
  REQUIRE(w);
  CHECK(w->family == 0);
  CHECK(w->members == std::vector<std::size_t>{0, 1});
  CHECK(w->point == 4);
  CHECK(verify_colorful_outcome(box, inst, out));
}

TEST_CASE("weak_colorful_run reaches a venn certificate on columns and rows") {
  const auto box = make_box_space(2, 3);
  ColorfulInstance inst{{columns_of_3x3(), rows_of_3x3()}, 2, 4};
  const auto out = weak_colorful_run(box, inst);
  const auto* venn = std::get_if<VennCertificate>(&out);
  REQUIRE(venn);
  CHECK(venn->classes.size() == 2);
  REQUIRE(venn->patterns.size() == 4);
  std::set<std::vector<bool>> seen;
  for (const auto& p : venn->patterns) {
    seen.insert(p.inside);
    // Re-derive the image from the edge and the sign pattern from the halfspaces.
    PointSet meet = box.full_set();
    for (std::size_t c = 0; c < 2; ++c) meet &= inst.families[c][p.edge[c]];
    CHECK(p.image == meet.indices().front());
    for (std::size_t c = 0; c < 2; ++c) CHECK(venn->classes[c].gamma.gamma.contains(p.image) == p.inside[c]);
  }
  CHECK(seen.size() == 4);
  // The two halfspaces really are halfspaces of the box grid.
  for (const auto& c : venn->classes) {
    CHECK(is_convex(box, c.gamma.gamma));
    CHECK(is_convex(box, c.gamma.complement));
  }
  CHECK(verify_colorful_outcome(box, inst, out));

  VennCertificate broken = *venn;
  broken.patterns[0].image = (broken.patterns[0].image + 1) % 9;
  CHECK_FALSE(verify_colorful_outcome(box, inst, ColorfulOutcome{broken}));
}

TEST_CASE("weak_colorful_run is deterministic") {
  const auto box = make_box_space(2, 3);
  ColorfulInstance inst{{columns_of_3x3(), rows_of_3x3()}, 2, 4};
  CHECK(weak_colorful_run(box, inst) == weak_colorful_run(box, inst));
  const auto chain = make_box_space(1, 3);
  const std::vector<LabeledFunction> fs{{{0, 0}}, {{2, 2}}};
  CHECK(large_separated_pairs(chain, fs, 3) == large_separated_pairs(chain, fs, 3));
}

TEST_CASE("weak_colorful_run with one member per family") {
  const auto box = make_box_space(2, 3);
  ColorfulInstance inst{{{PointSet(9, {0, 1})}, {PointSet(9, {1, 2})}}, 2, 4};
  const auto out = weak_colorful_run(box, inst);
  const auto* inc = std::get_if<Inconclusive>(&out);
  REQUIRE(inc);
  CHECK(inc->stage == "threshold");
}

TEST_CASE("weak_colorful_run hypothesis violations") {
  const auto box = make_box_space(2, 3);
  ColorfulInstance disjoint{{{PointSet(9, {0}), PointSet(9, {1})}, {PointSet(9, {0}), PointSet(9, {8})}}, 2, 4};
  CHECK_THROWS_WITH_AS(weak_colorful_run(box, disjoint), doctest::Contains("empty intersection"), HypothesisViolation);
  ColorfulInstance nonconvex{{{PointSet(9, {0, 8}), PointSet(9, {0})}, {PointSet(9, {0}), PointSet(9, {0})}}, 2, 4};
  CHECK_THROWS_AS(weak_colorful_run(box, nonconvex), HypothesisViolation);
  ColorfulInstance uneven{{{PointSet(9, {0})}, {PointSet(9, {0}), PointSet(9, {0})}}, 2, 4};
  CHECK_THROWS_AS(weak_colorful_run(box, uneven), InvalidArgument);
}

TEST_CASE("chain instances never produce a venn certificate") {
  std::mt19937_64 rng(53);
  const std::size_t n = 5;
  const auto chain = make_box_space(1, n);
  std::size_t runs = 0;
  for (int trial = 0; trial < 3000 && runs < 150; ++trial) {
    const std::size_t p = 2 + rng() % 3;
    ColorfulInstance inst;
    inst.m = 2;
    inst.r = 3;
    inst.families.resize(2);
    for (auto& fam : inst.families) {
      for (std::size_t i = 0; i < p; ++i) {
        std::size_t a = rng() % n, b = rng() % n;
        if (a > b) std::swap(a, b);
        fam.push_back(interval(n, a, b));
      }
    }
    bool colorful = true;
    for (const auto& a : inst.families[0]) {
      for (const auto& b : inst.families[1]) colorful = colorful && !(a & b).empty();
    }
    if (!colorful) continue;
    ++runs;
    const auto out = weak_colorful_run(chain, inst);
    CHECK_FALSE(std::holds_alternative<VennCertificate>(out));
    CHECK(verify_colorful_outcome(chain, inst, out));
  }
  CHECK(runs == 150);
}
