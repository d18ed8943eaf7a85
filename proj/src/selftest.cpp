#include "convexity/selftest.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "convexity/bk_embed.hpp"
#include "convexity/builtin.hpp"
#include "convexity/colorful.hpp"
#include "convexity/combinatorics.hpp"
#include "convexity/errors.hpp"
#include "convexity/fractional_helly.hpp"
#include "convexity/invariants.hpp"
#include "convexity/io.hpp"
#include "convexity/partite.hpp"

namespace convexity {

bool SelftestSummary::ok() const { return failures() == 0; }

std::size_t SelftestSummary::failures() const {
  return static_cast<std::size_t>(std::count_if(results.begin(), results.end(), [](const auto& r) { return !r.passed; }));
}

namespace {

using Rng = std::mt19937_64;

// Collects the first counterexample per property.
class Suite {
 public:
  explicit Suite(SelftestSummary& summary) : summary_(summary) {}

  void run(const std::string& module, const std::string& property, const std::function<void(std::string&)>& body) {
    PropertyResult result{module, property, true, ""};
    std::string witness;
    try {
      body(witness);
    } catch (const std::exception& err) {
      witness = std::string("exception: ") + err.what();
    }
    if (!witness.empty()) {
      result.passed = false;
      result.witness = witness;
    }
    summary_.results.push_back(std::move(result));
  }

 private:
  SelftestSummary& summary_;
};

PointSet random_subset(Rng& rng, std::size_t universe, double p = 0.5) {
  std::bernoulli_distribution coin(p);
  PointSet s(universe);
  for (std::size_t x = 0; x < universe; ++x) {
    if (coin(rng)) s.insert(x);
  }
  return s;
}

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); }

SetFamily random_family(Rng& rng, std::size_t ground, std::size_t members, double p = 0.5) {
  SetFamily f{ground, {}};
  for (std::size_t i = 0; i < members; ++i) f.sets.push_back(random_subset(rng, ground, p));
  return f;
}

std::vector<ConvexitySpace> builtin_spaces() {
  return {make_box_space(1, 4), make_box_space(1, 6), make_box_space(2, 2), make_box_space(2, 3),
          make_lattice_space(1, 5), make_lattice_space(2, 2), make_lattice_space(2, 3)};
}

std::vector<ConvexitySpace> random_spaces(Rng& rng, std::size_t count) {
  std::vector<ConvexitySpace> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = pick(rng, 3, 8);
    out.push_back(make_explicit_space(random_family(rng, n, pick(rng, 1, 6))));
  }
  return out;
}

void space_core(Suite& suite, const std::vector<ConvexitySpace>& spaces) {
  suite.run("space-core", "check_axioms", [&](std::string& w) {
    for (const auto& s : spaces) {
      const auto report = check_axioms(s);
      for (const auto& c : report.checks) {
        if (c.status == AxiomCheck::Status::fail && w.empty()) w = s.name() + ": " + c.name + " " + c.witness;
      }
    }
  });
  suite.run("space-core", "halfspaces closed under complement", [&](std::string& w) {
    for (const auto& s : spaces) {
      const auto& hs = enumerate_halfspaces(s);
      std::vector<PointSet> gammas;
      for (const auto& h : hs) gammas.push_back(h.gamma);
      for (const auto& h : hs) {
        if (std::find(gammas.begin(), gammas.end(), h.complement) == gammas.end() && w.empty()) {
          w = s.name() + ": complement of " + h.gamma.to_string() + " missing";
        }
      }
      const bool has_ends = std::find(gammas.begin(), gammas.end(), s.empty_set()) != gammas.end() &&
                            std::find(gammas.begin(), gammas.end(), s.full_set()) != gammas.end();
      if (!has_ends && w.empty()) w = s.name() + ": empty set or X is not listed as a halfspace";
    }
  });
  suite.run("space-core", "separate never fails on separable spaces", [&](std::string& w) {
    for (const auto& s : spaces) {
      if (!is_separable(s).separable) continue;
      for (const auto& c : enumerate_convex_sets(s)) {
        for (std::size_t x = 0; x < s.size(); ++x) {
          if (!c.contains(x) && !separate(s, c, x) && w.empty()) w = s.name() + ": " + c.to_string() + " vs " + std::to_string(x);
        }
      }
    }
  });
}

void builtin(Suite& suite, Rng& rng) {
  suite.run("builtin-spaces", "lattice hull equals box hull on chains", [&](std::string& w) {
    for (std::size_t side = 2; side <= 7; ++side) {
      const auto box = make_box_space(1, side);
      const auto lattice = make_lattice_space(1, side);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << side); ++mask) {
        PointSet y(side);
        for (std::size_t x = 0; x < side; ++x) {
          if (mask >> x & 1) y.insert(x);
        }
        if (box.hull(y) != lattice.hull(y) && w.empty()) w = "side " + std::to_string(side) + " Y = " + y.to_string();
      }
    }
  });
  suite.run("builtin-spaces", "bk_embed atoms, nerve and certificates", [&](std::string& w) {
    for (int trial = 0; trial < 40 && w.empty(); ++trial) {
      const SetFamily f = random_family(rng, pick(rng, 1, 6), pick(rng, 1, 5));
      const auto e = bk_embed(f);
      if (e.atom_points.size() != venn_atoms(f).size()) w = "atom count differs from the Venn atoms";
      else if (!verify_nerve_isomorphism(f, e.sets)) w = "nerve differs";
      else if (!verify_bk_certificates(e)) w = "certificate fails";
      if (!w.empty()) w += " on " + to_json(f).dump();
    }
  });
  suite.run("builtin-spaces", "lower-bound family counts", [&](std::string& w) {
    for (std::size_t d = 1; d <= 3; ++d) {
      for (std::size_t q = 1; q <= 3; ++q) {
        const SetFamily f = box_lower_bound_family(d, d * q);
        Integer expected = 1;
        for (std::size_t i = 0; i < d; ++i) expected *= q;
        if (count_intersecting_tuples(f, d) != expected && w.empty()) {
          w = "d=" + std::to_string(d) + " n=" + std::to_string(d * q) + ": tuple count";
        }
        if (f.sets.size() > d && count_intersecting_tuples(f, d + 1) != 0 && w.empty()) {
          w = "d=" + std::to_string(d) + " n=" + std::to_string(d * q) + ": some d+1 members intersect";
        }
      }
    }
  });
}

void invariants(Suite& suite, const std::vector<ConvexitySpace>& spaces, Rng& rng) {
  suite.run("invariants", "radon monotonicity", [&](std::string& w) {
    for (const auto& s : spaces) {
      if (s.size() > 10) continue;
      HullMemo memo(s);
      bool all_so_far = false;
      for (std::size_t n = 1; n <= s.size(); ++n) {
        const bool all = !subset_without_radon_partition(memo, n);
        if (all_so_far && !all && w.empty()) w = s.name() + " at n = " + std::to_string(n);
        all_so_far = all_so_far || all;
      }
    }
  });
  suite.run("invariants", "helly methods agree", [&](std::string& w) {
    for (const auto& s : spaces) {
      if (s.size() > 12) continue;
      const auto a = helly_number_independence(s).number;
      const auto b = helly_number_direct(s);
      if (a != b && w.empty()) w = s.name() + ": " + std::to_string(a) + " vs " + std::to_string(b);
    }
  });
  suite.run("invariants", "levi", [&](std::string& w) {
    for (const auto& s : spaces) {
      const auto radon = radon_number(s);
      const auto helly = helly_number_independence(s).number;
      if (radon && helly >= *radon && w.empty()) w = s.name();
    }
  });
  suite.run("invariants", "dual shatter matches dual VC", [&](std::string& w) {
    for (int trial = 0; trial < 30 && w.empty(); ++trial) {
      const SetFamily f = random_family(rng, pick(rng, 1, 10), pick(rng, 1, 6));
      const std::size_t d = dual_vc_dimension(f);
      for (std::size_t k = 1; k <= d; ++k) {
        if (dual_shatter(f, k) != (std::size_t{1} << k)) w = "k = " + std::to_string(k);
      }
      if (d + 1 <= f.sets.size() && dual_shatter(f, d + 1) >= (std::size_t{1} << (d + 1))) w = "k = d + 1";
      if (!w.empty()) w += " on " + to_json(f).dump();
    }
  });
  suite.run("invariants", "venn atoms partition X", [&](std::string& w) {
    for (int trial = 0; trial < 30 && w.empty(); ++trial) {
      const SetFamily f = random_family(rng, pick(rng, 1, 10), pick(rng, 0, 5));
      const auto atoms = venn_atoms(f);
      PointSet seen(f.ground_size);
      std::size_t total = 0;
      for (std::size_t a = 0; a < atoms.size(); ++a) {
        seen |= atoms[a].atom;
        total += atoms[a].atom.size();
        for (std::size_t b = 0; b < a; ++b) {
          if (atoms[a].signature == atoms[b].signature) w = "repeated signature";
        }
      }
      if (total != f.ground_size || seen != PointSet::full(f.ground_size)) w = "atoms do not partition X";
      if (!w.empty()) w += " on " + to_json(f).dump();
    }
  });
  suite.run("invariants", "bounds hold", [&](std::string& w) {
    for (const auto& s : spaces) {
      for (const auto& b : check_bounds(s)) {
        if (b.applicable && !b.holds && w.empty()) w = s.name() + ": " + b.name + " " + b.data;
      }
    }
  });
}

Integer naive_tuples(const SetFamily& f, std::size_t k) {
  Integer count = 0;
  const std::size_t n = f.sets.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != k) continue;
    PointSet meet = PointSet::full(f.ground_size);
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) meet &= f.sets[i];
    }
    if (!meet.empty()) ++count;
  }
  return count;
}

void fractional(Suite& suite, Rng& rng) {
  suite.run("fractional-helly", "tuple count matches naive scan", [&](std::string& w) {
    for (int trial = 0; trial < 40 && w.empty(); ++trial) {
      const SetFamily f = random_family(rng, pick(rng, 1, 8), pick(rng, 1, 12), 0.6);
      const std::size_t k = pick(rng, 1, std::min<std::size_t>(4, f.sets.size()));
      if (count_intersecting_tuples(f, k) != naive_tuples(f, k)) w = "k = " + std::to_string(k) + " on " + to_json(f).dump();
    }
  });
  suite.run("fractional-helly", "max intersecting subfamily matches brute force", [&](std::string& w) {
    for (int trial = 0; trial < 30 && w.empty(); ++trial) {
      const SetFamily f = random_family(rng, pick(rng, 1, 8), pick(rng, 1, 10));
      std::size_t best = 0;
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << f.sets.size()); ++mask) {
        PointSet meet = PointSet::full(f.ground_size);
        for (std::size_t i = 0; i < f.sets.size(); ++i) {
          if (mask >> i & 1) meet &= f.sets[i];
        }
        if (!meet.empty()) best = std::max<std::size_t>(best, __builtin_popcountll(mask));
      }
      if (max_intersecting_subfamily(f).size != best) w = to_json(f).dump();
    }
  });
  suite.run("fractional-helly", "monotone under adding a set", [&](std::string& w) {
    for (int trial = 0; trial < 30 && w.empty(); ++trial) {
      SetFamily f = random_family(rng, pick(rng, 1, 8), pick(rng, 1, 8));
      const std::size_t k = pick(rng, 1, f.sets.size());
      const auto before_max = max_intersecting_subfamily(f).size;
      const auto before_count = count_intersecting_tuples(f, k);
      f.sets.push_back(random_subset(rng, f.ground_size));
      if (max_intersecting_subfamily(f).size < before_max || count_intersecting_tuples(f, k) < before_count) {
        w = to_json(f).dump();
      }
    }
  });
  suite.run("fractional-helly", "lower-bound family alpha and beta", [&](std::string& w) {
    for (std::size_t d = 1; d <= 3; ++d) {
      for (std::size_t q = 1; q <= 3; ++q) {
        const auto r = fh_report(box_lower_bound_family(d, d * q), d);
        Integer power = 1;
        for (std::size_t i = 0; i < d; ++i) power *= q;
        if (r.alpha * binomial(d * q, d) != Rational(power) || r.beta * (d * q) != Rational(d)) {
          if (w.empty()) w = "d=" + std::to_string(d) + " n=" + std::to_string(d * q);
        }
      }
    }
  });
}

// Chain/box/lattice grids with a known Radon number, used as hosts for
// random separated-pair instances.
struct Host {
  ConvexitySpace space;
  std::size_t r;
};

void colorful(Suite& suite, Rng& rng) {
  std::vector<Host> hosts;
  for (auto s : {make_box_space(1, 5), make_box_space(2, 3), make_lattice_space(2, 3), make_box_space(2, 4)}) {
    hosts.push_back({s, *radon_number(s)});
  }
  suite.run("colorful-pipeline", "separated-pair certificates verify", [&](std::string& w) {
    int done = 0;
    for (int attempt = 0; attempt < 2000 && done < 40 && w.empty(); ++attempt) {
      const Host& host = hosts[pick(rng, 0, hosts.size() - 1)];
      const std::size_t m = pick(rng, 2, 3);
      const std::size_t e = pick(rng, 1, 4);
      std::vector<LabeledFunction> fs(m);
      PointSet meet = host.space.full_set();
      for (auto& f : fs) {
        for (std::size_t i = 0; i < e; ++i) f.values.push_back(pick(rng, 0, host.space.size() - 1));
        meet &= host.space.hull(f.image(host.space.size()));
      }
      if (!meet.empty()) continue;
      ++done;
      const auto result = large_separated_pairs(host.space, fs, host.r);
      std::string why;
      if (!verify_separated_pair(host.space, fs, host.r, result.certificate, &why)) w = why;
      const auto& t = result.trace;
      const std::size_t n = t.total_weight;
      if ((host.r - 1) * t.weight_in_gamma > (host.r - 2) * n || (host.r - 1) * t.weight_in_complement < n ||
          weight(fs[result.certificate.i], result.certificate.gamma.complement) != 0) {
        w = "proof inequalities fail";
      }
      if (!w.empty()) w += " on " + host.space.name();
    }
  });
  suite.run("colorful-pipeline", "partite finder agrees with exhaustive search", [&](std::string& w) {
    for (int trial = 0; trial < 30 && w.empty(); ++trial) {
      const auto h = CompletePartiteHypergraph::uniform(pick(rng, 1, 3), pick(rng, 1, 3));
      const PointSet kept = random_subset(rng, h.edge_count(), 0.8);
      const std::size_t s = pick(rng, 1, h.class_size(0));
      const auto found = find_complete_partite(h, kept, s);
      if (found && !selection_inside(h, kept, *found)) w = "unsound selection";
      // Exhaustive: every choice of s positions per class.
      std::size_t copies = 0;
      std::vector<std::vector<std::size_t>> combos;
      std::vector<std::size_t> c = first_combination(s);
      do combos.push_back(c);
      while (next_combination_lex(c, h.class_size(0)));
      std::vector<std::size_t> digit(h.k(), 0);
      while (true) {
        PartiteSelection sel;
        for (std::size_t i = 0; i < h.k(); ++i) sel.push_back(combos[digit[i]]);
        if (selection_inside(h, kept, sel)) ++copies;
        std::size_t i = 0;
        while (i < h.k() && ++digit[i] == combos.size()) digit[i++] = 0;
        if (i == h.k()) break;
      }
      if ((copies > 0) != found.has_value() || count_partite_copies(h, kept, s) != copies) w = "count or existence differs";
    }
  });
  suite.run("colorful-pipeline", "weak colorful outcomes verify", [&](std::string& w) {
    const auto grid = make_box_space(2, 3);
    ColorfulInstance shared;
    shared.m = 2;
    shared.r = 4;
    for (int i = 0; i < 2; ++i) {
      std::vector<PointSet> family;
      for (std::size_t c = 0; c < 3; ++c) family.push_back(grid.hull(PointSet(9, {4, c})));
      shared.families.push_back(family);
    }
    ColorfulInstance venn;
    venn.m = 2;
    venn.r = 4;
    std::vector<PointSet> columns, rows;
    for (std::size_t c = 0; c < 3; ++c) {
      columns.push_back(PointSet(9, {3 * c, 3 * c + 1, 3 * c + 2}));
      rows.push_back(PointSet(9, {c, 3 + c, 6 + c}));
    }
    venn.families = {columns, rows};
    const auto a = weak_colorful_run(grid, shared);
    const auto b = weak_colorful_run(grid, venn);
    std::string why;
    if (!std::holds_alternative<MTupleWitness>(a) || !verify_colorful_outcome(grid, shared, a, &why)) w = "shared point: " + why;
    if (!std::holds_alternative<VennCertificate>(b) || !verify_colorful_outcome(grid, venn, b, &why)) w = "rows and columns: " + why;
    if (weak_colorful_run(grid, venn) != b) w = "rerun differs";
  });
}

void cli_roundtrip(Suite& suite, Rng& rng) {
  suite.run("cli", "documents round-trip", [&](std::string& w) {
    const SetFamily f = random_family(rng, 6, 4);
    if (family_from_json(Json::parse(to_json(f).dump())) != f) w = "set-family";
    SpaceDescriptor d;
    d.kind = SpaceKind::explicit_family;
    d.family = f;
    if (descriptor_from_json(Json::parse(to_json(d).dump())) != d) w = "convexity-space";
    const auto report = compute_invariants(make_box_space(2, 2));
    if (invariants_from_json(Json::parse(to_json(report).dump())) != report) w = "invariant-report";
    const auto fh = fh_report(f, 2);
    if (fh_from_json(Json::parse(to_json(fh).dump())) != fh) w = "fh-report";
    const auto bk = bk_embed(f);
    if (bk_from_json(Json::parse(to_json(bk).dump())) != bk) w = "bk-embedding";
  });
}

}  // namespace

SelftestSummary run_selftest(const SelftestOptions& options) {
  SelftestSummary summary;
  summary.seed = options.seed;
  Suite suite(summary);
  Rng rng(options.seed);

  if (options.fixture) {
    suite.run("space-core", "check_axioms on fixture", [&](std::string& w) {
      const auto space = make_space(*options.fixture);
      for (const auto& c : check_axioms(space).checks) {
        if (c.status == AxiomCheck::Status::fail && w.empty()) w = c.name + ": " + c.witness;
      }
    });
  }
  std::vector<ConvexitySpace> spaces = builtin_spaces();
  for (auto& s : random_spaces(rng, 12)) spaces.push_back(std::move(s));
  space_core(suite, spaces);
  builtin(suite, rng);
  invariants(suite, spaces, rng);
  fractional(suite, rng);
  colorful(suite, rng);
  cli_roundtrip(suite, rng);
  return summary;
}

}  // namespace convexity
