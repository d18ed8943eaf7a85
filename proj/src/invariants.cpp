#include "convexity/invariants.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>
#include <unordered_set>

#include "convexity/combinatorics.hpp"
#include "convexity/errors.hpp"

namespace convexity {

namespace {

void require_cap(const ConvexitySpace& space, std::size_t cap, const char* what) {
  if (space.size() > cap) {
    throw CapExceeded(std::string(what) + " needs |X| <= " + std::to_string(cap) + ", space has " +
                      std::to_string(space.size()) + " points");
  }
}

PointSet from_positions(std::size_t universe, const std::vector<std::size_t>& members,
                        const std::vector<std::size_t>& positions) {
  PointSet s(universe);
  for (std::size_t p : positions) s.insert(members[p]);
  return s;
}

}  // namespace

std::optional<RadonPartition> radon_partition(HullMemo& hulls, const PointSet& y) {
  const auto members = y.indices();
  const std::size_t k = members.size();
  if (k < 2) return std::nullopt;
  const std::size_t universe = y.universe();
  // A = {members[0]} + (size-1)-combination of the rest, by size then lex.
  for (std::size_t extra = 0; extra < k; ++extra) {
    std::vector<std::size_t> pick = first_combination(extra);
    do {
      PointSet a(universe);
      a.insert(members[0]);
      for (std::size_t p : pick) a.insert(members[p + 1]);
      PointSet b = y - a;
      if (b.empty()) continue;
      if (hulls(a).intersects(hulls(b))) return RadonPartition{std::move(a), std::move(b)};
    } while (next_combination_lex(pick, k - 1));
  }
  return std::nullopt;
}

std::optional<RadonPartition> radon_partition(const ConvexitySpace& space, const PointSet& y) {
  if (y.universe() != space.size()) throw InvalidArgument("radon_partition: point set over the wrong ground set");
  if (y.empty()) throw InvalidArgument("radon_partition: Y must be nonempty");
  HullMemo hulls(space);
  return radon_partition(hulls, y);
}

std::optional<PointSet> subset_without_radon_partition(HullMemo& hulls, std::size_t n) {
  const std::size_t size = hulls.space().size();
  if (n == 0 || n > size) return std::nullopt;
  std::vector<std::size_t> all(size);
  for (std::size_t i = 0; i < size; ++i) all[i] = i;
  std::vector<std::size_t> pick = first_combination(n);
  do {
    PointSet y = from_positions(size, all, pick);
    if (!radon_partition(hulls, y)) return y;
  } while (next_combination_lex(pick, size));
  return std::nullopt;
}

std::optional<std::size_t> radon_number(const ConvexitySpace& space, std::size_t cap) {
  require_cap(space, cap, "radon_number");
  HullMemo hulls(space);
  for (std::size_t n = 1; n <= space.size(); ++n) {
    if (!subset_without_radon_partition(hulls, n)) return n;
  }
  return std::nullopt;
}

namespace {

bool helly_independent(HullMemo& hulls, const std::vector<std::size_t>& s) {
  const std::size_t universe = hulls.space().size();
  PointSet meet = PointSet::full(universe);
  for (std::size_t skip = 0; skip < s.size(); ++skip) {
    PointSet rest(universe);
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (j != skip) rest.insert(s[j]);
    }
    meet &= hulls(rest);
    if (meet.empty()) return true;
  }
  return meet.empty();
}

}  // namespace

HellyResult helly_number_independence(const ConvexitySpace& space, std::size_t cap) {
  require_cap(space, cap, "helly_number_independence");
  const std::size_t n = space.size();
  HullMemo hulls(space);
  HellyResult best{1, space.singleton(0)};
  std::vector<std::size_t> current;

  std::function<void(std::size_t)> extend = [&](std::size_t start) {
    for (std::size_t x = start; x < n; ++x) {
      if (current.size() + 1 + (n - 1 - x) <= best.number) return;
      current.push_back(x);
      if (helly_independent(hulls, current)) {
        if (current.size() > best.number) best = {current.size(), PointSet(n, std::span<const std::size_t>(current))};
        extend(x + 1);
      }
      current.pop_back();
    }
  };
  extend(0);
  return best;
}

std::size_t helly_number_direct(const ConvexitySpace& space, std::size_t cap) {
  const auto& family = enumerate_convex_sets(space, cap);
  const PointSet everything = space.full_set();
  std::vector<const PointSet*> candidates;
  bool has_empty = false;
  for (const auto& c : family) {
    if (c.empty()) {
      has_empty = true;
    } else if (c != everything) {
      candidates.push_back(&c);
    }
  }
  // Large sets first: deep families surface early and tighten the bound.
  std::reverse(candidates.begin(), candidates.end());

  std::size_t best = has_empty ? 1 : 0;
  std::size_t depth = 0;
  // escapes[i]: points lying in every chosen set except the i-th. A minimal
  // non-intersecting family needs each of these nonempty until the end.
  std::vector<PointSet> escapes;

  std::function<void(std::size_t, const PointSet&)> search = [&](std::size_t start, const PointSet& meet) {
    for (std::size_t c = start; c < candidates.size(); ++c) {
      // Every later member needs its own escape point inside the current meet.
      if (depth + meet.size() <= best) return;
      const PointSet& set = *candidates[c];
      PointSet next_meet = meet & set;
      if (next_meet == meet) continue;
      bool alive = true;
      for (const auto& e : escapes) {
        if (!e.intersects(set)) {
          alive = false;
          break;
        }
      }
      if (!alive) continue;
      if (next_meet.empty()) {
        best = std::max(best, depth + 1);
        continue;
      }
      std::vector<PointSet> saved = escapes;
      for (auto& e : escapes) e &= set;
      escapes.push_back(meet - set);
      ++depth;
      search(c + 1, next_meet);
      --depth;
      escapes = std::move(saved);
    }
  };
  search(0, everything);
  return best;
}

std::vector<VennAtom> venn_atoms(const SetFamily& family) {
  family.validate();
  const std::size_t m = family.sets.size();
  std::vector<VennAtom> atoms;
  std::unordered_map<PointSet, std::size_t, PointSetHash> position;
  for (std::size_t x = 0; x < family.ground_size; ++x) {
    PointSet signature(m);
    for (std::size_t i = 0; i < m; ++i) {
      if (family.sets[i].contains(x)) signature.insert(i);
    }
    auto [it, fresh] = position.emplace(signature, atoms.size());
    if (fresh) atoms.push_back({signature, PointSet(family.ground_size)});
    atoms[it->second].atom.insert(x);
  }
  return atoms;
}

namespace {

constexpr std::size_t kMaxSignatureBits = 63;

std::size_t distinct_signatures(const SetFamily& family, const std::vector<std::size_t>& chosen) {
  std::vector<std::uint64_t> signatures(family.ground_size, 0);
  for (std::size_t bit = 0; bit < chosen.size(); ++bit) {
    family.sets[chosen[bit]].for_each([&](std::size_t x) { signatures[x] |= std::uint64_t{1} << bit; });
  }
  std::sort(signatures.begin(), signatures.end());
  return static_cast<std::size_t>(std::unique(signatures.begin(), signatures.end()) - signatures.begin());
}

}  // namespace

std::size_t dual_shatter(const SetFamily& family, std::size_t m) {
  family.validate();
  if (m > family.sets.size()) {
    throw InvalidArgument("dual_shatter: m = " + std::to_string(m) + " exceeds the family size " +
                          std::to_string(family.sets.size()));
  }
  if (m > kMaxSignatureBits) throw CapExceeded("dual_shatter: m above 63 is not supported");
  if (family.ground_size == 0) return 0;
  std::size_t best = 0;
  std::vector<std::size_t> pick = first_combination(m);
  do {
    best = std::max(best, distinct_signatures(family, pick));
  } while (next_combination_colex(pick, family.sets.size()));
  return best;
}

std::size_t dual_vc_dimension(const SetFamily& family) {
  family.validate();
  const std::size_t m = family.sets.size();
  const std::size_t n = family.ground_size;
  std::size_t best = 0;
  std::vector<std::size_t> chosen;
  // Members with a complete Venn diagram stay complete after dropping any of
  // them, so extending complete selections in index order reaches them all.
  std::function<void(std::size_t)> extend = [&](std::size_t start) {
    const std::size_t k = chosen.size() + 1;
    if (k > kMaxSignatureBits || (std::uint64_t{1} << k) > n) return;
    for (std::size_t i = start; i < m; ++i) {
      chosen.push_back(i);
      if (distinct_signatures(family, chosen) == (std::size_t{1} << k)) {
        best = std::max(best, k);
        extend(i + 1);
      }
      chosen.pop_back();
    }
  };
  extend(0);
  return best;
}

std::size_t vc_dimension(const SetFamily& family) {
  family.validate();
  const std::size_t n = family.ground_size;
  std::vector<PointSet> distinct = family.sets;
  sort_canonical(distinct);
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::size_t best = 0;
  std::vector<std::size_t> chosen;
  auto shattered = [&] {
    std::vector<std::uint64_t> traces;
    traces.reserve(distinct.size());
    for (const auto& s : distinct) {
      std::uint64_t trace = 0;
      for (std::size_t b = 0; b < chosen.size(); ++b) {
        if (s.contains(chosen[b])) trace |= std::uint64_t{1} << b;
      }
      traces.push_back(trace);
    }
    std::sort(traces.begin(), traces.end());
    const auto count = static_cast<std::size_t>(std::unique(traces.begin(), traces.end()) - traces.begin());
    return count == (std::size_t{1} << chosen.size());
  };
  std::function<void(std::size_t)> extend = [&](std::size_t start) {
    const std::size_t k = chosen.size() + 1;
    if (k > kMaxSignatureBits || (std::uint64_t{1} << k) > distinct.size()) return;
    for (std::size_t x = start; x < n; ++x) {
      chosen.push_back(x);
      if (shattered()) {
        best = std::max(best, k);
        extend(x + 1);
      }
      chosen.pop_back();
    }
  };
  extend(0);
  return best;
}

SetFamily halfspace_family(const ConvexitySpace& space, std::size_t cap) {
  SetFamily out{space.size(), {}};
  for (const auto& h : enumerate_halfspaces(space, cap)) out.sets.push_back(h.gamma);
  return out;
}

namespace {

std::string kv(const std::string& key, std::size_t value) { return key + "=" + std::to_string(value); }

std::string radon_text(const std::optional<std::size_t>& radon) {
  return radon ? std::to_string(*radon) : std::string("unbounded-at-this-scale");
}

std::vector<BoundCheck> bounds_from(const ConvexitySpace& space, const std::optional<std::size_t>& radon,
                                    std::size_t helly, std::size_t vc, std::size_t dual_vc, bool separable) {
  std::vector<BoundCheck> out;
  {
    BoundCheck levi{"levi", radon.has_value(), true, kv("helly", helly) + " radon=" + radon_text(radon)};
    if (radon) levi.holds = helly < *radon;
    out.push_back(std::move(levi));
  }
  {
    const bool holds = vc + 1 >= 63 || dual_vc < (std::size_t{1} << (vc + 1));
    out.push_back({"eq1", true, holds, kv("dual_vc", dual_vc) + " " + kv("vc", vc)});
  }
  {
    BoundCheck my{"moran_yehudayoff", separable && radon.has_value(), true,
                  kv("vc", vc) + " radon=" + radon_text(radon) + " separable=" + (separable ? "true" : "false")};
    if (my.applicable) my.holds = vc + 1 <= *radon;
    out.push_back(std::move(my));
  }
  if (space.kind() == SpaceKind::lattice) {
    const std::size_t d = space.dimension();
    const std::size_t ceiling = d * ((std::size_t{1} << d) - 1) + 3;
    // Every subset of `ceiling` points has a Radon partition; vacuous when the
    // grid is smaller than the ceiling.
    const bool holds = radon ? *radon <= ceiling : space.size() < ceiling;
    out.push_back({"onn", true, holds,
                   kv("ceiling", ceiling) + " radon=" + radon_text(radon) + " " + kv("points", space.size())});
  }
  return out;
}

}  // namespace

std::vector<BoundCheck> check_bounds(const ConvexitySpace& space, std::size_t cap) {
  const auto radon = radon_number(space, cap);
  const auto helly = helly_number_independence(space, cap).number;
  const SetFamily halfspaces = halfspace_family(space, cap);
  return bounds_from(space, radon, helly, vc_dimension(halfspaces), dual_vc_dimension(halfspaces),
                     is_separable(space, cap).separable);
}

InvariantReport compute_invariants(const ConvexitySpace& space, const InvariantSelection& selection,
                                   const InvariantLimits& limits) {
  const std::size_t cap = limits.enumeration_cap;
  InvariantReport report;
  report.space = space.name();
  report.points = space.size();

  if (selection.radon || selection.bounds) {
    report.radon_computed = true;
    report.radon = radon_number(space, cap);
  }
  if (selection.helly || selection.bounds) {
    auto helly = helly_number_independence(space, cap);
    report.helly_independence = helly.number;
    report.helly_witness = std::move(helly.witness);
  }
  if (selection.helly_direct && space.size() <= limits.helly_direct_cap) {
    report.helly_direct = helly_number_direct(space, cap);
  }
  if (report.helly_independence && report.helly_direct && *report.helly_independence != *report.helly_direct) {
    throw VerificationFailure("Helly number disagreement on " + space.name() + ": independence search gives " +
                              std::to_string(*report.helly_independence) + ", minimal-family search gives " +
                              std::to_string(*report.helly_direct));
  }
  const bool need_halfspaces = selection.vc || selection.dual_vc || selection.bounds;
  if (need_halfspaces) {
    const SetFamily halfspaces = halfspace_family(space, cap);
    report.halfspace_count = halfspaces.sets.size();
    if (selection.vc || selection.bounds) report.vc_halfspaces = vc_dimension(halfspaces);
    if (selection.dual_vc || selection.bounds) report.dual_vc_halfspaces = dual_vc_dimension(halfspaces);
  }
  if (selection.separable || selection.bounds) report.separable = is_separable(space, cap).separable;
  if (selection.bounds) {
    report.bound_checks = bounds_from(space, report.radon, *report.helly_independence, *report.vc_halfspaces,
                                      *report.dual_vc_halfspaces, *report.separable);
  }
  return report;
}

}  // namespace convexity
