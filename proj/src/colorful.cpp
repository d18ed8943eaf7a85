#include "convexity/colorful.hpp"

#include <algorithm>
#include <functional>

#include "convexity/combinatorics.hpp"
#include "convexity/errors.hpp"

namespace convexity {

PointSet LabeledFunction::image(std::size_t universe) const {
  PointSet out(universe);
  for (std::size_t x : values) out.insert(x);
  return out;
}

std::size_t weight(const LabeledFunction& f, const PointSet& z) {
  std::size_t total = 0;
  for (std::size_t x : f.values) {
    if (x < z.universe() && z.contains(x)) ++total;
  }
  return total;
}

namespace {

std::string join(const std::vector<std::size_t>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + std::to_string(xs[i]);
  return out + "]";
}

constexpr std::size_t kHeavySetCap = std::size_t{1} << 22;

void check_functions(const ConvexitySpace& space, const std::vector<LabeledFunction>& fs, std::size_t r) {
  if (fs.size() < 2) throw InvalidArgument("large_separated_pairs needs m >= 2 functions");
  if (r < 3) throw InvalidArgument("large_separated_pairs needs r >= 3");
  const std::size_t e = fs.front().domain_size();
  if (e == 0) throw InvalidArgument("large_separated_pairs needs a nonempty domain");
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (fs[i].domain_size() != e) throw InvalidArgument("function " + std::to_string(i) + " has a different domain");
    for (std::size_t x : fs[i].values) {
      if (x >= space.size()) throw InvalidArgument("function " + std::to_string(i) + " maps outside the ground set");
    }
  }
}

}  // namespace

SeparatedPairResult large_separated_pairs(const ConvexitySpace& space, const std::vector<LabeledFunction>& fs,
                                          std::size_t r, std::size_t cap) {
  check_functions(space, fs, r);
  const std::size_t n_points = space.size();
  const std::size_t m = fs.size();
  const std::size_t e_size = fs.front().domain_size();

  std::vector<PointSet> hulls;
  PointSet meet = space.full_set();
  for (const auto& f : fs) {
    hulls.push_back(space.hull(f.image(n_points)));
    meet &= hulls.back();
  }
  if (!meet.empty()) {
    throw HypothesisViolation("hulls intersect: point " + std::to_string(*meet.first()) +
                              " lies in the hull of every image");
  }

  std::vector<std::size_t> point_weight(n_points, 0);
  for (const auto& f : fs) {
    for (std::size_t x : f.values) ++point_weight[x];
  }
  PointSet support(n_points);
  for (std::size_t x = 0; x < n_points; ++x) {
    if (point_weight[x] > 0) support.insert(x);
  }
  const std::size_t total = m * e_size;
  const std::vector<std::size_t> s_points = support.indices();

  // Z is heavy when (r-1)|Z| > (r-2)N, i.e. its complement L in S has
  // (r-1)|L| < N. Light sets are closed under subsets, so a depth-first walk
  // over S lists them all; the heavy hulls are hull(S - L).
  SeparatedPairTrace trace;
  trace.total_weight = total;
  PointSet common = space.full_set();
  PointSet light(n_points);
  std::function<void(std::size_t, std::size_t)> visit = [&](std::size_t start, std::size_t light_weight) {
    if (++trace.heavy_sets > kHeavySetCap) throw CapExceeded("large_separated_pairs: too many heavy sets");
    common &= space.hull(support - light);
    for (std::size_t p = start; p < s_points.size(); ++p) {
      const std::size_t w = light_weight + point_weight[s_points[p]];
      if ((r - 1) * w >= total) continue;
      light.insert(s_points[p]);
      visit(p + 1, w);
      light.erase(s_points[p]);
    }
  };
  visit(0, 0);
  if (common.empty()) {
    throw HypothesisViolation("no common point x0 in the " + std::to_string(trace.heavy_sets) +
                              " heavy hulls; the space has Radon number above r = " + std::to_string(r));
  }
  trace.x0 = *common.first();

  std::size_t i = 0;
  while (hulls[i].contains(trace.x0)) ++i;
  auto gamma = separate(space, hulls[i], trace.x0, cap);
  if (!gamma) {
    throw HypothesisViolation("no halfspace separates " + hulls[i].to_string() + " from point " +
                              std::to_string(trace.x0) + "; the space is not separable");
  }

  std::size_t j = m;
  std::size_t best = 0;
  for (std::size_t k = 0; k < m; ++k) {
    const std::size_t in_gamma = weight(fs[k], gamma->gamma);
    trace.weight_in_gamma += in_gamma;
    if (k != i && (j == m || e_size - in_gamma > best)) {
      best = e_size - in_gamma;
      j = k;
    }
  }
  trace.weight_in_complement = total - trace.weight_in_gamma;
  if ((r - 1) * trace.weight_in_gamma > (r - 2) * total) {
    throw VerificationFailure("large_separated_pairs: gamma is heavy although it misses x0");
  }

  PointSet e0(e_size);
  for (std::size_t e = 0; e < e_size; ++e) {
    if (gamma->complement.contains(fs[j].values[e])) e0.insert(e);
  }
  if ((r - 1) * e0.size() < e_size) {
    throw VerificationFailure("large_separated_pairs: pigeonhole produced |E0| = " + std::to_string(e0.size()));
  }
  return {SeparatedPairCertificate{std::move(e0), i, j, std::move(*gamma)}, trace};
}

bool verify_separated_pair(const ConvexitySpace& space, const std::vector<LabeledFunction>& fs, std::size_t r,
                           const SeparatedPairCertificate& c, std::string* reason) {
  auto fail = [&](const std::string& why) {
    if (reason) *reason = why;
    return false;
  };
  if (fs.empty()) return fail("no functions");
  const std::size_t e_size = fs.front().domain_size();
  if (c.i >= fs.size() || c.j >= fs.size() || c.i == c.j) return fail("bad function indices");
  if (c.e0.universe() != e_size) return fail("E0 is over the wrong domain");
  if ((r - 1) * c.e0.size() < e_size) return fail("|E0| below |E|/(r-1)");
  if (c.gamma.gamma.universe() != space.size() || c.gamma.complement != c.gamma.gamma.complement()) {
    return fail("gamma and its complement do not partition X");
  }
  if (!is_convex(space, c.gamma.gamma) || !is_convex(space, c.gamma.complement)) return fail("gamma is not a halfspace");
  bool ok = true;
  c.e0.for_each([&](std::size_t e) {
    if (!c.gamma.gamma.contains(fs[c.i].values[e])) ok = ok && fail("f_i(e) outside gamma for e = " + std::to_string(e));
    if (!c.gamma.complement.contains(fs[c.j].values[e])) {
      ok = ok && fail("f_j(e) inside gamma for e = " + std::to_string(e));
    }
  });
  return ok;
}

namespace {

// Images f(E_w) for w in class `cls`, with E_w the transversals of `selection`
// through w.
PointSet class_image(const ConvexitySpace& space, const CompletePartiteHypergraph& h, const LabeledFunction& f,
                     const PartiteSelection& selection, std::size_t cls, std::size_t w) {
  PartiteSelection through = selection;
  through[cls] = {w};
  PointSet out(space.size());
  for (std::size_t e : selection_edges(h, through)) out.insert(f.values[e]);
  return out;
}

void check_edge_function(const ConvexitySpace& space, const CompletePartiteHypergraph& h, const LabeledFunction& f) {
  if (f.domain_size() != h.edge_count()) {
    throw InvalidArgument("f has " + std::to_string(f.domain_size()) + " values but H has " +
                          std::to_string(h.edge_count()) + " edges");
  }
  for (std::size_t x : f.values) {
    if (x >= space.size()) throw InvalidArgument("f maps outside the ground set");
  }
}

}  // namespace

std::optional<SeparationWitness> check_separable_subset(const ConvexitySpace& space, const CompletePartiteHypergraph& h,
                                                        const LabeledFunction& f, const PartiteSelection& selection,
                                                        std::size_t cls, const std::vector<std::size_t>& a,
                                                        std::size_t cap) {
  check_edge_function(space, h, f);
  if (cls >= h.k()) throw InvalidArgument("class index out of range");
  for (std::size_t w : a) {
    if (std::find(selection.at(cls).begin(), selection[cls].end(), w) == selection[cls].end()) {
      throw InvalidArgument("vertex " + std::to_string(w) + " is not in the selected class");
    }
  }
  std::vector<PointSet> images;
  for (std::size_t w : a) images.push_back(class_image(space, h, f, selection, cls, w));
  const auto& halfspaces = enumerate_halfspaces(space, cap);
  for (std::size_t p = 0; p < a.size(); ++p) {
    for (std::size_t q = 0; q < a.size(); ++q) {
      if (p == q) continue;
      for (const auto& g : halfspaces) {
        if (images[p].is_subset_of(g.gamma) && images[q].is_subset_of(g.complement)) {
          return SeparationWitness{a[p], a[q], g};
        }
      }
    }
  }
  return std::nullopt;
}

namespace {

struct CoreSeparated {
  PartiteSelection selection;
  std::vector<SubsetSeparation> separations;
};

using CoreOutcome = std::variant<RefineIntersecting, CoreSeparated, Inconclusive>;

// One refinement pass with class `special` playing the role of the last class.
// `floors[c]` is the least size class c may shrink to.
CoreOutcome refine_core(const ConvexitySpace& space, const CompletePartiteHypergraph& h, const LabeledFunction& f,
                        PartiteSelection selection, std::size_t special, std::size_t n, std::size_t m, std::size_t r,
                        const std::vector<std::size_t>& floors, std::size_t cap) {
  const std::size_t k = h.k();
  if (selection[special].size() < n) {
    return Inconclusive{"setup", "special class has " + std::to_string(selection[special].size()) +
                                     " vertices, fewer than n = " + std::to_string(n)};
  }
  const PartiteSelection base = selection;
  const std::vector<std::size_t> w(selection[special].begin(),
                                   selection[special].begin() + static_cast<std::ptrdiff_t>(n));
  std::vector<std::size_t> others;
  for (std::size_t c = 0; c < k; ++c) {
    if (c != special) others.push_back(c);
  }

  std::vector<SubsetSeparation> separations;
  std::vector<std::size_t> pick = first_combination(m);
  do {
    std::vector<std::size_t> a;
    for (std::size_t p : pick) a.push_back(w[p]);

    PointSet meet = space.full_set();
    for (std::size_t v : a) meet &= space.hull(class_image(space, h, f, base, special, v));
    if (!meet.empty()) return RefineIntersecting{a, *meet.first()};

    // f_v on the (k-1)-partite edges of the current selection.
    std::vector<std::size_t> sub_sizes;
    for (std::size_t c : others) sub_sizes.push_back(selection[c].size());
    const CompletePartiteHypergraph sub(sub_sizes);
    std::vector<LabeledFunction> fs(a.size());
    for (std::size_t s = 0; s < sub.edge_count(); ++s) {
      const auto positions = sub.edge_tuple(s);
      std::vector<std::size_t> tuple(k);
      for (std::size_t q = 0; q < others.size(); ++q) tuple[others[q]] = selection[others[q]][positions[q]];
      for (std::size_t t = 0; t < a.size(); ++t) {
        tuple[special] = a[t];
        fs[t].values.push_back(f.values[h.edge_index(tuple)]);
      }
    }
    SeparatedPairResult lsp;
    try {
      lsp = large_separated_pairs(space, fs, r, cap);
    } catch (const HypothesisViolation& err) {
      return Inconclusive{"large-separated-pairs", "A = " + join(a) + ": " + err.what()};
    } catch (const VerificationFailure& err) {
      return Inconclusive{"large-separated-pairs", "A = " + join(a) + ": " + err.what()};
    }

    // Largest uniform-ish target first, never below the floors.
    std::optional<PartiteSelection> found;
    std::size_t top = 0;
    for (std::size_t size : sub_sizes) top = std::max(top, size);
    std::vector<std::size_t> last_sizes;
    for (std::size_t s = top + 1; s-- > 0 && !found;) {
      std::vector<std::size_t> sizes;
      bool feasible = true;
      for (std::size_t q = 0; q < others.size(); ++q) {
        const std::size_t target = std::max(floors[others[q]], std::min(sub_sizes[q], s));
        feasible = feasible && target <= sub_sizes[q];
        sizes.push_back(target);
      }
      if (!feasible) break;
      if (sizes == last_sizes) continue;
      last_sizes = sizes;
      found = find_complete_partite(sub, lsp.certificate.e0, sizes);
    }
    if (!found) {
      std::vector<std::size_t> need;
      for (std::size_t c : others) need.push_back(floors[c]);
      return Inconclusive{"partite-finder", "A = " + join(a) + ": the " + std::to_string(lsp.certificate.e0.size()) +
                                                " separated edges contain no complete partite subhypergraph with class sizes " +
                                                join(need)};
    }
    for (std::size_t q = 0; q < others.size(); ++q) {
      std::vector<std::size_t> kept;
      for (std::size_t p : (*found)[q]) kept.push_back(selection[others[q]][p]);
      selection[others[q]] = std::move(kept);
    }
    separations.push_back({a, SeparationWitness{a[lsp.certificate.i], a[lsp.certificate.j], lsp.certificate.gamma}});
  } while (next_combination_colex(pick, n));

  selection[special] = w;
  return CoreSeparated{std::move(selection), std::move(separations)};
}

}  // namespace

RefineOutcome refine_for_any_f(const ConvexitySpace& space, const CompletePartiteHypergraph& h,
                               const LabeledFunction& f, std::size_t n, std::size_t m, std::size_t r,
                               std::size_t cap) {
  check_edge_function(space, h, f);
  if (h.k() < 2) throw InvalidArgument("refine_for_any_f needs k >= 2");
  if (m < 2 || n < m) throw InvalidArgument("refine_for_any_f needs n >= m >= 2");
  if (r < 3) throw InvalidArgument("refine_for_any_f needs r >= 3");
  for (std::size_t c = 0; c < h.k(); ++c) {
    if (h.class_size(c) < n) throw InvalidArgument("class " + std::to_string(c) + " is smaller than n");
  }
  PartiteSelection all(h.k());
  for (std::size_t c = 0; c < h.k(); ++c) {
    for (std::size_t p = 0; p < h.class_size(c); ++p) all[c].push_back(p);
  }
  const std::size_t special = h.k() - 1;
  auto core = refine_core(space, h, f, all, special, n, m, r, std::vector<std::size_t>(h.k(), n), cap);
  if (auto* hit = std::get_if<RefineIntersecting>(&core)) return *hit;
  if (auto* stop = std::get_if<Inconclusive>(&core)) return *stop;

  auto& result = std::get<CoreSeparated>(core);
  RefineSeparated out;
  out.w = result.selection;
  for (auto& cls : out.w) cls.resize(n);
  std::vector<std::size_t> pick = first_combination(m);
  do {
    std::vector<std::size_t> a;
    for (std::size_t p : pick) a.push_back(out.w[special][p]);
    auto witness = check_separable_subset(space, h, f, out.w, special, a, cap);
    if (!witness) throw VerificationFailure("refine_for_any_f: subset " + join(a) + " does not re-verify as separable");
    out.separations.push_back({a, *witness});
  } while (next_combination_colex(pick, n));
  return out;
}

namespace {

std::string transversal_text(const std::vector<std::size_t>& tuple) { return join(tuple); }

}  // namespace

ColorfulOutcome weak_colorful_run(const ConvexitySpace& space, const ColorfulInstance& instance, std::size_t cap) {
  const auto& families = instance.families;
  const std::size_t k = families.size();
  const std::size_t m = instance.m;
  if (k < 2) throw InvalidArgument("weak_colorful_run needs at least two families");
  if (m < 2) throw InvalidArgument("weak_colorful_run needs m >= 2");
  if (instance.r < 3) throw InvalidArgument("weak_colorful_run needs r >= 3");
  const std::size_t p = families.front().size();
  for (std::size_t i = 0; i < k; ++i) {
    if (families[i].size() != p) throw InvalidArgument("all families must have the same size");
    for (std::size_t c = 0; c < p; ++c) {
      if (families[i][c].universe() != space.size()) throw InvalidArgument("family member over the wrong ground set");
      if (!is_convex(space, families[i][c])) {
        throw HypothesisViolation("member " + std::to_string(c) + " of family " + std::to_string(i) + " is not convex");
      }
    }
  }
  if (p == 0) return Inconclusive{"threshold", "families are empty"};

  const auto h = CompletePartiteHypergraph::uniform(k, p);
  LabeledFunction f;
  f.values.reserve(h.edge_count());
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    const auto tuple = h.edge_tuple(e);
    PointSet meet = space.full_set();
    for (std::size_t c = 0; c < k; ++c) meet &= families[c][tuple[c]];
    if (meet.empty()) throw HypothesisViolation("transversal " + transversal_text(tuple) + " has empty intersection");
    f.values.push_back(*meet.first());
  }

  // The refinement argues under the assumption that no family has m
  // intersecting members, so that case is settled first.
  if (m <= p) {
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<std::size_t> pick = first_combination(m);
      do {
        PointSet meet = space.full_set();
        for (std::size_t c : pick) meet &= families[i][c];
        if (!meet.empty()) return MTupleWitness{i, pick, *meet.first()};
      } while (next_combination_colex(pick, p));
    }
  }
  if (p < m) {
    return Inconclusive{"threshold", "p = " + std::to_string(p) + " is below m = " + std::to_string(m)};
  }

  PartiteSelection selection(k);
  for (auto& cls : selection) {
    for (std::size_t q = 0; q < p; ++q) cls.push_back(q);
  }
  std::vector<VennClass> classes(k);
  for (std::size_t step = 0; step < k; ++step) {
    const std::size_t special = k - 1 - step;
    std::vector<std::size_t> floors(k, m);
    for (std::size_t c = special + 1; c < k; ++c) floors[c] = 2;
    auto core = refine_core(space, h, f, selection, special, m, m, instance.r, floors, cap);
    if (auto* hit = std::get_if<RefineIntersecting>(&core)) {
      return MTupleWitness{special, hit->a, hit->point};
    }
    if (auto* stop = std::get_if<Inconclusive>(&core)) {
      return Inconclusive{"step " + std::to_string(step) + " " + stop->stage, stop->reason};
    }
    auto& result = std::get<CoreSeparated>(core);
    const SeparationWitness& sep = result.separations.front().witness;
    selection = std::move(result.selection);
    selection[special] = {std::min(sep.u, sep.v), std::max(sep.u, sep.v)};
    classes[special] = VennClass{sep.u, sep.v, sep.gamma};
  }

  VennCertificate cert;
  cert.classes = classes;
  for (std::size_t e : selection_edges(h, selection)) {
    const auto tuple = h.edge_tuple(e);
    VennPattern pattern;
    for (std::size_t c = 0; c < k; ++c) pattern.inside.push_back(tuple[c] == classes[c].u);
    pattern.edge = tuple;
    pattern.image = f.values[e];
    cert.patterns.push_back(std::move(pattern));
  }
  std::sort(cert.patterns.begin(), cert.patterns.end(), [](const VennPattern& x, const VennPattern& y) {
    return std::lexicographical_compare(y.inside.begin(), y.inside.end(), x.inside.begin(), x.inside.end());
  });
  ColorfulOutcome outcome = cert;
  std::string why;
  if (!verify_colorful_outcome(space, instance, outcome, &why)) {
    throw VerificationFailure("weak_colorful_run produced a certificate that does not verify: " + why);
  }
  return outcome;
}

bool verify_colorful_outcome(const ConvexitySpace& space, const ColorfulInstance& instance,
                             const ColorfulOutcome& outcome, std::string* reason) {
  auto fail = [&](const std::string& why) {
    if (reason) *reason = why;
    return false;
  };
  const auto& families = instance.families;
  if (const auto* w = std::get_if<MTupleWitness>(&outcome)) {
    if (w->family >= families.size()) return fail("family index out of range");
    std::vector<std::size_t> members = w->members;
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end()) return fail("repeated member");
    if (members.size() != instance.m) return fail("witness does not name m members");
    if (w->point >= space.size()) return fail("point out of range");
    for (std::size_t c : members) {
      if (c >= families[w->family].size()) return fail("member index out of range");
      if (!families[w->family][c].contains(w->point)) {
        return fail("member " + std::to_string(c) + " misses point " + std::to_string(w->point));
      }
    }
    return true;
  }
  if (const auto* cert = std::get_if<VennCertificate>(&outcome)) {
    const std::size_t k = families.size();
    if (cert->classes.size() != k) return fail("one halfspace per family is required");
    for (std::size_t c = 0; c < k; ++c) {
      const auto& g = cert->classes[c].gamma;
      if (g.gamma.universe() != space.size() || g.complement != g.gamma.complement()) {
        return fail("gamma " + std::to_string(c) + " and its complement do not partition X");
      }
      if (!is_convex(space, g.gamma) || !is_convex(space, g.complement)) {
        return fail("gamma " + std::to_string(c) + " is not a halfspace");
      }
    }
    if (k >= 63 || cert->patterns.size() != (std::size_t{1} << k)) return fail("wrong number of patterns");
    std::vector<bool> seen(std::size_t{1} << k, false);
    for (const auto& pattern : cert->patterns) {
      if (pattern.inside.size() != k || pattern.edge.size() != k) return fail("pattern has the wrong arity");
      std::size_t code = 0;
      PointSet meet = space.full_set();
      for (std::size_t c = 0; c < k; ++c) {
        if (pattern.edge[c] >= families[c].size()) return fail("edge member out of range");
        const VennClass& vc = cert->classes[c];
        const std::size_t expected = pattern.inside[c] ? vc.u : vc.v;
        if (pattern.edge[c] != expected) return fail("edge does not use the pair of family " + std::to_string(c));
        meet &= families[c][pattern.edge[c]];
        const bool in = vc.gamma.gamma.contains(pattern.image);
        if (in != pattern.inside[c]) {
          return fail("image " + std::to_string(pattern.image) + " on the wrong side of gamma " + std::to_string(c));
        }
        if (in) code |= std::size_t{1} << c;
      }
      if (!meet.contains(pattern.image)) return fail("image is not a common point of its transversal");
      if (seen[code]) return fail("pattern repeated");
      seen[code] = true;
    }
    return true;
  }
  return true;
}

}  // namespace convexity
