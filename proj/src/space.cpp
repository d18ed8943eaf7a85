#include "convexity/space.hpp"

#include <algorithm>
#include <mutex>
#include <random>
#include <unordered_set>

#include "convexity/errors.hpp"

namespace convexity {

std::string to_string(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::box: return "box";
    case SpaceKind::lattice: return "lattice";
    case SpaceKind::explicit_family: return "explicit";
  }
  return "?";
}

SetFamily SetFamily::from_indices(std::size_t ground_size, const std::vector<std::vector<std::size_t>>& sets) {
  SetFamily family{ground_size, {}};
  family.sets.reserve(sets.size());
  for (const auto& members : sets) family.sets.emplace_back(ground_size, std::span<const std::size_t>(members));
  return family;
}

void SetFamily::validate() const {
  for (const auto& s : sets) {
    if (s.universe() != ground_size) {
      throw InvalidArgument("family member " + s.to_string() + " is not over a ground set of size " +
                            std::to_string(ground_size));
    }
  }
}

struct ConvexitySpace::Cache {
  std::mutex mutex;
  std::optional<std::vector<PointSet>> convex_sets;
  std::optional<std::vector<Halfspace>> halfspaces;
};

ConvexitySpace::ConvexitySpace(std::vector<GroundPoint> ground, std::shared_ptr<const HullOracle> oracle,
                               SpaceDescriptor descriptor, std::optional<std::vector<PointSet>> declared_family)
    : ground_(std::move(ground)),
      oracle_(std::move(oracle)),
      descriptor_(std::move(descriptor)),
      declared_family_(std::move(declared_family)),
      cache_(std::make_shared<Cache>()) {
  if (ground_.empty()) throw InvalidArgument("a convexity space needs a non-empty ground set");
  for (std::size_t i = 0; i < ground_.size(); ++i) {
    if (ground_[i].index != i) throw InvalidArgument("ground indices must be exactly 0..n-1");
    if (ground_[i].coords.size() != ground_[0].coords.size()) {
      throw InvalidArgument("ground points must share one coordinate dimension");
    }
  }
}

PointSet ConvexitySpace::singleton(std::size_t index) const { return PointSet(size(), {index}); }

PointSet ConvexitySpace::hull(const PointSet& y) const {
  if (y.universe() != size()) {
    throw InvalidArgument("point set over " + std::to_string(y.universe()) + " points used with a space of " +
                          std::to_string(size()) + " points");
  }
  return oracle_->hull(y);
}

std::string ConvexitySpace::name() const {
  if (descriptor_.kind == SpaceKind::explicit_family) return "explicit:" + std::to_string(size());
  std::string out = to_string(descriptor_.kind) + ":" + std::to_string(descriptor_.sides.size());
  const bool square = std::all_of(descriptor_.sides.begin(), descriptor_.sides.end(),
                                  [&](std::size_t s) { return s == descriptor_.sides.front(); });
  if (square) return out + ":" + std::to_string(descriptor_.sides.front());
  for (std::size_t s : descriptor_.sides) out += ":" + std::to_string(s);
  return out;
}

const PointSet& HullMemo::operator()(const PointSet& y) {
  auto it = memo_.find(y);
  if (it != memo_.end()) return it->second;
  return memo_.emplace(y, space_->hull(y)).first->second;
}

PointSet hull(const ConvexitySpace& space, const PointSet& y) { return space.hull(y); }

bool is_convex(const ConvexitySpace& space, const PointSet& s) { return space.hull(s) == s; }

PointSet hull_from_family(const std::vector<PointSet>& family, const PointSet& y) {
  PointSet out = PointSet::full(y.universe());
  for (const auto& c : family) {
    if (y.is_subset_of(c)) out &= c;
  }
  return out;
}

namespace {

void require_cap(const ConvexitySpace& space, std::size_t cap, const char* what) {
  if (space.size() > cap) {
    throw CapExceeded(std::string(what) + " needs |X| <= " + std::to_string(cap) + ", space has " +
                      std::to_string(space.size()) + " points");
  }
}

// Closed sets of the hull operator in lectic order (Ganter's NextClosure).
std::vector<PointSet> next_closure_all(const ConvexitySpace& space) {
  const std::size_t n = space.size();
  const PointSet everything = space.full_set();
  std::vector<PointSet> out;
  PointSet current = space.hull(space.empty_set());
  out.push_back(current);
  while (current != everything) {
    bool advanced = false;
    for (std::size_t i = n; i-- > 0;) {
      if (current.contains(i)) {
        current.erase(i);
        continue;
      }
      PointSet candidate = current;
      candidate.insert(i);
      candidate = space.hull(candidate);
      const PointSet added = candidate - current;
      if (*added.first() >= i) {
        current = std::move(candidate);
        out.push_back(current);
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return out;
}

}  // namespace

const std::vector<PointSet>& ConvexitySpace::convex_family(std::size_t cap) const {
  std::lock_guard lock(cache_->mutex);
  if (!cache_->convex_sets) {
    require_cap(*this, cap, "convex-set enumeration");
    std::vector<PointSet> sets = next_closure_all(*this);
    sort_canonical(sets);
    cache_->convex_sets = std::move(sets);
  }
  return *cache_->convex_sets;
}

const std::vector<Halfspace>& ConvexitySpace::halfspaces(std::size_t cap) const {
  const auto& family = convex_family(cap);
  std::lock_guard lock(cache_->mutex);
  if (!cache_->halfspaces) {
    std::unordered_set<PointSet, PointSetHash> members(family.begin(), family.end());
    std::vector<Halfspace> out;
    for (const auto& c : family) {
      PointSet rest = c.complement();
      if (members.count(rest)) out.push_back({c, std::move(rest)});
    }
    cache_->halfspaces = std::move(out);
  }
  return *cache_->halfspaces;
}

const std::vector<PointSet>& enumerate_convex_sets(const ConvexitySpace& space, std::size_t cap) {
  return space.convex_family(cap);
}

const std::vector<Halfspace>& enumerate_halfspaces(const ConvexitySpace& space, std::size_t cap) {
  return space.halfspaces(cap);
}

bool AxiomReport::ok() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const AxiomCheck& c) { return c.status == AxiomCheck::Status::fail; });
}

const AxiomCheck* AxiomReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

namespace {

constexpr std::size_t kExhaustiveLawLimit = 12;
constexpr std::size_t kLawSampleSize = 4096;

std::vector<PointSet> law_test_subsets(const ConvexitySpace& space) {
  const std::size_t n = space.size();
  std::vector<PointSet> out;
  if (n <= kExhaustiveLawLimit) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      PointSet s(n);
      for (std::size_t i = 0; i < n; ++i) {
        if ((mask >> i) & 1U) s.insert(i);
      }
      out.push_back(std::move(s));
    }
    return out;
  }
  std::mt19937_64 rng(0);
  out.push_back(space.empty_set());
  out.push_back(space.full_set());
  for (std::size_t k = 0; k < kLawSampleSize; ++k) {
    // Vary the density so small and large subsets are both represented.
    const double density = static_cast<double>(k % 16 + 1) / 17.0;
    std::bernoulli_distribution coin(density);
    PointSet s(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (coin(rng)) s.insert(i);
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

AxiomReport check_axioms(const ConvexitySpace& space, std::size_t cap) {
  using Status = AxiomCheck::Status;
  AxiomReport report;
  const std::vector<PointSet>& family =
      space.declared_family() ? *space.declared_family() : enumerate_convex_sets(space, cap);
  std::unordered_set<PointSet, PointSetHash> members(family.begin(), family.end());

  {
    AxiomCheck c1{"C1", Status::pass, {}};
    if (!members.count(space.empty_set())) {
      c1 = {"C1", Status::fail, "empty set is not convex"};
    } else if (!members.count(space.full_set())) {
      c1 = {"C1", Status::fail, "ground set " + space.full_set().to_string() + " is not convex"};
    }
    report.checks.push_back(std::move(c1));
  }
  {
    // Pairwise closure implies closure under every finite intersection.
    AxiomCheck c2{"C2", Status::pass, {}};
    for (std::size_t a = 0; a < family.size() && c2.status == Status::pass; ++a) {
      for (std::size_t b = a + 1; b < family.size(); ++b) {
        PointSet meet = family[a] & family[b];
        if (!members.count(meet)) {
          c2 = {"C2", Status::fail,
                family[a].to_string() + " & " + family[b].to_string() + " = " + meet.to_string() + " is not convex"};
          break;
        }
      }
    }
    report.checks.push_back(std::move(c2));
  }
  report.checks.push_back({"C3", Status::vacuous, "finite ground set: every chain has a largest member"});

  AxiomCheck extensive{"extensive", Status::pass, {}};
  AxiomCheck monotone{"monotone", Status::pass, {}};
  AxiomCheck idempotent{"idempotent", Status::pass, {}};
  AxiomCheck agrees{"hull_matches_family", Status::pass, {}};
  for (const PointSet& y : law_test_subsets(space)) {
    const PointSet h = space.hull(y);
    if (extensive.status == Status::pass && !y.is_subset_of(h)) {
      extensive = {"extensive", Status::fail, "hull(" + y.to_string() + ") = " + h.to_string()};
    }
    if (idempotent.status == Status::pass && space.hull(h) != h) {
      idempotent = {"idempotent", Status::fail, "hull(hull(" + y.to_string() + ")) != hull(" + y.to_string() + ")"};
    }
    if (monotone.status == Status::pass) {
      for (std::size_t x = 0; x < space.size(); ++x) {
        if (y.contains(x)) continue;
        PointSet bigger = y;
        bigger.insert(x);
        if (!h.is_subset_of(space.hull(bigger))) {
          monotone = {"monotone", Status::fail,
                      "hull(" + y.to_string() + ") not inside hull(" + bigger.to_string() + ")"};
          break;
        }
      }
    }
    if (agrees.status == Status::pass) {
      const PointSet from_family = hull_from_family(family, y);
      if (from_family != h) {
        agrees = {"hull_matches_family", Status::fail,
                  "hull(" + y.to_string() + ") = " + h.to_string() + " but family gives " + from_family.to_string()};
      }
    }
  }
  report.checks.push_back(std::move(extensive));
  report.checks.push_back(std::move(monotone));
  report.checks.push_back(std::move(idempotent));
  report.checks.push_back(std::move(agrees));
  return report;
}

std::optional<Halfspace> separate(const ConvexitySpace& space, const PointSet& s, std::size_t x, std::size_t cap) {
  if (x >= space.size()) throw InvalidArgument("separate: point " + std::to_string(x) + " out of range");
  if (s.contains(x)) throw InvalidArgument("separate: point " + std::to_string(x) + " lies in " + s.to_string());
  if (!is_convex(space, s)) throw InvalidArgument("separate: " + s.to_string() + " is not convex");
  for (const Halfspace& h : enumerate_halfspaces(space, cap)) {
    if (s.is_subset_of(h.gamma) && !h.gamma.contains(x)) return h;
  }
  return std::nullopt;
}

SeparabilityResult is_separable(const ConvexitySpace& space, std::size_t cap) {
  const auto& halfspaces = enumerate_halfspaces(space, cap);
  for (const PointSet& s : enumerate_convex_sets(space, cap)) {
    // Points separable from s are exactly the union of complements of the
    // halfspaces that contain s.
    PointSet reachable = space.empty_set();
    for (const Halfspace& h : halfspaces) {
      if (s.is_subset_of(h.gamma)) reachable |= h.complement;
    }
    const PointSet stuck = space.full_set() - s - reachable;
    if (auto x = stuck.first()) return {false, s, *x};
  }
  return {};
}

}  // namespace convexity
