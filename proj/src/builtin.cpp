#include "convexity/builtin.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "convexity/errors.hpp"
#include "lattice_oracle.hpp"

namespace convexity {

GridShape::GridShape(std::vector<std::size_t> sides) : sides_(std::move(sides)), strides_(sides_.size()) {
  if (sides_.empty()) throw InvalidArgument("grid dimension must be at least 1");
  for (std::size_t i = sides_.size(); i-- > 0;) {
    if (sides_[i] == 0) throw InvalidArgument("grid sides must be positive");
    strides_[i] = size_;
    size_ *= sides_[i];
  }
}

std::size_t GridShape::index(std::span<const std::int64_t> coords) const {
  if (coords.size() != sides_.size()) throw InvalidArgument("grid coordinate dimension mismatch");
  std::size_t out = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] < 0 || static_cast<std::size_t>(coords[i]) >= sides_[i]) {
      throw InvalidArgument("grid coordinate out of range");
    }
    out += static_cast<std::size_t>(coords[i]) * strides_[i];
  }
  return out;
}

std::vector<std::int64_t> GridShape::coords(std::size_t index) const {
  std::vector<std::int64_t> out(sides_.size());
  for (std::size_t i = 0; i < sides_.size(); ++i) {
    out[i] = static_cast<std::int64_t>(index / strides_[i]);
    index %= strides_[i];
  }
  return out;
}

namespace {

class BoxOracle final : public HullOracle {
 public:
  explicit BoxOracle(GridShape grid) : grid_(std::move(grid)) {}

  PointSet hull(const PointSet& y) const override {
    PointSet out(grid_.size());
    if (y.empty()) return out;
    const std::size_t d = grid_.dimension();
    std::vector<std::int64_t> lo(d, INT64_MAX);
    std::vector<std::int64_t> hi(d, INT64_MIN);
    y.for_each([&](std::size_t i) {
      const auto c = grid_.coords(i);
      for (std::size_t k = 0; k < d; ++k) {
        lo[k] = std::min(lo[k], c[k]);
        hi[k] = std::max(hi[k], c[k]);
      }
    });
    std::vector<std::int64_t> c = lo;
    while (true) {
      out.insert(grid_.index(c));
      std::size_t k = d;
      while (k-- > 0) {
        if (c[k] < hi[k]) {
          ++c[k];
          break;
        }
        c[k] = lo[k];
      }
      if (k == static_cast<std::size_t>(-1)) break;
    }
    return out;
  }

 private:
  GridShape grid_;
};

class FamilyOracle final : public HullOracle {
 public:
  explicit FamilyOracle(std::vector<PointSet> family) : family_(std::move(family)) {}
  PointSet hull(const PointSet& y) const override { return hull_from_family(family_, y); }

 private:
  std::vector<PointSet> family_;
};

std::vector<GroundPoint> grid_ground(const GridShape& grid) {
  std::vector<GroundPoint> ground(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    ground[i].index = i;
    for (auto c : grid.coords(i)) ground[i].coords.emplace_back(c);
  }
  return ground;
}

GridShape checked_grid(const std::vector<std::size_t>& sides, std::size_t ground_cap) {
  long double total = 1;
  for (auto s : sides) total *= static_cast<long double>(s);
  if (total > static_cast<long double>(ground_cap)) {
    throw CapExceeded("grid with " + std::to_string(static_cast<unsigned long long>(total)) +
                      " points exceeds the ground cap " + std::to_string(ground_cap));
  }
  return GridShape(sides);
}

void require_side(std::size_t dim, std::size_t side) {
  if (dim < 1) throw InvalidArgument("grid dimension must be at least 1");
  if (side < 2) throw InvalidArgument("grid side must be at least 2");
}

std::vector<GroundPoint> plain_ground(std::size_t n, const std::vector<std::string>& labels = {}) {
  std::vector<GroundPoint> ground(n);
  for (std::size_t i = 0; i < n; ++i) {
    ground[i].index = i;
    if (i < labels.size()) ground[i].label = labels[i];
  }
  return ground;
}

}  // namespace

ConvexitySpace make_box_space(std::vector<std::size_t> sides, std::size_t ground_cap) {
  GridShape grid = checked_grid(sides, ground_cap);
  auto ground = grid_ground(grid);
  return ConvexitySpace(std::move(ground), std::make_shared<BoxOracle>(grid),
                        SpaceDescriptor{SpaceKind::box, std::move(sides), {}, true, {}});
}

ConvexitySpace make_box_space(std::size_t dim, std::size_t side, std::size_t ground_cap) {
  require_side(dim, side);
  return make_box_space(std::vector<std::size_t>(dim, side), ground_cap);
}

ConvexitySpace make_lattice_space(std::vector<std::size_t> sides, std::size_t ground_cap) {
  GridShape grid = checked_grid(sides, ground_cap);
  auto ground = grid_ground(grid);
  return ConvexitySpace(std::move(ground), std::make_shared<LatticeOracle>(grid),
                        SpaceDescriptor{SpaceKind::lattice, std::move(sides), {}, true, {}});
}

ConvexitySpace make_lattice_space(std::size_t dim, std::size_t side, std::size_t ground_cap) {
  require_side(dim, side);
  return make_lattice_space(std::vector<std::size_t>(dim, side), ground_cap);
}

std::vector<PointSet> intersection_closure(std::size_t ground_size, const std::vector<PointSet>& sets) {
  std::vector<PointSet> closed;
  std::unordered_set<PointSet, PointSetHash> seen;
  std::deque<PointSet> pending;
  auto offer = [&](PointSet s) {
    if (seen.insert(s).second) pending.push_back(std::move(s));
  };
  offer(PointSet(ground_size));
  offer(PointSet::full(ground_size));
  for (const auto& s : sets) offer(s);
  while (!pending.empty()) {
    PointSet s = std::move(pending.front());
    pending.pop_front();
    for (std::size_t i = 0, n = closed.size(); i < n; ++i) offer(closed[i] & s);
    closed.push_back(std::move(s));
  }
  sort_canonical(closed);
  return closed;
}

ConvexitySpace make_explicit_space(const SetFamily& family) {
  family.validate();
  auto closed = intersection_closure(family.ground_size, family.sets);
  auto oracle = std::make_shared<FamilyOracle>(closed);
  return ConvexitySpace(plain_ground(family.ground_size), std::move(oracle),
                        SpaceDescriptor{SpaceKind::explicit_family, {}, family, true, {}}, std::move(closed));
}

ConvexitySpace make_unclosed_explicit_space(const SetFamily& family) {
  family.validate();
  std::vector<PointSet> sets = family.sets;
  sort_canonical(sets);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  auto oracle = std::make_shared<FamilyOracle>(sets);
  return ConvexitySpace(plain_ground(family.ground_size), std::move(oracle),
                        SpaceDescriptor{SpaceKind::explicit_family, {}, family, false, {}}, std::move(sets));
}

SetFamily box_lower_bound_family(std::size_t dim, std::size_t n) {
  if (dim == 0) throw InvalidArgument("box_lower_bound_family: dimension must be at least 1");
  if (n == 0 || n % dim != 0) {
    throw InvalidArgument("box_lower_bound_family: n = " + std::to_string(n) + " is not a positive multiple of d = " +
                          std::to_string(dim));
  }
  const std::size_t side = n / dim;
  const GridShape grid(std::vector<std::size_t>(dim, side));
  SetFamily family{grid.size(), {}};
  for (std::size_t axis = 0; axis < dim; ++axis) {
    for (std::size_t layer = 0; layer < side; ++layer) {
      PointSet slab(grid.size());
      for (std::size_t i = 0; i < grid.size(); ++i) {
        if (static_cast<std::size_t>(grid.coords(i)[axis]) == layer) slab.insert(i);
      }
      family.sets.push_back(std::move(slab));
    }
  }
  return family;
}

ConvexitySpace make_space(const SpaceDescriptor& descriptor, std::size_t ground_cap) {
  ConvexitySpace space = [&] {
    switch (descriptor.kind) {
      case SpaceKind::box: return make_box_space(descriptor.sides, ground_cap);
      case SpaceKind::lattice: return make_lattice_space(descriptor.sides, ground_cap);
      case SpaceKind::explicit_family:
        return descriptor.closed ? make_explicit_space(descriptor.family)
                                 : make_unclosed_explicit_space(descriptor.family);
    }
    throw InvalidArgument("unknown space kind");
  }();
  if (!descriptor.labels.empty()) {
    if (descriptor.labels.size() != space.size()) {
      throw InvalidArgument("space has " + std::to_string(space.size()) + " points but " +
                            std::to_string(descriptor.labels.size()) + " labels");
    }
    auto ground = space.ground();
    for (std::size_t i = 0; i < ground.size(); ++i) ground[i].label = descriptor.labels[i];
    SpaceDescriptor with_labels = space.descriptor();
    with_labels.labels = descriptor.labels;
    return ConvexitySpace(std::move(ground), space.oracle(), std::move(with_labels), space.declared_family());
  }
  return space;
}

}  // namespace convexity
