#include "convexity/partite.hpp"

#include <functional>

#include "convexity/combinatorics.hpp"
#include "convexity/errors.hpp"

namespace convexity {

CompletePartiteHypergraph::CompletePartiteHypergraph(std::vector<std::size_t> class_sizes)
    : sizes_(std::move(class_sizes)), strides_(sizes_.size(), 1) {
  if (sizes_.empty()) throw InvalidArgument("partite hypergraph needs at least one class");
  for (std::size_t c = sizes_.size(); c-- > 0;) {
    if (sizes_[c] == 0) throw InvalidArgument("partite hypergraph class " + std::to_string(c) + " is empty");
    strides_[c] = edge_count_;
    if (edge_count_ > (std::size_t{1} << 40) / sizes_[c]) throw CapExceeded("partite hypergraph has too many edges");
    edge_count_ *= sizes_[c];
  }
}

CompletePartiteHypergraph CompletePartiteHypergraph::uniform(std::size_t k, std::size_t t) {
  return CompletePartiteHypergraph(std::vector<std::size_t>(k, t));
}

std::size_t CompletePartiteHypergraph::edge_index(const std::vector<std::size_t>& tuple) const {
  if (tuple.size() != k()) throw InvalidArgument("edge tuple has the wrong arity");
  std::size_t index = 0;
  for (std::size_t c = 0; c < k(); ++c) {
    if (tuple[c] >= sizes_[c]) throw InvalidArgument("edge tuple position out of range");
    index += tuple[c] * strides_[c];
  }
  return index;
}

std::vector<std::size_t> CompletePartiteHypergraph::edge_tuple(std::size_t index) const {
  if (index >= edge_count_) throw InvalidArgument("edge index out of range");
  std::vector<std::size_t> tuple(k());
  for (std::size_t c = 0; c < k(); ++c) {
    tuple[c] = index / strides_[c];
    index %= strides_[c];
  }
  return tuple;
}

namespace {

void check_selection(const CompletePartiteHypergraph& h, const PartiteSelection& selection) {
  if (selection.size() != h.k()) throw InvalidArgument("selection has the wrong number of classes");
  for (std::size_t c = 0; c < h.k(); ++c) {
    for (std::size_t p : selection[c]) {
      if (p >= h.class_size(c)) throw InvalidArgument("selection position out of range");
    }
  }
}

void check_kept(const CompletePartiteHypergraph& h, const PointSet& kept) {
  if (kept.universe() != h.edge_count()) throw InvalidArgument("kept edges are over a different edge set");
}

}  // namespace

std::vector<std::size_t> selection_edges(const CompletePartiteHypergraph& h, const PartiteSelection& selection) {
  check_selection(h, selection);
  std::vector<std::size_t> out{0};
  for (std::size_t c = 0; c < h.k(); ++c) {
    std::vector<std::size_t> next;
    next.reserve(out.size() * selection[c].size());
    for (std::size_t base : out) {
      for (std::size_t p : selection[c]) next.push_back(base + p * h.stride(c));
    }
    out = std::move(next);
  }
  return out;
}

bool selection_inside(const CompletePartiteHypergraph& h, const PointSet& kept, const PartiteSelection& selection) {
  check_kept(h, kept);
  for (std::size_t e : selection_edges(h, selection)) {
    if (!kept.contains(e)) return false;
  }
  return true;
}

namespace {

// Compatibility table over the classes after `level`: entry t (an index into
// the suffix tuple space) is set when every transversal of the chosen prefix
// extended by t is kept.
using Table = std::vector<char>;

// Restrict `table` (over classes level..k-1) by the chosen vertices of class
// `level`; result is over classes level+1..k-1.
Table restrict(const CompletePartiteHypergraph& h, const Table& table, std::size_t level,
               const std::vector<std::size_t>& chosen) {
  const std::size_t stride = h.stride(level);
  Table out(stride, 1);
  for (std::size_t p : chosen) {
    const std::size_t base = p * stride;
    for (std::size_t t = 0; t < stride; ++t) out[t] = out[t] && table[base + t];
  }
  return out;
}

// Vertices of class `level` that extend to at least one compatible tuple.
std::vector<std::size_t> live_vertices(const CompletePartiteHypergraph& h, const Table& table, std::size_t level) {
  const std::size_t stride = h.stride(level);
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < h.class_size(level); ++p) {
    for (std::size_t t = 0; t < stride; ++t) {
      if (table[p * stride + t]) {
        out.push_back(p);
        break;
      }
    }
  }
  return out;
}

Table initial_table(const PointSet& kept) {
  Table table(kept.universe(), 0);
  kept.for_each([&](std::size_t e) { table[e] = 1; });
  return table;
}

// Visits selections class by class. `on_last` receives the vertices of the
// final class compatible with everything chosen and returns true to stop.
bool walk(const CompletePartiteHypergraph& h, const std::vector<std::size_t>& sizes, const Table& table,
          std::size_t level, PartiteSelection& chosen,
          const std::function<bool(const std::vector<std::size_t>&)>& on_last) {
  const std::vector<std::size_t> live = live_vertices(h, table, level);
  if (live.size() < sizes[level]) return false;
  if (level + 1 == h.k()) return on_last(live);
  std::vector<std::size_t> pick = first_combination(sizes[level]);
  do {
    std::vector<std::size_t> vertices;
    vertices.reserve(pick.size());
    for (std::size_t i : pick) vertices.push_back(live[i]);
    Table next = restrict(h, table, level, vertices);
    chosen[level] = std::move(vertices);
    if (walk(h, sizes, next, level + 1, chosen, on_last)) return true;
  } while (next_combination_lex(pick, live.size()));
  return false;
}

void check_sizes(const CompletePartiteHypergraph& h, const std::vector<std::size_t>& sizes) {
  if (sizes.size() != h.k()) throw InvalidArgument("one target size per class is required");
  for (std::size_t c = 0; c < h.k(); ++c) {
    if (sizes[c] > h.class_size(c)) {
      throw InvalidArgument("s = " + std::to_string(sizes[c]) + " exceeds class " + std::to_string(c) + " of size " +
                            std::to_string(h.class_size(c)));
    }
  }
}

}  // namespace

std::optional<PartiteSelection> find_complete_partite(const CompletePartiteHypergraph& h, const PointSet& kept,
                                                      const std::vector<std::size_t>& sizes) {
  check_kept(h, kept);
  check_sizes(h, sizes);
  PartiteSelection chosen(h.k());
  std::optional<PartiteSelection> found;
  walk(h, sizes, initial_table(kept), 0, chosen, [&](const std::vector<std::size_t>& live) {
    chosen.back().assign(live.begin(), live.begin() + static_cast<std::ptrdiff_t>(sizes.back()));
    found = chosen;
    return true;
  });
  return found;
}

std::optional<PartiteSelection> find_complete_partite(const CompletePartiteHypergraph& h, const PointSet& kept,
                                                      std::size_t s) {
  return find_complete_partite(h, kept, std::vector<std::size_t>(h.k(), s));
}

Integer count_partite_copies(const CompletePartiteHypergraph& h, const PointSet& kept, std::size_t s) {
  check_kept(h, kept);
  const std::vector<std::size_t> sizes(h.k(), s);
  check_sizes(h, sizes);
  PartiteSelection chosen(h.k());
  Integer total = 0;
  walk(h, sizes, initial_table(kept), 0, chosen, [&](const std::vector<std::size_t>& live) {
    total += binomial(live.size(), s);
    return false;
  });
  return total;
}

}  // namespace convexity
