#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "convexity/point_set.hpp"
#include "convexity/rational.hpp"

namespace convexity {

/// k-partite k-uniform hypergraph whose edges are all transversals. Vertices
/// are addressed by (class, position); edges by a mixed-radix index with the
/// last class varying fastest.
class CompletePartiteHypergraph {
 public:
  explicit CompletePartiteHypergraph(std::vector<std::size_t> class_sizes);
  static CompletePartiteHypergraph uniform(std::size_t k, std::size_t t);

  std::size_t k() const { return sizes_.size(); }
  const std::vector<std::size_t>& class_sizes() const { return sizes_; }
  std::size_t class_size(std::size_t c) const { return sizes_.at(c); }
  std::size_t edge_count() const { return edge_count_; }
  std::size_t stride(std::size_t c) const { return strides_.at(c); }

  std::size_t edge_index(const std::vector<std::size_t>& tuple) const;
  std::vector<std::size_t> edge_tuple(std::size_t index) const;
  PointSet all_edges() const { return PointSet::full(edge_count_); }

 private:
  std::vector<std::size_t> sizes_;
  std::vector<std::size_t> strides_;
  std::size_t edge_count_ = 1;
};

/// One sorted position list per class.
using PartiteSelection = std::vector<std::vector<std::size_t>>;

/// Edge indices of all transversals of `selection`, in edge-index order.
std::vector<std::size_t> selection_edges(const CompletePartiteHypergraph& h, const PartiteSelection& selection);

/// True when every transversal of `selection` is in `kept`.
bool selection_inside(const CompletePartiteHypergraph& h, const PointSet& kept, const PartiteSelection& selection);

/// Lexicographically first choice of `sizes[c]` vertices in every class c with
/// all transversals kept, or nullopt.
std::optional<PartiteSelection> find_complete_partite(const CompletePartiteHypergraph& h, const PointSet& kept,
                                                      const std::vector<std::size_t>& sizes);

/// Uniform version: s vertices per class.
std::optional<PartiteSelection> find_complete_partite(const CompletePartiteHypergraph& h, const PointSet& kept,
                                                      std::size_t s);

/// Number of choices of s vertices per class whose transversals are all kept.
Integer count_partite_copies(const CompletePartiteHypergraph& h, const PointSet& kept, std::size_t s);

}  // namespace convexity
