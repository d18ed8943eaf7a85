#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace convexity {

/// A subset of the ground indices {0, ..., universe-1}, stored as a chunked
/// bit array so that ground sets wider than a machine word work unchanged.
///
/// Binary set operations require both operands to share the same universe.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::size_t universe);

  /// Throws InvalidArgument for an index >= universe.
  PointSet(std::size_t universe, std::span<const std::size_t> members);
  PointSet(std::size_t universe, std::initializer_list<std::size_t> members);

  static PointSet full(std::size_t universe);

  std::size_t universe() const { return universe_; }
  std::size_t size() const;
  bool empty() const;
  bool contains(std::size_t index) const;

  void insert(std::size_t index);
  void erase(std::size_t index);

  /// Smallest member, if any.
  std::optional<std::size_t> first() const;
  /// Smallest member strictly greater than `index`, if any.
  std::optional<std::size_t> next(std::size_t index) const;
  std::vector<std::size_t> indices() const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int bit = __builtin_ctzll(bits);
        fn(w * 64 + static_cast<std::size_t>(bit));
        bits &= bits - 1;
      }
    }
  }

  bool is_subset_of(const PointSet& other) const;
  bool intersects(const PointSet& other) const;
  PointSet complement() const;

  PointSet& operator&=(const PointSet& other);
  PointSet& operator|=(const PointSet& other);
  /// Set difference.
  PointSet& operator-=(const PointSet& other);

  friend PointSet operator&(PointSet a, const PointSet& b) { return a &= b; }
  friend PointSet operator|(PointSet a, const PointSet& b) { return a |= b; }
  friend PointSet operator-(PointSet a, const PointSet& b) { return a -= b; }

  friend bool operator==(const PointSet&, const PointSet&) = default;

  std::size_t hash() const;
  /// "{0, 3, 5}"
  std::string to_string() const;

 private:
  void check_index(std::size_t index) const;
  void check_universe(const PointSet& other) const;

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Canonical order used for every deterministic tie-break: smaller sets
/// first, then lexicographic on the sorted index sequence.
bool canonical_less(const PointSet& a, const PointSet& b);

struct CanonicalLess {
  bool operator()(const PointSet& a, const PointSet& b) const { return canonical_less(a, b); }
};

struct PointSetHash {
  std::size_t operator()(const PointSet& s) const { return s.hash(); }
};

void sort_canonical(std::vector<PointSet>& sets);

}  // namespace convexity
