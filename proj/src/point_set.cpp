#include "convexity/point_set.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "convexity/errors.hpp"

namespace convexity {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t universe) { return (universe + kWordBits - 1) / kWordBits; }

}  // namespace

PointSet::PointSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

PointSet::PointSet(std::size_t universe, std::span<const std::size_t> members) : PointSet(universe) {
  for (std::size_t i : members) insert(i);
}

PointSet::PointSet(std::size_t universe, std::initializer_list<std::size_t> members) : PointSet(universe) {
  for (std::size_t i : members) insert(i);
}

PointSet PointSet::full(std::size_t universe) {
  PointSet s(universe);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  if (const std::size_t tail = universe % kWordBits; tail != 0) {
    s.words_.back() = (std::uint64_t{1} << tail) - 1;
  }
  return s;
}

void PointSet::check_index(std::size_t index) const {
  if (index >= universe_) {
    throw InvalidArgument("point index " + std::to_string(index) + " out of range for ground set of size " +
                          std::to_string(universe_));
  }
}

void PointSet::check_universe(const PointSet& other) const {
  if (universe_ != other.universe_) {
    throw InvalidArgument("point sets over different ground sets (" + std::to_string(universe_) + " vs " +
                          std::to_string(other.universe_) + ")");
  }
}

std::size_t PointSet::size() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool PointSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool PointSet::contains(std::size_t index) const {
  if (index >= universe_) return false;
  return (words_[index / kWordBits] >> (index % kWordBits)) & 1U;
}

void PointSet::insert(std::size_t index) {
  check_index(index);
  words_[index / kWordBits] |= std::uint64_t{1} << (index % kWordBits);
}

void PointSet::erase(std::size_t index) {
  check_index(index);
  words_[index / kWordBits] &= ~(std::uint64_t{1} << (index % kWordBits));
}

std::optional<std::size_t> PointSet::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
  }
  return std::nullopt;
}

std::optional<std::size_t> PointSet::next(std::size_t index) const {
  std::size_t start = index + 1;
  if (start >= universe_) return std::nullopt;
  std::size_t w = start / kWordBits;
  std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (start % kWordBits));
  while (true) {
    if (bits != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
    if (++w == words_.size()) return std::nullopt;
    bits = words_[w];
  }
}

std::vector<std::size_t> PointSet::indices() const {
  std::vector<std::size_t> out;
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

bool PointSet::is_subset_of(const PointSet& other) const {
  check_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

bool PointSet::intersects(const PointSet& other) const {
  check_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & other.words_[w]) != 0) return true;
  }
  return false;
}

PointSet PointSet::complement() const { return full(universe_) - *this; }

PointSet& PointSet::operator&=(const PointSet& other) {
  check_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

PointSet& PointSet::operator|=(const PointSet& other) {
  check_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

PointSet& PointSet::operator-=(const PointSet& other) {
  check_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

std::size_t PointSet::hash() const {
  std::size_t h = std::hash<std::size_t>{}(universe_);
  for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::string PointSet::to_string() const {
  std::ostringstream out;
  out << '{';
  bool first_item = true;
  for_each([&](std::size_t i) {
    if (!first_item) out << ", ";
    out << i;
    first_item = false;
  });
  out << '}';
  return out.str();
}

bool canonical_less(const PointSet& a, const PointSet& b) {
  const std::size_t sa = a.size();
  const std::size_t sb = b.size();
  if (sa != sb) return sa < sb;
  if (a.universe() != b.universe()) return a.universe() < b.universe();
  // With equal sizes, the set owning the smallest element of the symmetric
  // difference has the lexicographically smaller sorted sequence.
  const PointSet only_a = a - b;
  const PointSet only_b = b - a;
  const auto fa = only_a.first();
  const auto fb = only_b.first();
  if (!fa) return false;
  return *fa < *fb;
}

void sort_canonical(std::vector<PointSet>& sets) { std::sort(sets.begin(), sets.end(), CanonicalLess{}); }

}  // namespace convexity
