#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace granule {

/// Fixed-universe set of indices backed by 64-bit words.
///
/// The tag parameter keeps object sets and attribute sets from being mixed
/// up; both share the same representation.  Bits beyond the universe are
/// always zero, so word-wise comparison is exact.
template <class Tag>
class IndexSet {
 public:
  IndexSet() = default;

  explicit IndexSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  IndexSet(std::size_t universe, std::initializer_list<std::size_t> members)
      : IndexSet(universe) {
    for (auto i : members) insert(i);
  }

  template <class Range>
  static IndexSet from_range(std::size_t universe, const Range& members) {
    IndexSet s(universe);
    for (auto i : members) s.insert(static_cast<std::size_t>(i));
    return s;
  }

  static IndexSet full(std::size_t universe) {
    IndexSet s(universe);
    std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
    s.trim();
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }

  bool contains(std::size_t i) const {
    check(i);
    return (words_[i / 64] >> (i % 64)) & 1U;
  }

  void insert(std::size_t i) {
    check(i);
    words_[i / 64] |= std::uint64_t{1} << (i % 64);
  }

  void erase(std::size_t i) {
    check(i);
    words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
  }

  std::size_t size() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
  }

  bool is_full() const noexcept { return size() == universe_; }

  bool is_subset_of(const IndexSet& other) const {
    same_universe(other);
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~other.words_[k]) return false;
    return true;
  }

  bool is_proper_subset_of(const IndexSet& other) const {
    return is_subset_of(other) && *this != other;
  }

  bool intersects(const IndexSet& other) const {
    same_universe(other);
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & other.words_[k]) return true;
    return false;
  }

  IndexSet& operator&=(const IndexSet& other) {
    same_universe(other);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
    return *this;
  }

  IndexSet& operator|=(const IndexSet& other) {
    same_universe(other);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
    return *this;
  }

  // Set difference.
  IndexSet& operator-=(const IndexSet& other) {
    same_universe(other);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~other.words_[k];
    return *this;
  }

  friend IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }
  friend IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }
  friend IndexSet operator-(IndexSet a, const IndexSet& b) { return a -= b; }

  IndexSet complement() const {
    IndexSet c(universe_);
    for (std::size_t k = 0; k < words_.size(); ++k) c.words_[k] = ~words_[k];
    c.trim();
    return c;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      auto w = words_[k];
      while (w) {
        auto bit = static_cast<std::size_t>(std::countr_zero(w));
        f(k * 64 + bit);
        w &= w - 1;
      }
    }
  }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  friend bool operator==(const IndexSet& a, const IndexSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  std::size_t hash() const noexcept {
    std::size_t h = universe_;
    for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

 private:
  void check(std::size_t i) const {
    if (i >= universe_) throw std::out_of_range("index outside set universe");
  }

  void same_universe(const IndexSet& other) const {
    if (other.universe_ != universe_)
      throw std::invalid_argument("index sets over different universes");
  }

  void trim() {
    if (universe_ % 64 != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Lexicographic order on the ascending member lists ({1,2,7} < {1,6,7} < {2}).
template <class Tag>
bool lex_less(const IndexSet<Tag>& a, const IndexSet<Tag>& b) {
  auto ma = a.members();
  auto mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

struct ObjectTag {};
struct AttributeTag {};

using ObjectSet = IndexSet<ObjectTag>;
using AttributeSet = IndexSet<AttributeTag>;

}  // namespace granule

template <class Tag>
struct std::hash<granule::IndexSet<Tag>> {
  std::size_t operator()(const granule::IndexSet<Tag>& s) const noexcept { return s.hash(); }
};
