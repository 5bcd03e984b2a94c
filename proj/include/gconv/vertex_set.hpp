#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <ostream>
#include <vector>

#include "errors.hpp"

namespace gconv {

using Vertex = std::size_t;

/**
 * Dense subset of the vertex range [0, universe), stored as 64-bit words.
 *
 * All binary operations require both operands to share the same universe.
 * Bits at positions >= universe are always zero.
 */
class VertexSet {
 public:
  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    const_iterator() = default;
    const_iterator(const VertexSet* set, Vertex pos) : set_(set), pos_(pos) {}

    Vertex operator*() const { return pos_; }
    const_iterator& operator++() {
      pos_ = set_->next(pos_ + 1);
      return *this;
    }
    const_iterator operator++(int) {
      auto old = *this;
      ++*this;
      return old;
    }
    bool operator==(const const_iterator& other) const { return pos_ == other.pos_; }

   private:
    const VertexSet* set_ = nullptr;
    Vertex pos_ = 0;
  };

  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
    for (Vertex v : members) insert(v);
  }
  template <class Range>
  static VertexSet from_range(std::size_t universe, const Range& members) {
    VertexSet s(universe);
    for (auto v : members) s.insert(static_cast<Vertex>(v));
    return s;
  }
  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }
  // Members are the set bits of `mask`; universe must be <= 64.
  static VertexSet from_mask(std::size_t universe, std::uint64_t mask) {
    VertexSet s(universe);
    if (!s.words_.empty()) s.words_[0] = mask;
    s.trim();
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }

  std::size_t size() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }

  bool contains(Vertex v) const noexcept {
    return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1U) != 0;
  }
  void insert(Vertex v) {
    check(v);
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
  }
  void erase(Vertex v) {
    check(v);
    words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }
  void clear() noexcept { std::fill(words_.begin(), words_.end(), 0); }

  // Smallest member >= from, or universe() if none.
  Vertex next(Vertex from) const noexcept {
    if (from >= universe_) return universe_;
    std::size_t wi = from >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w != 0) return (wi << 6) + static_cast<Vertex>(std::countr_zero(w));
      if (++wi == words_.size()) return universe_;
      w = words_[wi];
    }
  }
  Vertex first() const noexcept { return next(0); }

  const_iterator begin() const { return {this, first()}; }
  const_iterator end() const { return {this, universe_}; }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

  // Low 64 members as a mask; meaningful only when universe() <= 64.
  std::uint64_t mask() const noexcept { return words_.empty() ? 0 : words_[0]; }

  VertexSet& operator|=(const VertexSet& o) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  // Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  VertexSet complement() const {
    VertexSet c = full(universe_);
    return c -= *this;
  }

  bool is_subset_of(const VertexSet& o) const {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~o.words_[i]) != 0) return false;
    return true;
  }
  bool intersects(const VertexSet& o) const {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & o.words_[i]) != 0) return true;
    return false;
  }
  std::size_t intersection_size(const VertexSet& o) const {
    same_universe(o);
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
    return c;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  friend std::ostream& operator<<(std::ostream& os, const VertexSet& s) {
    os << '{';
    bool first = true;
    for (Vertex v : s) {
      if (!first) os << ',';
      os << v;
      first = false;
    }
    return os << '}';
  }

 private:
  void check(Vertex v) const {
    if (v >= universe_)
      throw usage_error("vertex " + std::to_string(v) + " out of range [0," +
                        std::to_string(universe_) + ")");
  }
  void same_universe(const VertexSet& o) const {
    if (o.universe_ != universe_) throw usage_error("vertex sets over different universes");
  }
  void trim() noexcept {
    if (universe_ & 63) words_.back() &= (std::uint64_t{1} << (universe_ & 63)) - 1;
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace gconv
