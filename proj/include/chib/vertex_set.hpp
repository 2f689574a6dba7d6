#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace chib {

using Vertex = int;

/// Fixed-capacity set of vertex ids backed by 64-bit words.
///
/// The capacity is the order of the host graph; every member is < capacity.
/// Binary set operations require equal capacities.
class VertexSet {
public:
  VertexSet() = default;
  explicit VertexSet(std::size_t capacity)
      : capacity_(capacity), words_((capacity + 63) / 64, 0) {}
  VertexSet(std::size_t capacity, std::initializer_list<Vertex> members)
      : VertexSet(capacity) {
    for (Vertex v : members) insert(v);
  }

  static VertexSet full(std::size_t capacity) {
    VertexSet s(capacity);
    for (auto &w : s.words_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  template <typename Range>
  static VertexSet from_range(std::size_t capacity, const Range &members) {
    VertexSet s(capacity);
    for (auto v : members) s.insert(static_cast<Vertex>(v));
    return s;
  }

  std::size_t capacity() const { return capacity_; }

  bool contains(Vertex v) const {
    return v >= 0 && static_cast<std::size_t>(v) < capacity_ &&
           (words_[v >> 6] >> (v & 63) & 1U);
  }
  void insert(Vertex v) {
    check(v);
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
  }
  void erase(Vertex v) {
    check(v);
    words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }
  void toggle(Vertex v) {
    check(v);
    words_[v >> 6] ^= std::uint64_t{1} << (v & 63);
  }

  std::size_t size() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  /// Lowest member, or -1 when empty.
  Vertex first() const { return next(0); }
  /// Lowest member >= from, or -1.
  Vertex next(Vertex from) const {
    if (from < 0) from = 0;
    std::size_t wi = static_cast<std::size_t>(from) >> 6;
    if (wi >= words_.size()) return -1;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w) return static_cast<Vertex>(wi * 64 + std::countr_zero(w));
      if (++wi == words_.size()) return -1;
      w = words_[wi];
    }
  }

  template <typename F> void for_each(F &&f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        f(static_cast<Vertex>(wi * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

  bool intersects(const VertexSet &o) const {
    same(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  bool is_subset_of(const VertexSet &o) const {
    same(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  std::size_t intersection_size(const VertexSet &o) const {
    same(o);
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
    return c;
  }

  VertexSet &operator&=(const VertexSet &o) {
    same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet &operator|=(const VertexSet &o) {
    same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  /// Set difference.
  VertexSet &operator-=(const VertexSet &o) {
    same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet &b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet &b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet &b) { return a -= b; }
  /// Complement within [0, capacity).
  VertexSet operator~() const {
    VertexSet s = *this;
    for (auto &w : s.words_) w = ~w;
    s.trim();
    return s;
  }

  friend bool operator==(const VertexSet &, const VertexSet &) = default;

private:
  void check(Vertex v) const {
    if (v < 0 || static_cast<std::size_t>(v) >= capacity_)
      throw std::out_of_range("vertex id out of range");
  }
  void same(const VertexSet &o) const {
    if (o.capacity_ != capacity_)
      throw std::invalid_argument("vertex set capacity mismatch");
  }
  void trim() {
    if (capacity_ % 64 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (capacity_ % 64)) - 1;
  }

  std::size_t capacity_ = 0;
  std::vector<std::uint64_t> words_;
};

} // namespace chib
