#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace eternal {

inline constexpr int kMaxVertices = 63;

// A set of vertices of a graph with at most 63 vertices, stored as a bit mask.
class VertexSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  constexpr VertexSet(std::initializer_list<int> vertices) {
    for (int v : vertices) bits_ |= std::uint64_t{1} << v;
  }

  static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }
  // {0, ..., n-1}
  static constexpr VertexSet first(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  // Smallest element; undefined on the empty set.
  constexpr int lowest() const { return std::countr_zero(bits_); }
  constexpr int highest() const { return 63 - std::countl_zero(bits_); }
  constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr VertexSet with(int v) const { return VertexSet(bits_ | (std::uint64_t{1} << v)); }
  constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }
  constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator^(VertexSet o) const { return VertexSet(bits_ ^ o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

  // Numeric order of the masks, used for sorting and indexing; see lex_less for
  // the order on sorted vertex lists.
  constexpr auto operator<=>(const VertexSet&) const = default;

  std::vector<int> to_vector() const { return {begin(), end()}; }

 private:
  std::uint64_t bits_ = 0;
};

// Lexicographic order on the sorted vertex lists: {0,3} < {1,2}, {0} < {0,1}.
constexpr bool lex_less(VertexSet a, VertexSet b) {
  const VertexSet diff = a ^ b;
  if (diff.empty()) return false;
  const int x = diff.lowest();
  // At the first difference the set holding x has the smaller element, unless
  // the other list has already ended.
  if (a.contains(x)) return (b.bits() >> x) != 0;
  return (a.bits() >> x) == 0;
}

// "{0,2,5}"
std::string to_string(VertexSet s);

}  // namespace eternal

namespace eternal {

// Calls f(VertexSet) for every k-subset of {0..n-1} in ascending mask order.
template <class F>
void for_each_subset_of_size(int n, int k, F&& f) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    f(VertexSet{});
    return;
  }
  const std::uint64_t limit = n >= 64 ? 0 : (std::uint64_t{1} << n);
  std::uint64_t x = (k >= 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  while (true) {
    f(VertexSet(x));
    // Gosper's hack: next larger integer with the same popcount.
    const std::uint64_t c = x & (~x + 1);
    const std::uint64_t r = x + c;
    if (r == 0 || r >= limit) return;
    x = (((r ^ x) >> 2) / c) | r;
    if (x >= limit) return;
  }
}

// Binomial coefficient in floating point, for size estimates.
inline double binomial_estimate(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double out = 1.0;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

}  // namespace eternal
