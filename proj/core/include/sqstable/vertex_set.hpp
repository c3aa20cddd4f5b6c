#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace sqstable {

// A subset of {0..63} stored as a single machine word. Every graph in this
// library has at most 64 vertices, so one word covers any vertex range.
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr int kCapacity = 64;

  class Iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    constexpr Iterator() = default;
    constexpr explicit Iterator(Word rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr Iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr Iterator operator++(int) {
      Iterator copy = *this;
      ++*this;
      return copy;
    }
    constexpr bool operator==(const Iterator&) const = default;

   private:
    Word rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(Word bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> members) {
    for (int v : members) insert(v);
  }

  // {0, ..., n-1}
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= kCapacity ? ~Word{0} : ((Word{1} << n) - 1));
  }
  static constexpr VertexSet single(int v) { return VertexSet(Word{1} << v); }
  static VertexSet from_vector(const std::vector<int>& members) {
    VertexSet s;
    for (int v : members) s.insert(v);
    return s;
  }

  constexpr Word bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr void insert(int v) { bits_ |= Word{1} << v; }
  constexpr void erase(int v) { bits_ &= ~(Word{1} << v); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  // Smallest member; undefined on the empty set.
  constexpr int front() const { return std::countr_zero(bits_); }
  constexpr bool is_subset_of(VertexSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(VertexSet other) const {
    return (bits_ & other.bits_) != 0;
  }

  constexpr Iterator begin() const { return Iterator(bits_); }
  constexpr Iterator end() const { return Iterator(0); }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int v : *this) out.push_back(v);
    return out;
  }

  // "{0,2,5}"
  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (int v : *this) {
      if (!first) out += ',';
      out += std::to_string(v);
      first = false;
    }
    out += '}';
    return out;
  }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet operator^(VertexSet o) const { return VertexSet(bits_ ^ o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator&=(VertexSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator-=(VertexSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }
  constexpr bool operator==(const VertexSet&) const = default;

 private:
  Word bits_ = 0;
};

// Lexicographic order on the sorted member lists, e.g. {0,3} < {1} and
// {0} < {0,1}. This is the tie-break order for every witness in the library.
constexpr bool lex_less(VertexSet a, VertexSet b) {
  const VertexSet::Word diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  const int x = std::countr_zero(diff);
  const VertexSet::Word above = x == 63 ? 0 : (~VertexSet::Word{0} << (x + 1));
  if (a.contains(x)) {
    // b continues with something larger than x, unless b stops here.
    return (b.bits() & above) != 0;
  }
  return (a.bits() & above) == 0;
}

struct LexLess {
  constexpr bool operator()(VertexSet a, VertexSet b) const { return lex_less(a, b); }
};

}  // namespace sqstable
