// Small fixed-width sets over vertex or arc indices.
#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace reorilat {

inline constexpr int kMaxIndex = 64;

template <class Tag>
class IndexSet {
 public:
  constexpr IndexSet() = default;
  constexpr explicit IndexSet(std::uint64_t bits) : bits_(bits) {}
  IndexSet(std::initializer_list<int> xs) {
    for (int x : xs) {
      insert(x);
    }
  }

  static constexpr IndexSet full(int n) {
    return IndexSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }
  static constexpr IndexSet single(int i) { return IndexSet(std::uint64_t{1} << i); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1U; }
  constexpr void insert(int i) { bits_ |= std::uint64_t{1} << i; }
  constexpr void erase(int i) { bits_ &= ~(std::uint64_t{1} << i); }
  constexpr void toggle(int i) { bits_ ^= std::uint64_t{1} << i; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr int first() const { return std::countr_zero(bits_); }

  constexpr bool subset_of(IndexSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(IndexSet o) const { return (bits_ & o.bits_) != 0; }

  constexpr IndexSet operator|(IndexSet o) const { return IndexSet(bits_ | o.bits_); }
  constexpr IndexSet operator&(IndexSet o) const { return IndexSet(bits_ & o.bits_); }
  constexpr IndexSet operator^(IndexSet o) const { return IndexSet(bits_ ^ o.bits_); }
  constexpr IndexSet operator-(IndexSet o) const { return IndexSet(bits_ & ~o.bits_); }
  constexpr IndexSet& operator|=(IndexSet o) { bits_ |= o.bits_; return *this; }
  constexpr IndexSet& operator&=(IndexSet o) { bits_ &= o.bits_; return *this; }
  constexpr IndexSet& operator-=(IndexSet o) { bits_ &= ~o.bits_; return *this; }

  constexpr bool operator==(IndexSet const&) const = default;
  constexpr auto operator<=>(IndexSet const&) const = default;

  // ascending members
  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(std::countr_zero(b));
    }
    return out;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      f(std::countr_zero(b));
    }
  }

 private:
  std::uint64_t bits_ = 0;
};

struct VertexTag {};
struct ArcTag {};
using VertexSet = IndexSet<VertexTag>;
using ArcSet = IndexSet<ArcTag>;

}  // namespace reorilat

template <class Tag>
struct std::hash<reorilat::IndexSet<Tag>> {
  std::size_t operator()(reorilat::IndexSet<Tag> s) const noexcept {
    return std::hash<std::uint64_t>{}(s.bits());
  }
};
