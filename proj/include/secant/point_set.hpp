#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace secant {

// Fixed-capacity bitset over at most 128 indices. Used for subsets of the
// poset P (index = (row-1)*2b + col-1) and for squarefree monomials.
class PointSet {
 public:
  static constexpr int kCapacity = 128;

  constexpr PointSet() = default;

  constexpr void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  constexpr void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  constexpr bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

  constexpr int count() const { return std::popcount(words_[0]) + std::popcount(words_[1]); }
  constexpr bool empty() const { return (words_[0] | words_[1]) == 0; }
  constexpr bool any() const { return !empty(); }

  constexpr bool intersects(const PointSet& o) const {
    return ((words_[0] & o.words_[0]) | (words_[1] & o.words_[1])) != 0;
  }
  constexpr bool subset_of(const PointSet& o) const {
    return ((words_[0] & ~o.words_[0]) | (words_[1] & ~o.words_[1])) == 0;
  }

  // Lowest set index, or -1.
  constexpr int first() const {
    if (words_[0]) return std::countr_zero(words_[0]);
    if (words_[1]) return 64 + std::countr_zero(words_[1]);
    return -1;
  }

  // Next set index strictly after i, or -1.
  constexpr int next(int i) const {
    ++i;
    if (i >= kCapacity) return -1;
    int w = i >> 6;
    std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (i & 63));
    while (true) {
      if (bits) return (w << 6) + std::countr_zero(bits);
      if (++w == 2) return -1;
      bits = words_[w];
    }
  }

  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (int i = first(); i >= 0; i = next(i)) out.push_back(i);
    return out;
  }

  template <class F>
  constexpr void for_each(F&& f) const {
    for (int i = first(); i >= 0; i = next(i)) f(i);
  }

  constexpr PointSet& operator|=(const PointSet& o) {
    words_[0] |= o.words_[0];
    words_[1] |= o.words_[1];
    return *this;
  }
  constexpr PointSet& operator&=(const PointSet& o) {
    words_[0] &= o.words_[0];
    words_[1] &= o.words_[1];
    return *this;
  }
  // Set difference.
  constexpr PointSet& operator-=(const PointSet& o) {
    words_[0] &= ~o.words_[0];
    words_[1] &= ~o.words_[1];
    return *this;
  }
  friend constexpr PointSet operator|(PointSet l, const PointSet& r) { return l |= r; }
  friend constexpr PointSet operator&(PointSet l, const PointSet& r) { return l &= r; }
  friend constexpr PointSet operator-(PointSet l, const PointSet& r) { return l -= r; }

  friend constexpr bool operator==(const PointSet&, const PointSet&) = default;
  // Orders by the word array, high word first; only used for canonical keys.
  friend constexpr std::strong_ordering operator<=>(const PointSet& l, const PointSet& r) {
    if (auto c = l.words_[1] <=> r.words_[1]; c != 0) return c;
    return l.words_[0] <=> r.words_[0];
  }

  constexpr std::uint64_t word(int w) const { return words_[w]; }

 private:
  std::array<std::uint64_t, 2> words_{};
};

struct PointSetHash {
  std::size_t operator()(const PointSet& s) const noexcept {
    std::uint64_t h = s.word(0) * 0x9E3779B97F4A7C15ull;
    h ^= (s.word(1) + 0x632BE59BD9B4E019ull + (h << 6) + (h >> 2));
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

}  // namespace secant
