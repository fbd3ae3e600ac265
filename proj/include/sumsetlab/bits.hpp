#pragma once

// Dense bit-vector representations of normalized sets. Positions are
// nonnegative and bounded by a fixed capacity chosen at construction.
// Mask64 packs one machine word and carries the enumeration hot path;
// DenseBits covers arbitrary windows with identical semantics.

#include <algorithm>
#include <bit>
#include <cassert>
#include <concepts>
#include <cstdint>
#include <numeric>
#include <vector>

namespace sumsetlab {

class Mask64 {
 public:
  Mask64() = default;
  explicit Mask64(std::uint64_t raw) : bits_(raw) {}

  static Mask64 with_capacity(int capacity) {
    assert(capacity >= 0 && capacity <= 64);
    (void)capacity;
    return Mask64{};
  }

  int capacity() const { return 64; }
  std::uint64_t raw() const { return bits_; }
  bool none() const { return bits_ == 0; }
  int count() const { return std::popcount(bits_); }

  void set(int i) {
    assert(i >= 0 && i < 64);
    bits_ |= std::uint64_t{1} << i;
  }

  bool test(int i) const {
    assert(i >= 0 && i < 64);
    return (bits_ >> i) & 1u;
  }

  // Number of set positions inside [lo, hi]; zero when the window is empty.
  int ones_in(int lo, int hi) const {
    if (lo > hi) return 0;
    assert(lo >= 0 && hi < 64);
    return std::popcount(bits_ & range_mask(lo, hi));
  }

  void set_range(int lo, int hi) {
    if (lo > hi) return;
    assert(lo >= 0 && hi < 64);
    bits_ |= range_mask(lo, hi);
  }

  // OR in a shifted copy of src; bits shifted past position 63 are dropped.
  void or_shift(const Mask64& src, int k) {
    assert(k >= 0 && k < 64);
    bits_ |= src.bits_ << k;
  }

  void truncate_above(int hi) {
    assert(hi >= 0);
    if (hi < 63) bits_ &= range_mask(0, hi);
  }

  bool subset_of(const Mask64& other) const { return (bits_ & ~other.bits_) == 0; }

  // Visits set positions in ascending order.
  template <class F>
  void for_each(F&& f) const {
    for (std::uint64_t w = bits_; w != 0; w &= w - 1) f(std::countr_zero(w));
  }

  friend bool operator==(const Mask64&, const Mask64&) = default;

 private:
  static std::uint64_t range_mask(int lo, int hi) {
    const int width = hi - lo + 1;
    const std::uint64_t block = width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
    return block << lo;
  }

  std::uint64_t bits_ = 0;
};

class DenseBits {
 public:
  DenseBits() = default;
  explicit DenseBits(int capacity) : cap_(capacity), words_((capacity + 63) / 64, 0) {
    assert(capacity >= 0);
  }

  static DenseBits with_capacity(int capacity) { return DenseBits(capacity); }

  int capacity() const { return cap_; }
  bool none() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  int count() const {
    int total = 0;
    for (auto w : words_) total += std::popcount(w);
    return total;
  }

  void set(int i) {
    assert(i >= 0 && i < cap_);
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }

  bool test(int i) const {
    assert(i >= 0 && i < cap_);
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }

  int ones_in(int lo, int hi) const {
    if (lo > hi) return 0;
    assert(lo >= 0 && hi < cap_);
    const int wlo = lo >> 6, whi = hi >> 6;
    if (wlo == whi) return std::popcount(words_[wlo] & edge_mask(lo & 63, hi & 63));
    int total = std::popcount(words_[wlo] & edge_mask(lo & 63, 63));
    for (int w = wlo + 1; w < whi; ++w) total += std::popcount(words_[w]);
    total += std::popcount(words_[whi] & edge_mask(0, hi & 63));
    return total;
  }

  void set_range(int lo, int hi) {
    if (lo > hi) return;
    assert(lo >= 0 && hi < cap_);
    const int wlo = lo >> 6, whi = hi >> 6;
    if (wlo == whi) {
      words_[wlo] |= edge_mask(lo & 63, hi & 63);
      return;
    }
    words_[wlo] |= edge_mask(lo & 63, 63);
    for (int w = wlo + 1; w < whi; ++w) words_[w] = ~std::uint64_t{0};
    words_[whi] |= edge_mask(0, hi & 63);
  }

  // OR in a shifted copy of src; bits at or past this capacity are dropped.
  void or_shift(const DenseBits& src, int k) {
    assert(k >= 0);
    const int wshift = k >> 6, bshift = k & 63;
    const int nwords = static_cast<int>(words_.size());
    for (int i = static_cast<int>(src.words_.size()) - 1; i >= 0; --i) {
      const std::uint64_t w = src.words_[i];
      if (!w) continue;
      const int j = i + wshift;
      if (j < nwords) words_[j] |= w << bshift;
      if (bshift && j + 1 < nwords) words_[j + 1] |= w >> (64 - bshift);
    }
    trim_tail();
  }

  void truncate_above(int hi) {
    assert(hi >= 0);
    if (hi >= cap_ - 1) return;
    const int whi = hi >> 6;
    words_[whi] &= edge_mask(0, hi & 63);
    for (int w = whi + 1; w < static_cast<int>(words_.size()); ++w) words_[w] = 0;
  }

  bool subset_of(const DenseBits& other) const {
    const std::size_t common = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < common; ++i)
      if (words_[i] & ~other.words_[i]) return false;
    for (std::size_t i = common; i < words_.size(); ++i)
      if (words_[i]) return false;
    return true;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      for (std::uint64_t w = words_[i]; w != 0; w &= w - 1)
        f(static_cast<int>(i << 6) + std::countr_zero(w));
  }

  friend bool operator==(const DenseBits&, const DenseBits&) = default;

 private:
  static std::uint64_t edge_mask(int lo, int hi) {
    const int width = hi - lo + 1;
    const std::uint64_t block = width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
    return block << lo;
  }

  void trim_tail() {
    if (words_.empty()) return;
    const int used = cap_ & 63;
    if (used) words_.back() &= (std::uint64_t{1} << used) - 1;
  }

  int cap_ = 0;
  std::vector<std::uint64_t> words_;
};

template <class B>
concept BitBlock = requires(B s, const B c, int i) {
  { B::with_capacity(i) } -> std::same_as<B>;
  { c.capacity() } -> std::convertible_to<int>;
  { c.none() } -> std::convertible_to<bool>;
  { c.count() } -> std::convertible_to<int>;
  { c.test(i) } -> std::convertible_to<bool>;
  { c.ones_in(i, i) } -> std::convertible_to<int>;
  { c.subset_of(c) } -> std::convertible_to<bool>;
  { c == c } -> std::convertible_to<bool>;
  s.set(i);
  s.set_range(i, i);
  s.or_shift(c, i);
  s.truncate_above(i);
};

// Holes of s inside the window [lo, hi].
template <BitBlock B>
int holes_in(const B& s, int lo, int hi) {
  if (lo > hi) return 0;
  return (hi - lo + 1) - s.ones_in(lo, hi);
}

// Pairwise sums of two bit sets, truncated to [0, sum_capacity).
template <BitBlock B>
B sumset_bits(const B& a, const B& b, int sum_capacity) {
  B out = B::with_capacity(sum_capacity);
  b.for_each([&](int j) { out.or_shift(a, j); });
  return out;
}

// Greatest common divisor of the set positions; zero for {0} alone.
template <BitBlock B>
int gcd_of_positions(const B& s) {
  int g = 0;
  s.for_each([&](int x) { g = std::gcd(g, x); });
  return g;
}

}  // namespace sumsetlab
