#pragma once

// Finite nonempty sets of integers with exact arithmetic: normalization,
// sumsets, h-fold sums, diameter, gcd of gaps, hole counts, and the
// translate-containment test.
//
// Elements are confined to the signed 32-bit window; any operation whose
// result would leave it throws RangeError instead of wrapping.

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "sumsetlab/bits.hpp"

namespace sumsetlab {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A caller broke a documented precondition or an enumeration guard.
struct ContractError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A result left the signed 32-bit element window.
struct RangeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Closed integer interval [lo, hi]; empty exactly when lo > hi.
struct Interval {
  std::int64_t lo = 0;
  std::int64_t hi = -1;

  bool empty() const { return lo > hi; }
  std::int64_t size() const { return empty() ? 0 : hi - lo + 1; }
  bool contains(std::int64_t x) const { return lo <= x && x <= hi; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

class IntSet {
 public:
  // Sorts and deduplicates. A set is always nonempty.
  explicit IntSet(std::vector<std::int32_t> elements) : xs_(std::move(elements)) {
    if (xs_.empty()) throw ContractError("IntSet: a set must be nonempty");
    std::sort(xs_.begin(), xs_.end());
    xs_.erase(std::unique(xs_.begin(), xs_.end()), xs_.end());
  }

  IntSet(std::initializer_list<std::int32_t> elements)
      : IntSet(std::vector<std::int32_t>(elements)) {}

  std::int64_t size() const { return static_cast<std::int64_t>(xs_.size()); }
  std::int32_t min() const { return xs_.front(); }
  std::int32_t max() const { return xs_.back(); }

  bool contains(std::int64_t x) const {
    if (x < xs_.front() || x > xs_.back()) return false;
    return std::binary_search(xs_.begin(), xs_.end(), static_cast<std::int32_t>(x));
  }

  const std::vector<std::int32_t>& elements() const { return xs_; }
  auto begin() const { return xs_.begin(); }
  auto end() const { return xs_.end(); }

  friend bool operator==(const IntSet&, const IntSet&) = default;

 private:
  std::vector<std::int32_t> xs_;
};

inline std::int64_t diam(const IntSet& s) {
  return static_cast<std::int64_t>(s.max()) - s.min();
}

inline bool is_normalized(const IntSet& s) { return s.min() == 0; }

struct Normalized {
  IntSet set;
  std::int32_t offset;  // amount subtracted from every element
};

inline IntSet translate(const IntSet& s, std::int64_t shift) {
  const std::int64_t lo = s.min() + shift;
  const std::int64_t hi = s.max() + shift;
  if (lo < std::numeric_limits<std::int32_t>::min() ||
      hi > std::numeric_limits<std::int32_t>::max())
    throw RangeError("translate: result leaves the 32-bit element window");
  std::vector<std::int32_t> xs;
  xs.reserve(s.elements().size());
  for (auto x : s) xs.push_back(static_cast<std::int32_t>(x + shift));
  return IntSet(std::move(xs));
}

inline Normalized normalize(const IntSet& s) {
  if (diam(s) > std::numeric_limits<std::int32_t>::max())
    throw RangeError("normalize: diameter exceeds the 32-bit element window");
  const std::int32_t offset = s.min();
  return Normalized{translate(s, -static_cast<std::int64_t>(offset)), offset};
}

// Mirror image {min + max - x}; always stays inside [min, max].
inline IntSet reflect(const IntSet& s) {
  const std::int64_t pivot = static_cast<std::int64_t>(s.min()) + s.max();
  std::vector<std::int32_t> xs;
  xs.reserve(s.elements().size());
  for (auto it = s.elements().rbegin(); it != s.elements().rend(); ++it)
    xs.push_back(static_cast<std::int32_t>(pivot - *it));
  return IntSet(std::move(xs));
}

namespace detail {

// Window span above which the bitmap path would allocate too much; beyond it
// the pairwise path is used instead.
inline constexpr std::int64_t dense_sumset_span = std::int64_t{1} << 25;

}  // namespace detail

inline IntSet sumset(const IntSet& a, const IntSet& b) {
  const std::int64_t lo = static_cast<std::int64_t>(a.min()) + b.min();
  const std::int64_t hi = static_cast<std::int64_t>(a.max()) + b.max();
  if (lo < std::numeric_limits<std::int32_t>::min() ||
      hi > std::numeric_limits<std::int32_t>::max())
    throw RangeError("sumset: result leaves the 32-bit element window");

  const std::int64_t span = hi - lo;
  std::vector<std::int32_t> out;
  if (span < detail::dense_sumset_span) {
    DenseBits base(static_cast<int>(diam(a)) + 1);
    for (auto x : a) base.set(static_cast<int>(x - a.min()));
    DenseBits acc(static_cast<int>(span) + 1);
    for (auto y : b) acc.or_shift(base, static_cast<int>(y - b.min()));
    out.reserve(acc.count());
    acc.for_each([&](int i) { out.push_back(static_cast<std::int32_t>(lo + i)); });
  } else {
    out.reserve(a.elements().size() * b.elements().size());
    for (auto x : a)
      for (auto y : b) out.push_back(static_cast<std::int32_t>(static_cast<std::int64_t>(x) + y));
  }
  return IntSet(std::move(out));
}

// h-fold iterated sumset by binary decomposition; h must be at least 1.
inline IntSet h_fold_sumset(const IntSet& a, std::int64_t h) {
  if (h < 1) throw ContractError("h_fold_sumset: h must be at least 1");
  IntSet acc({0});
  IntSet base = a;
  while (true) {
    if (h & 1) acc = sumset(acc, base);
    h >>= 1;
    if (!h) break;
    base = sumset(base, base);
  }
  return acc;
}

// gcd of the gaps {x - min : x in S}; zero for a singleton.
inline std::int64_t gcd_star(const IntSet& s) {
  std::int64_t g = 0;
  for (auto x : s) {
    g = std::gcd(g, static_cast<std::int64_t>(x) - s.min());
    if (g == 1) break;
  }
  return g;
}

// 1 when some translate x + A is contained in B, else 0.
inline int delta(const IntSet& a, const IntSet& b) {
  if (diam(a) > diam(b)) return 0;
  for (auto anchor : b) {
    // A shift must send min A to an element of B.
    const std::int64_t shift = static_cast<std::int64_t>(anchor) - a.min();
    if (a.max() + shift > b.max()) break;
    bool fits = true;
    for (auto x : a)
      if (!b.contains(x + shift)) {
        fits = false;
        break;
      }
    if (fits) return 1;
  }
  return 0;
}

// Missing positions of s inside the window.
inline std::int64_t holes(const IntSet& s, const Interval& window) {
  if (window.empty()) return 0;
  const auto& xs = s.elements();
  auto first = std::lower_bound(xs.begin(), xs.end(), window.lo,
                                [](std::int32_t e, std::int64_t v) { return e < v; });
  auto last = std::upper_bound(xs.begin(), xs.end(), window.hi,
                               [](std::int64_t v, std::int32_t e) { return v < e; });
  return window.size() - (last - first);
}

// Holes over the set's own span [min, max].
inline std::int64_t holes(const IntSet& s) {
  return holes(s, Interval{s.min(), s.max()});
}

}  // namespace sumsetlab
