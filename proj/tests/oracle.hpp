#pragma once

// Naive reference implementations used to cross-check the library. Everything
// here is written the slow, obvious way on plain vectors: double loops,
// linear membership scans, no bit tricks, no shared code with the library.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle {

using Set = std::vector<long long>;  // sorted, duplicate-free

inline Set canon(Set xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

inline bool contains(const Set& s, long long x) {
  for (long long v : s)
    if (v == x) return true;
  return false;
}

inline Set sumset(const Set& a, const Set& b) {
  Set out;
  for (long long x : a)
    for (long long y : b) out.push_back(x + y);
  return canon(out);
}

inline Set h_fold(const Set& a, int h) {
  Set acc = a;
  for (int i = 1; i < h; ++i) acc = sumset(acc, a);
  return acc;
}

inline long long count_in(const Set& s, long long lo, long long hi) {
  long long total = 0;
  for (long long v : s)
    if (lo <= v && v <= hi) ++total;
  return total;
}

inline long long holes_in(const Set& s, long long lo, long long hi) {
  if (lo > hi) return 0;
  return (hi - lo + 1) - count_in(s, lo, hi);
}

inline long long gcd_star(const Set& s) {
  long long g = 0;
  for (long long v : s) g = std::gcd(g, v - s.front());
  return g;
}

// Exhaustive shift scan over every shift that could land A inside B.
inline int delta(const Set& a, const Set& b) {
  for (long long x = b.front() - a.back(); x <= b.back() - a.front(); ++x) {
    bool fits = true;
    for (long long v : a)
      if (!contains(b, v + x)) {
        fits = false;
        break;
      }
    if (fits) return 1;
  }
  return 0;
}

struct Run {
  long long start = 0;
  long long length = 0;
};

inline Run longest_run(const Set& s) {
  Run best;
  for (long long v : s) {
    if (contains(s, v - 1)) continue;  // not the start of a run
    long long len = 0;
    while (contains(s, v + len)) ++len;
    if (len > best.length) best = {v, len};
  }
  return best;
}

inline Run longest_ap(const Set& s, long long d) {
  Run best;
  for (long long v : s) {
    if (contains(s, v - d)) continue;
    long long len = 0;
    while (contains(s, v + len * d)) ++len;
    if (len > best.length || (len == best.length && v < best.start)) best = {v, len};
  }
  return best;
}

// Stability of holes, straight from the definitions on a normalized pair
// with max(A) = m >= n = max(B). The sumset is recomputed internally.
struct Tags {
  bool left = false;
  bool right = false;
};

inline Tags tags_for_a_hole(const Set& a, const Set& b, long long x) {
  const Set ab = sumset(a, b);
  const long long m = a.back(), n = b.back();
  Tags t;
  t.left = 0 <= x && x <= n - 1 && !contains(ab, x);
  t.right = m - n + 1 <= x && x <= m && !contains(ab, x + n);
  return t;
}

inline Tags tags_for_b_hole(const Set& a, const Set& b, long long x) {
  const Set ab = sumset(a, b);
  const long long m = a.back(), n = b.back();
  Tags t;
  t.left = 0 <= x && x <= n - 1 && !contains(ab, x);
  t.right = 1 <= x && x <= n && !contains(ab, x + m);
  return t;
}

struct StabilityCensus {
  long long stable_a = 0, unstable_a = 0;
  long long stable_b = 0, unstable_b = 0;
};

inline StabilityCensus stability_census(const Set& a, const Set& b) {
  StabilityCensus census;
  for (long long x = 0; x <= a.back(); ++x) {
    if (contains(a, x)) continue;
    const Tags t = tags_for_a_hole(a, b, x);
    (t.left || t.right) ? ++census.stable_a : ++census.unstable_a;
  }
  for (long long x = 0; x <= b.back(); ++x) {
    if (contains(b, x)) continue;
    const Tags t = tags_for_b_hole(a, b, x);
    (t.left || t.right) ? ++census.stable_b : ++census.unstable_b;
  }
  return census;
}

}  // namespace oracle
