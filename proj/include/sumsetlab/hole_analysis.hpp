#pragma once

// Hole bookkeeping for a normalized pair (min A = min B = 0, max A >= max B):
// the arithmetic profile, stability classification of holes, the two counting
// inequalities bounding holes near a missing sum, and the frontier interval
// guaranteed to sit inside A + B.

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <utility>
#include <vector>

#include "sumsetlab/bits.hpp"
#include "sumsetlab/core.hpp"

namespace sumsetlab {

template <BitBlock B>
struct PairBits {
  B a, b, ab;
  int max_a = 0;  // diameter of A
  int max_b = 0;  // diameter of B
  int size_a = 1, size_b = 1, size_sumset = 1;
};

// Builds the sumset and sizes from two normalized bit sets. The caller
// guarantees 0 and max_a are set in a, 0 and max_b in b, and max_a >= max_b.
template <BitBlock B>
PairBits<B> make_pair_bits(B a, B b, int max_a, int max_b) {
  assert(max_b >= 0 && max_a >= max_b);
  assert(a.test(0) && a.test(max_a) && b.test(0) && b.test(max_b));
  PairBits<B> p;
  p.max_a = max_a;
  p.max_b = max_b;
  p.ab = sumset_bits(a, b, max_a + max_b + 1);
  p.a = std::move(a);
  p.b = std::move(b);
  p.size_a = p.a.count();
  p.size_b = p.b.count();
  p.size_sumset = p.ab.count();
  return p;
}

// Largest combined window the dense representation will materialize.
inline constexpr std::int64_t max_analysis_window = std::int64_t{1} << 24;

inline PairBits<DenseBits> make_pair_bits(const IntSet& a, const IntSet& b) {
  if (a.min() != 0 || b.min() != 0)
    throw ContractError("pair analysis: sets must be normalized (min 0)");
  if (diam(b) > diam(a))
    throw ContractError("pair analysis: diam A must be >= diam B (swap the arguments)");
  const std::int64_t m = diam(a), n = diam(b);
  if (m + n + 1 > max_analysis_window)
    throw ContractError("pair analysis: combined window exceeds the dense limit");
  DenseBits abits(static_cast<int>(m) + 1);
  for (auto x : a) abits.set(static_cast<int>(x));
  DenseBits bbits(static_cast<int>(n) + 1);
  for (auto x : b) bbits.set(static_cast<int>(x));
  return make_pair_bits(std::move(abits), std::move(bbits), static_cast<int>(m),
                        static_cast<int>(n));
}

struct SumsetProfile {
  int max_a = 0, max_b = 0;
  int size_a = 1, size_b = 1, size_sumset = 1;
  int excess = 0;  // |A+B| - |A| - |B| + 1
  int holes_a = 0, holes_b = 0, holes_sumset = 0;
  int delta = 0;  // 1 when some translate of A fits inside B
  int gcd_a = 0, gcd_sumset = 0;

  friend bool operator==(const SumsetProfile&, const SumsetProfile&) = default;
};

template <BitBlock B>
SumsetProfile profile(const PairBits<B>& p) {
  SumsetProfile pf;
  pf.max_a = p.max_a;
  pf.max_b = p.max_b;
  pf.size_a = p.size_a;
  pf.size_b = p.size_b;
  pf.size_sumset = p.size_sumset;
  pf.excess = p.size_sumset - p.size_a - p.size_b + 1;
  pf.holes_a = p.max_a + 1 - p.size_a;
  pf.holes_b = p.max_b + 1 - p.size_b;
  pf.holes_sumset = p.max_a + p.max_b + 1 - p.size_sumset;
  pf.delta = (p.max_a == p.max_b && p.a.subset_of(p.b)) ? 1 : 0;
  pf.gcd_a = gcd_of_positions(p.a);
  pf.gcd_sumset = gcd_of_positions(p.ab);
  assert(pf.holes_sumset == pf.holes_a + pf.holes_b - pf.excess);
  return pf;
}

inline SumsetProfile profile(const IntSet& a, const IntSet& b) {
  return profile(make_pair_bits(a, b));
}

// Both hypotheses of the long-run guarantee, in hole form:
// few holes in A, and excess at most |B| - 2 - delta.
inline bool run_hypotheses(const SumsetProfile& pf) {
  return pf.holes_a <= pf.size_b - 2 && pf.excess <= pf.size_b - 2 - pf.delta;
}

// Stability of a hole x of A:
//   left  means x is in [0, max_b - 1] and x is missing from A + B;
//   right means x is in [max_a - max_b + 1, max_a] and x + max_b is missing.
template <BitBlock B>
std::pair<bool, bool> hole_tags_a(const PairBits<B>& p, int x) {
  const bool left = x <= p.max_b - 1 && !p.ab.test(x);
  const bool right = x >= p.max_a - p.max_b + 1 && !p.ab.test(x + p.max_b);
  return {left, right};
}

// Stability of a hole x of B:
//   left  means x is in [0, max_b - 1] and x is missing from A + B;
//   right means x is in [1, max_b] and x + max_a is missing.
template <BitBlock B>
std::pair<bool, bool> hole_tags_b(const PairBits<B>& p, int x) {
  const bool left = x <= p.max_b - 1 && !p.ab.test(x);
  const bool right = x >= 1 && !p.ab.test(x + p.max_a);
  return {left, right};
}

enum class HoleSide { left, middle, right };

struct SetHole {
  int position = 0;
  bool left_stable = false;
  bool right_stable = false;

  friend bool operator==(const SetHole&, const SetHole&) = default;
};

struct SumsetHole {
  int position = 0;
  HoleSide side = HoleSide::middle;
  int witness_a = -1;  // matching position in the window of A, -1 for middle
  int witness_b = -1;  // matching position in the window of B, -1 for middle

  friend bool operator==(const SumsetHole&, const SumsetHole&) = default;
};

struct HoleLedger {
  std::vector<SetHole> holes_a, holes_b;
  std::vector<SumsetHole> holes_sumset;
  int stable_a = 0, stable_b = 0;
  int unstable_a = 0, unstable_b = 0;
};

template <BitBlock B>
HoleLedger classify(const PairBits<B>& p) {
  HoleLedger lg;
  const int m = p.max_a, n = p.max_b;
  lg.holes_a.reserve(m + 1 - p.size_a);
  for (int x = 1; x < m; ++x) {
    if (p.a.test(x)) continue;
    const auto [left, right] = hole_tags_a(p, x);
    lg.holes_a.push_back({x, left, right});
    (left || right) ? ++lg.stable_a : ++lg.unstable_a;
  }
  lg.holes_b.reserve(n + 1 - p.size_b);
  for (int x = 1; x < n; ++x) {
    if (p.b.test(x)) continue;
    const auto [left, right] = hole_tags_b(p, x);
    lg.holes_b.push_back({x, left, right});
    (left || right) ? ++lg.stable_b : ++lg.unstable_b;
  }
  lg.holes_sumset.reserve(m + n + 1 - p.size_sumset);
  for (int x = 0; x <= m + n; ++x) {
    if (p.ab.test(x)) continue;
    if (x <= n - 1)
      lg.holes_sumset.push_back({x, HoleSide::left, x, x});
    else if (x >= m + 1)
      lg.holes_sumset.push_back({x, HoleSide::right, x - n, x - m});
    else
      lg.holes_sumset.push_back({x, HoleSide::middle, -1, -1});
  }
  return lg;
}

inline HoleLedger classify(const IntSet& a, const IntSet& b) {
  return classify(make_pair_bits(a, b));
}

struct KeyLemmaEntry {
  int position = 0;        // the missing sum
  HoleSide side = HoleSide::left;
  int slack = 0;           // combined hole count minus the required minimum

  friend bool operator==(const KeyLemmaEntry&, const KeyLemmaEntry&) = default;
};

struct KeyLemmaReport {
  std::vector<KeyLemmaEntry> entries;
  bool falsified = false;
};

// Visits every missing sum in the left and right windows with the combined
// hole count it forces in A and B. Returns false when any entry has negative
// slack, i.e. the counting inequality fails.
template <BitBlock B, class F>
bool scan_key_lemma(const PairBits<B>& p, F&& emit) {
  bool ok = true;
  const int m = p.max_a, n = p.max_b;
  for (int x = 0; x <= n; ++x) {
    if (p.ab.test(x)) continue;
    const int slack = holes_in(p.a, 0, x) + holes_in(p.b, 0, x) - (x + 1);
    ok = ok && slack >= 0;
    emit(KeyLemmaEntry{x, HoleSide::left, slack});
  }
  for (int x = 0; x <= n; ++x) {
    if (p.ab.test(x + m)) continue;
    const int slack = holes_in(p.a, x + m - n, m) + holes_in(p.b, x, n) - (n - x + 1);
    ok = ok && slack >= 0;
    emit(KeyLemmaEntry{x + m, HoleSide::right, slack});
  }
  return ok;
}

template <BitBlock B>
KeyLemmaReport check_key_lemma(const PairBits<B>& p) {
  KeyLemmaReport report;
  report.falsified = !scan_key_lemma(p, [&](const KeyLemmaEntry& e) {
    report.entries.push_back(e);
  });
  return report;
}

inline KeyLemmaReport check_key_lemma(const IntSet& a, const IntSet& b) {
  return check_key_lemma(make_pair_bits(a, b));
}

struct StabilityReport {
  bool applicable = false;  // holes of A at most |B| - 2
  bool counts_match = false;
  bool witnesses_injective_a = false;
  bool witnesses_injective_b = false;
  bool falsified = false;
};

// Under few holes in A, the stable holes of A and of B each biject with the
// holes of the sumset, and the unstable counts are excess deficits.
inline StabilityReport check_stability_identities(const HoleLedger& lg,
                                                  const SumsetProfile& pf) {
  StabilityReport report;
  report.applicable = pf.holes_a <= pf.size_b - 2;
  report.counts_match = lg.stable_a == pf.holes_sumset && lg.stable_b == pf.holes_sumset &&
                        pf.holes_sumset == pf.holes_a + pf.holes_b - pf.excess &&
                        lg.unstable_a == pf.excess - pf.holes_b &&
                        lg.unstable_b == pf.excess - pf.holes_a;
  std::vector<int> wa, wb;
  for (const auto& hole : lg.holes_sumset) {
    if (hole.side == HoleSide::middle) continue;
    wa.push_back(hole.witness_a);
    wb.push_back(hole.witness_b);
  }
  auto injective = [](std::vector<int>& v) {
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
  };
  report.witnesses_injective_a = injective(wa);
  report.witnesses_injective_b = injective(wb);
  report.falsified = report.applicable && !(report.counts_match && report.witnesses_injective_a &&
                                            report.witnesses_injective_b);
  return report;
}

struct Frontier {
  int last_left_stable = -1;    // greatest left stable hole of B; -1 when none
  int first_right_stable = 0;   // smallest right stable hole of B; max_b + 1 when none
  Interval guaranteed;          // [last_left_stable + 1, max_a + first_right_stable - 1]
  int slack = 0;                // holes of A and of B caught between the two frontiers
  bool hypotheses_hold = false;
  bool ordered = false;         // left frontier strictly precedes the right one
  bool contained = false;       // guaranteed interval sits inside A + B
  bool long_enough = false;     // |guaranteed| >= |A| + |B| - 1 + slack
  bool falsified = false;
};

template <BitBlock B>
Frontier frontier(const PairBits<B>& p, const SumsetProfile& pf) {
  Frontier f;
  const int m = p.max_a, n = p.max_b;
  f.last_left_stable = -1;
  for (int x = n - 1; x >= 1; --x)
    if (!p.b.test(x) && hole_tags_b(p, x).first) {
      f.last_left_stable = x;
      break;
    }
  f.first_right_stable = n + 1;
  for (int x = 1; x <= n - 1; ++x)
    if (!p.b.test(x) && hole_tags_b(p, x).second) {
      f.first_right_stable = x;
      break;
    }
  const int e = f.last_left_stable, c = f.first_right_stable;
  f.guaranteed = Interval{e + 1, m + c - 1};
  f.slack = holes_in(p.a, e + 1, c + m - n - 1) + holes_in(p.b, e + 1, c - 1);
  f.hypotheses_hold = run_hypotheses(pf);
  f.ordered = e < c;
  f.contained = true;
  if (!f.guaranteed.empty())
    f.contained = p.ab.ones_in(static_cast<int>(f.guaranteed.lo),
                               static_cast<int>(f.guaranteed.hi)) == f.guaranteed.size();
  assert(f.guaranteed.size() == (f.guaranteed.empty() ? 0 : m - 1 + (c - e)));
  f.long_enough = f.guaranteed.size() >= p.size_a + p.size_b - 1 + f.slack;
  f.falsified = f.hypotheses_hold && !(f.ordered && f.contained && f.long_enough);
  return f;
}

inline Frontier frontier(const IntSet& a, const IntSet& b) {
  const auto p = make_pair_bits(a, b);
  return frontier(p, profile(p));
}

}  // namespace sumsetlab
