#pragma once

// Extremal families showing the long-run guarantee is sharp, and two
// structural checks for pairs whose holes are all stable: the padded
// decomposition identity around the guaranteed interval, and the
// numerical-semigroup shape of the left half.

#include <cstdint>
#include <vector>

#include "sumsetlab/ap_engine.hpp"
#include "sumsetlab/bits.hpp"
#include "sumsetlab/core.hpp"
#include "sumsetlab/hole_analysis.hpp"

namespace sumsetlab {

// {0, ..., k-r-1} followed by r extra elements spaced two apart. Meets the
// doubling bound 3k - 4 with equality at r = k - 3 and always doubles to a
// run of exactly 2k - 1.
inline IntSet family_one(int k, int r) {
  if (k < 3) throw ContractError("family_one: k must be at least 3");
  if (r < 0 || r > k - 3) throw ContractError("family_one: r must lie in [0, k-3]");
  std::vector<std::int32_t> xs;
  xs.reserve(k);
  for (int i = 0; i <= k - r - 1; ++i) xs.push_back(i);
  for (int i = 1; i <= r; ++i) xs.push_back(k - r - 1 + 2 * i);
  return IntSet(std::move(xs));
}

// Two blocks {1..ceil(k/2)} and {x+1..x+floor(k/2)} separated by a gap wide
// enough that the doubling bound fails and the doubled run stays short.
inline IntSet family_two(int k, int x) {
  if (k < 2) throw ContractError("family_two: k must be at least 2");
  if (x < k + 1) throw ContractError("family_two: x must be at least k+1");
  std::vector<std::int32_t> xs;
  xs.reserve(k);
  for (int i = 1; i <= (k + 1) / 2; ++i) xs.push_back(i);
  for (int i = 1; i <= k / 2; ++i) xs.push_back(x + i);
  return IntSet(std::move(xs));
}

struct FamilySpec {
  enum class Family { one, two };
  Family family = Family::one;
  int k = 3;
  int r = 0;  // second parameter of family one
  int x = 4;  // block offset of family two
};

struct FamilyClaimsReport {
  IntSet set{0};
  std::int64_t doubling_size = 0;   // |A + A|
  std::int64_t doubling_bound = 0;  // 3k - 4
  bool card_claim = false;          // family one: within the bound; family two: beyond it
  Run run;                          // longest run in A + A
  std::int64_t run_target = 0;      // 2k - 1
  bool run_claim = false;           // family one: exactly the target; family two: short of it
  bool pass = false;
};

inline FamilyClaimsReport family_claims_check(const FamilySpec& spec) {
  FamilyClaimsReport report;
  report.set = spec.family == FamilySpec::Family::one ? family_one(spec.k, spec.r)
                                                      : family_two(spec.k, spec.x);
  const IntSet doubled = sumset(report.set, report.set);
  report.doubling_size = doubled.size();
  report.doubling_bound = 3 * static_cast<std::int64_t>(spec.k) - 4;
  report.run = longest_run(doubled);
  report.run_target = 2 * static_cast<std::int64_t>(spec.k) - 1;
  if (spec.family == FamilySpec::Family::one) {
    report.card_claim = report.doubling_size <= report.doubling_bound;
    report.run_claim = report.run.length == report.run_target;
  } else {
    report.card_claim = report.doubling_size > report.doubling_bound;
    report.run_claim = report.run.length < report.run_target;
  }
  report.pass = report.card_claim && report.run_claim;
  return report;
}

struct DecompositionReport {
  bool applicable = false;
  Interval guaranteed;
  Interval pad_a;  // interval welded onto A
  Interval pad_b;  // interval welded onto B
  bool holds = false;
  bool falsified = false;
};

// Padding A with [lo, hi - max_b] and B with [lo, hi - max_a], where
// [lo, hi] is the guaranteed interval, must leave the sumset unchanged.
template <BitBlock B>
DecompositionReport decomposition_check(const PairBits<B>& p, const SumsetProfile& pf,
                                        const Frontier& f) {
  DecompositionReport report;
  report.applicable = f.hypotheses_hold;
  report.guaranteed = f.guaranteed;
  report.pad_a = Interval{f.guaranteed.lo, f.guaranteed.hi - p.max_b};
  report.pad_b = Interval{f.guaranteed.lo, f.guaranteed.hi - p.max_a};
  if (!report.applicable) return report;
  B padded_a = p.a;
  padded_a.set_range(static_cast<int>(report.pad_a.lo), static_cast<int>(report.pad_a.hi));
  B padded_b = p.b;
  padded_b.set_range(static_cast<int>(report.pad_b.lo), static_cast<int>(report.pad_b.hi));
  report.holds = sumset_bits(padded_a, padded_b, p.max_a + p.max_b + 1) == p.ab;
  report.falsified = !report.holds;
  (void)pf;
  return report;
}

inline DecompositionReport decomposition_check(const IntSet& a, const IntSet& b) {
  const auto p = make_pair_bits(a, b);
  const auto pf = profile(p);
  return decomposition_check(p, pf, frontier(p, pf));
}

struct FrobeniusReport {
  bool applicable = false;      // hypotheses plus every hole of A and of B stable
  int left_bound = -1;          // greatest left stable hole of B
  std::int64_t horizon = 0;     // window [0, horizon] used for the fold closure
  bool halves_equal = false;    // A and B agree on [0, left_bound]
  bool prefix_matches = false;  // fold closure equals left half plus everything past it
  bool closed_under_steps = false;
  std::int64_t stabilized_after = 0;  // folds until the window stopped growing
  bool falsified = false;
};

// With every hole stable, the left half of A (up to the left frontier) equals
// that of B and behaves like a numerical semigroup: closed under adding its
// own elements, and its fold closure is eventually everything. Checked on the
// window [0, horizon]; pass horizon < 0 for the default 2*diam(A) past the
// frontier.
template <BitBlock B>
FrobeniusReport frobenius_prefix_check(const PairBits<B>& p, const SumsetProfile& pf,
                                       const Frontier& f, const HoleLedger& lg,
                                       std::int64_t horizon = -1) {
  FrobeniusReport report;
  report.left_bound = f.last_left_stable;
  const int e = report.left_bound;
  if (horizon < 0) horizon = static_cast<std::int64_t>(e) + 1 + 2 * p.max_a;
  if (horizon < e + 1)
    throw ContractError("frobenius_prefix_check: horizon must reach past the left frontier");
  report.horizon = horizon;
  report.applicable = f.hypotheses_hold && lg.unstable_a == 0 && lg.unstable_b == 0;
  (void)pf;
  if (!report.applicable) return report;

  report.halves_equal = true;
  for (int x = 0; x <= e; ++x)
    if (p.a.test(x) != p.b.test(x)) {
      report.halves_equal = false;
      break;
    }

  const int cap = static_cast<int>(horizon) + 1;
  std::vector<int> generators;
  p.a.for_each([&](int x) {
    if (x <= horizon) generators.push_back(x);
  });
  B closure = B::with_capacity(cap);
  for (int g : generators) closure.set(g);
  while (true) {
    B next = B::with_capacity(cap);
    for (int g : generators) next.or_shift(closure, g);
    next.truncate_above(cap - 1);
    if (next == closure) break;
    closure = std::move(next);
    ++report.stabilized_after;
  }

  B expected = B::with_capacity(cap);
  for (int x = 0; x <= e; ++x)
    if (p.a.test(x)) expected.set(x);
  expected.set_range(e + 1, cap - 1);
  report.prefix_matches = closure == expected;

  std::vector<int> left_half;
  for (int x = 0; x <= e; ++x)
    if (p.a.test(x)) left_half.push_back(x);
  report.closed_under_steps = true;
  for (int d1 : left_half)
    for (int d2 : left_half) {
      if (d2 == 0) continue;
      for (std::int64_t v = d1 + d2; v <= e; v += d2)
        if (!p.a.test(static_cast<int>(v))) report.closed_under_steps = false;
    }

  report.falsified =
      !(report.halves_equal && report.prefix_matches && report.closed_under_steps);
  return report;
}

inline FrobeniusReport frobenius_prefix_check(const IntSet& a, const IntSet& b,
                                              std::int64_t horizon = -1) {
  const auto p = make_pair_bits(a, b);
  const auto pf = profile(p);
  return frobenius_prefix_check(p, pf, frontier(p, pf), classify(p), horizon);
}

}  // namespace sumsetlab
