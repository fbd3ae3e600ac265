#pragma once

// Longest runs and longest fixed-difference progressions inside a set, and
// the verdicts for the two long-run guarantees: the direct one for pairs with
// small sumset, and the gcd-contracted one when the sumset has a common gap
// divisor.

#include <cstdint>
#include <unordered_map>

#include "sumsetlab/bits.hpp"
#include "sumsetlab/core.hpp"
#include "sumsetlab/hole_analysis.hpp"

namespace sumsetlab {

struct Run {
  std::int64_t start = 0;
  std::int64_t length = 0;

  friend bool operator==(const Run&, const Run&) = default;
};

// Longest block of consecutive positions; ties break to the smallest start.
template <BitBlock B>
Run longest_run_bits(const B& s) {
  Run best;
  std::int64_t cur_len = 0;
  int cur_start = 0, prev = -2;
  s.for_each([&](int x) {
    if (x == prev + 1) {
      ++cur_len;
    } else {
      cur_start = x;
      cur_len = 1;
    }
    prev = x;
    if (cur_len > best.length) best = {cur_start, cur_len};
  });
  return best;
}

// Longest progression with the given difference; ties break to the smallest
// start. Walks each residue class once.
template <BitBlock B>
Run longest_ap_bits(const B& s, int difference) {
  assert(difference >= 1);
  if (difference == 1) return longest_run_bits(s);
  Run best;
  const int cap = s.capacity();
  for (int r = 0; r < difference && r < cap; ++r) {
    std::int64_t len = 0;
    int start = r;
    for (int x = r; x < cap; x += difference) {
      if (s.test(x)) {
        if (!len) start = x;
        ++len;
      } else {
        len = 0;
      }
      if (len > best.length || (len && len == best.length && start < best.start))
        best = {start, len};
    }
  }
  return best;
}

inline Run longest_run(const IntSet& s) {
  Run best;
  std::int64_t cur_len = 0;
  std::int64_t cur_start = 0, prev = 0;
  bool first = true;
  for (auto x : s) {
    if (!first && x == prev + 1) {
      ++cur_len;
    } else {
      cur_start = x;
      cur_len = 1;
    }
    prev = x;
    first = false;
    if (cur_len > best.length) best = {cur_start, cur_len};
  }
  return best;
}

inline Run longest_ap(const IntSet& s, std::int64_t difference) {
  if (difference < 1) throw ContractError("longest_ap: difference must be at least 1");
  if (difference == 1) return longest_run(s);
  Run best;
  std::unordered_map<std::int64_t, std::int64_t> length_ending_at;
  length_ending_at.reserve(s.elements().size());
  for (auto x : s) {
    const auto prior = length_ending_at.find(x - difference);
    const std::int64_t len = prior == length_ending_at.end() ? 1 : prior->second + 1;
    length_ending_at[x] = len;
    const std::int64_t start = x - (len - 1) * difference;
    if (len > best.length || (len == best.length && start < best.start)) best = {start, len};
  }
  return best;
}

struct TheoremVerdict {
  bool diam_chain = false;   // diam B <= diam A <= |A| + |B| - 3
  bool card_bound = false;   // |A+B| <= |A| + 2|B| - 3 - delta
  bool hypotheses_hold = false;
  bool conclusion_holds = false;
  std::int64_t ap_start = 0;
  std::int64_t ap_length = 0;
  std::int64_t required = 0;  // |A| + |B| - 1
  bool tight = false;
};

template <BitBlock B>
TheoremVerdict theorem_verdict(const PairBits<B>& p, const SumsetProfile& pf) {
  TheoremVerdict v;
  v.diam_chain = pf.max_b <= pf.max_a &&
                 pf.max_a <= static_cast<std::int64_t>(pf.size_a) + pf.size_b - 3;
  v.card_bound = pf.size_sumset <= static_cast<std::int64_t>(pf.size_a) + 2 * pf.size_b - 3 - pf.delta;
  v.hypotheses_hold = v.diam_chain && v.card_bound;
  const Run run = longest_run_bits(p.ab);
  v.ap_start = run.start;
  v.ap_length = run.length;
  v.required = static_cast<std::int64_t>(pf.size_a) + pf.size_b - 1;
  v.conclusion_holds = v.ap_length >= v.required;
  v.tight = v.ap_length == v.required;
  return v;
}

inline TheoremVerdict theorem_verdict(const IntSet& a, const IntSet& b) {
  const auto p = make_pair_bits(a, b);
  return theorem_verdict(p, profile(p));
}

struct CorollaryVerdict {
  int gcd_sumset = 0;          // gcd of the sumset's gaps; 0 for a singleton
  bool card_bound = false;     // |A+B| <= |A| + 2|B| - 3 - delta
  bool gcd_a_is_one = false;
  bool relaxed_bound = false;  // |A+B| <= 2|A| + |B| - 3
  bool hypotheses_hold = false;
  bool degenerate = false;     // singleton sumset, nothing to contract
  std::int64_t difference = 1;
  bool conclusion_holds = false;
  std::int64_t ap_start = 0;
  std::int64_t ap_length = 0;
  std::int64_t required = 0;
  bool tight = false;
};

// When the sumset's gaps share a divisor d, contracting everything by d
// reduces to the direct guarantee; the progression reappears with
// difference d. Hypotheses: the cardinality bound, plus either gcd-free A or
// the relaxed bound with the roles of |A| and |B| swapped.
template <BitBlock B>
CorollaryVerdict corollary_verdict(const PairBits<B>& p, const SumsetProfile& pf) {
  CorollaryVerdict v;
  v.gcd_sumset = pf.gcd_sumset;
  v.card_bound = pf.size_sumset <= static_cast<std::int64_t>(pf.size_a) + 2 * pf.size_b - 3 - pf.delta;
  v.gcd_a_is_one = pf.gcd_a == 1;
  v.relaxed_bound = pf.size_sumset <= 2 * static_cast<std::int64_t>(pf.size_a) + pf.size_b - 3;
  v.hypotheses_hold = v.card_bound && (v.gcd_a_is_one || v.relaxed_bound);
  v.required = static_cast<std::int64_t>(pf.size_a) + pf.size_b - 1;
  if (v.gcd_sumset == 0) {
    v.degenerate = true;
    v.difference = 1;
    v.ap_start = 0;
    v.ap_length = 1;
  } else {
    v.difference = v.gcd_sumset;
    const Run run = longest_ap_bits(p.ab, v.gcd_sumset);
    v.ap_start = run.start;
    v.ap_length = run.length;
  }
  v.conclusion_holds = v.ap_length >= v.required;
  v.tight = v.ap_length == v.required;
  return v;
}

inline CorollaryVerdict corollary_verdict(const IntSet& a, const IntSet& b) {
  const auto p = make_pair_bits(a, b);
  return corollary_verdict(p, profile(p));
}

struct CitedDiamReport {
  bool applicable = false;  // gcd-free A and the cardinality bound
  bool diam_a_ok = false;   // diam A <= |A| + excess - 1
  bool diam_b_ok = false;   // diam B <= min(|A|, |B|) + excess - 1
  std::int64_t slack_a = 0;
  std::int64_t slack_b = 0;
  bool falsified = false;
};

// Empirical check of the cited diameter bounds for pairs with small sumset.
template <BitBlock B>
CitedDiamReport cited_diam_check(const PairBits<B>& p, const SumsetProfile& pf) {
  CitedDiamReport r;
  const bool card = pf.size_sumset <= static_cast<std::int64_t>(pf.size_a) + 2 * pf.size_b - 3 - pf.delta;
  r.applicable = pf.gcd_a == 1 && card;
  r.slack_a = static_cast<std::int64_t>(pf.size_a) + pf.excess - 1 - pf.max_a;
  r.slack_b = static_cast<std::int64_t>(std::min(pf.size_a, pf.size_b)) + pf.excess - 1 - pf.max_b;
  r.diam_a_ok = r.slack_a >= 0;
  r.diam_b_ok = r.slack_b >= 0;
  r.falsified = r.applicable && !(r.diam_a_ok && r.diam_b_ok);
  return r;
}

inline CitedDiamReport cited_diam_check(const IntSet& a, const IntSet& b) {
  const auto p = make_pair_bits(a, b);
  return cited_diam_check(p, profile(p));
}

}  // namespace sumsetlab
