#pragma once

// One normalized pair, fully analyzed: every structural predicate evaluated
// with its applicability gate. This is the single mapping shared by the CLI
// envelope and the exhaustive sweep, so both always agree on what each
// predicate means.

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "sumsetlab/ap_engine.hpp"
#include "sumsetlab/bits.hpp"
#include "sumsetlab/core.hpp"
#include "sumsetlab/generators.hpp"
#include "sumsetlab/hole_analysis.hpp"

namespace sumsetlab {

enum class Predicate : int {
  profile_identities,
  neutral_zone,
  key_lemma,
  no_dual_stability,
  stability_identities,
  ordering,
  frontier_interval,
  theorem,
  corollary,
  decomposition,
  frobenius_prefix,
  cited_diam,
};

inline constexpr int predicate_count = 12;

inline constexpr std::array<std::string_view, predicate_count> predicate_names = {
    "profile-identities", "neutral-zone", "key-lemma",   "no-dual-stability",
    "stability-identities", "ordering",   "frontier-interval", "theorem",
    "corollary",          "decomposition", "frobenius-prefix", "cited-diam",
};

inline std::string_view predicate_name(Predicate p) {
  return predicate_names[static_cast<int>(p)];
}

inline std::optional<Predicate> parse_predicate(std::string_view name) {
  for (int i = 0; i < predicate_count; ++i)
    if (predicate_names[i] == name) return static_cast<Predicate>(i);
  return std::nullopt;
}

class PredicateSelection {
 public:
  static PredicateSelection all() { return PredicateSelection{(1u << predicate_count) - 1}; }
  static PredicateSelection none() { return PredicateSelection{0}; }

  PredicateSelection() : mask_((1u << predicate_count) - 1) {}
  explicit PredicateSelection(std::uint32_t mask) : mask_(mask) {}

  void add(Predicate p) { mask_ |= 1u << static_cast<int>(p); }
  bool has(Predicate p) const { return (mask_ >> static_cast<int>(p)) & 1u; }
  std::uint32_t mask() const { return mask_; }
  bool empty() const { return mask_ == 0; }

  friend bool operator==(const PredicateSelection&, const PredicateSelection&) = default;

 private:
  std::uint32_t mask_;
};

struct PairAnalysis {
  SumsetProfile profile;
  HoleLedger ledger;
  Frontier front;
  bool hypotheses_hold = false;

  bool identities_ok = true;
  bool neutral_applicable = false, neutral_ok = true;
  bool key_lemma_ok = true;
  bool no_dual_applicable = false, no_dual_ok = true;
  StabilityReport stability;
  bool ordering_ok = true;   // both frontier pairs ordered, for A and for B
  bool frontier_ok = true;   // guaranteed interval contained and long enough
  TheoremVerdict theorem;
  CorollaryVerdict corollary;
  DecompositionReport decomposition;
  FrobeniusReport frobenius;
  CitedDiamReport cited;
};

struct PredicateOutcome {
  bool applicable = false;
  bool ok = true;
};

namespace detail {

// The displayed identities between window lengths, set sizes and hole counts.
inline bool profile_identities_hold(const SumsetProfile& pf) {
  return pf.max_a >= pf.max_b && pf.max_b >= 0 && pf.excess >= 0 &&
         pf.max_a == pf.size_a + pf.holes_a - 1 && pf.max_b == pf.size_b + pf.holes_b - 1 &&
         pf.holes_sumset == pf.max_a + pf.max_b + 1 - pf.size_sumset &&
         pf.holes_sumset == pf.holes_a + pf.holes_b - pf.excess;
}

// Every missing element of B must reappear in the sumset on one side, and
// likewise for A; a hole missing on both sides would be doubly stable.
template <BitBlock B>
bool no_dual_stability_holds(const PairBits<B>& p) {
  const int m = p.max_a, n = p.max_b;
  for (int x = 1; x <= n; ++x)
    if (!p.b.test(x) && !p.ab.test(x) && !p.ab.test(x + m)) return false;
  for (int x = 0; x <= m; ++x)
    if (!p.a.test(x) && !p.ab.test(x) && !p.ab.test(x + n)) return false;
  return true;
}

// Frontier positions for the holes of A, mirroring those kept for B.
template <BitBlock B>
bool a_side_ordered(const PairBits<B>& p) {
  const int m = p.max_a;
  int last_left = -1;
  for (int x = m - 1; x >= 1; --x)
    if (!p.a.test(x) && hole_tags_a(p, x).first) {
      last_left = x;
      break;
    }
  int first_right = m + 1;
  for (int x = 1; x <= m - 1; ++x)
    if (!p.a.test(x) && hole_tags_a(p, x).second) {
      first_right = x;
      break;
    }
  return last_left < first_right;
}

}  // namespace detail

// Evaluates the selected predicates; parts no selected predicate needs are
// left default-constructed. The fields profile, hypotheses_hold and theorem
// are always filled.
template <BitBlock B>
PairAnalysis analyze_pair(const PairBits<B>& p,
                          PredicateSelection sel = PredicateSelection::all()) {
  PairAnalysis an;
  an.profile = profile(p);
  an.hypotheses_hold = run_hypotheses(an.profile);
  an.theorem = theorem_verdict(p, an.profile);

  const bool need_ledger = sel.has(Predicate::stability_identities) ||
                           sel.has(Predicate::frobenius_prefix);
  const bool need_frontier = sel.has(Predicate::ordering) ||
                             sel.has(Predicate::frontier_interval) ||
                             sel.has(Predicate::decomposition) ||
                             sel.has(Predicate::frobenius_prefix);
  if (need_ledger) an.ledger = classify(p);
  if (need_frontier) an.front = frontier(p, an.profile);

  if (sel.has(Predicate::profile_identities))
    an.identities_ok = detail::profile_identities_hold(an.profile);

  if (sel.has(Predicate::neutral_zone)) {
    an.neutral_applicable = an.profile.holes_a <= an.profile.size_b - 1;
    if (an.neutral_applicable)
      an.neutral_ok = p.ab.ones_in(p.max_b, p.max_a) == p.max_a - p.max_b + 1;
  }

  if (sel.has(Predicate::key_lemma))
    an.key_lemma_ok = scan_key_lemma(p, [](const KeyLemmaEntry&) {});

  if (sel.has(Predicate::no_dual_stability)) {
    an.no_dual_applicable = an.profile.holes_a <= an.profile.size_b - 2;
    if (an.no_dual_applicable) an.no_dual_ok = detail::no_dual_stability_holds(p);
  }

  if (sel.has(Predicate::stability_identities))
    an.stability = check_stability_identities(an.ledger, an.profile);

  if (sel.has(Predicate::ordering) && an.hypotheses_hold)
    an.ordering_ok = an.front.ordered && detail::a_side_ordered(p);

  if (sel.has(Predicate::frontier_interval) && an.hypotheses_hold)
    an.frontier_ok = an.front.contained && an.front.long_enough;

  if (sel.has(Predicate::corollary)) an.corollary = corollary_verdict(p, an.profile);

  if (sel.has(Predicate::decomposition))
    an.decomposition = decomposition_check(p, an.profile, an.front);

  if (sel.has(Predicate::frobenius_prefix))
    an.frobenius = frobenius_prefix_check(p, an.profile, an.front, an.ledger);

  if (sel.has(Predicate::cited_diam)) an.cited = cited_diam_check(p, an.profile);

  return an;
}

// Applicability gate and result for one predicate of an analyzed pair.
inline PredicateOutcome outcome(const PairAnalysis& an, Predicate p) {
  switch (p) {
    case Predicate::profile_identities:
      return {true, an.identities_ok};
    case Predicate::neutral_zone:
      return {an.neutral_applicable, an.neutral_ok};
    case Predicate::key_lemma:
      return {true, an.key_lemma_ok};
    case Predicate::no_dual_stability:
      return {an.no_dual_applicable, an.no_dual_ok};
    case Predicate::stability_identities:
      return {an.stability.applicable, !an.stability.falsified};
    case Predicate::ordering:
      return {an.hypotheses_hold, an.ordering_ok};
    case Predicate::frontier_interval:
      return {an.hypotheses_hold, an.frontier_ok};
    case Predicate::theorem:
      return {an.theorem.hypotheses_hold, an.theorem.conclusion_holds};
    case Predicate::corollary:
      return {an.corollary.hypotheses_hold, an.corollary.conclusion_holds};
    case Predicate::decomposition:
      return {an.decomposition.applicable, !an.decomposition.falsified};
    case Predicate::frobenius_prefix:
      return {an.frobenius.applicable, !an.frobenius.falsified};
    case Predicate::cited_diam:
      return {an.cited.applicable, !an.cited.falsified};
  }
  return {};
}

}  // namespace sumsetlab
