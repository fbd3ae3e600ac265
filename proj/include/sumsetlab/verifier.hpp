#pragma once

// Exhaustive enumeration of canonical normalized pairs up to a diameter cap,
// predicate evaluation over the whole space, and reports that merge
// associatively so any partition of the work yields the same result.
//
// Canonical pairs: ({0},{0}) plus, for every 1 <= max_b <= max_a <= cap, all
// A containing {0, max_a} and B containing {0, max_b}. Sets are Mask64
// bitmaps, so the cap is hard-limited to 20 and every position fits one word.

#include <algorithm>
#include <array>
#include <atomic>
#include <compare>
#include <cstdint>
#include <functional>
#include <iterator>
#include <map>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "sumsetlab/bits.hpp"
#include "sumsetlab/core.hpp"
#include "sumsetlab/pair_analysis.hpp"
#include "sumsetlab/set_io.hpp"

namespace sumsetlab {

inline constexpr int enumeration_hard_guard = 20;
inline constexpr int default_enumeration_cap = 12;

struct PairSpace {
  int max_diam = default_enumeration_cap;
};

inline void check_enumeration_guard(const PairSpace& space, int guard = enumeration_hard_guard) {
  if (guard > enumeration_hard_guard) guard = enumeration_hard_guard;
  if (space.max_diam < 1 || space.max_diam > guard)
    throw ContractError("enumeration guard: max diameter must lie in [1, " +
                        std::to_string(guard) + "]");
}

// Canonical pair count: 1 + sum over m of 2^(m-1) * (2^m - 1).
inline std::int64_t canonical_pair_count(int max_diam) {
  std::int64_t total = 1;
  for (int m = 1; m <= max_diam; ++m)
    total += (std::int64_t{1} << (m - 1)) * ((std::int64_t{1} << m) - 1);
  return total;
}

struct PairKey {
  int max_a = 0;
  std::uint32_t a_bits = 1;
  int max_b = 0;
  std::uint32_t b_bits = 1;

  friend auto operator<=>(const PairKey&, const PairKey&) = default;
};

inline IntSet key_set_a(const PairKey& k) {
  std::vector<std::int32_t> xs;
  for (int i = 0; i <= k.max_a; ++i)
    if ((k.a_bits >> i) & 1u) xs.push_back(i);
  return IntSet(std::move(xs));
}

inline IntSet key_set_b(const PairKey& k) {
  std::vector<std::int32_t> xs;
  for (int i = 0; i <= k.max_b; ++i)
    if ((k.b_bits >> i) & 1u) xs.push_back(i);
  return IntSet(std::move(xs));
}

// One contiguous slice of the interior masks of A for a fixed diameter.
struct EnumUnit {
  int max_a = 0;
  std::uint32_t interior_begin = 0;
  std::uint32_t interior_end = 0;  // exclusive
};

inline std::vector<EnumUnit> make_enum_units(const PairSpace& space, int chunks_per_diam) {
  std::vector<EnumUnit> units;
  units.push_back({0, 0, 1});
  for (int m = 1; m <= space.max_diam; ++m) {
    const std::uint32_t interiors = std::uint32_t{1} << (m - 1);
    const std::uint32_t chunks =
        std::min<std::uint32_t>(interiors, static_cast<std::uint32_t>(std::max(1, chunks_per_diam)));
    const std::uint32_t step = (interiors + chunks - 1) / chunks;
    for (std::uint32_t begin = 0; begin < interiors; begin += step)
      units.push_back({m, begin, std::min(interiors, begin + step)});
  }
  return units;
}

template <class F>
void for_each_pair_in_unit(const EnumUnit& unit, F&& f) {
  if (unit.max_a == 0) {
    f(PairKey{0, 1u, 0, 1u});
    return;
  }
  const int m = unit.max_a;
  const std::uint32_t ends_a = 1u | (std::uint32_t{1} << m);
  for (std::uint32_t ia = unit.interior_begin; ia < unit.interior_end; ++ia) {
    const std::uint32_t a = ends_a | (ia << 1);
    for (int n = 1; n <= m; ++n) {
      const std::uint32_t ends_b = 1u | (std::uint32_t{1} << n);
      const std::uint32_t interiors_b = std::uint32_t{1} << (n - 1);
      for (std::uint32_t ib = 0; ib < interiors_b; ++ib)
        f(PairKey{m, a, n, ends_b | (ib << 1)});
    }
  }
}

// Visits every canonical pair in deterministic order (diameter of A, then its
// mask, then B).
template <class F>
void enumerate_pair_masks(const PairSpace& space, F&& f) {
  check_enumeration_guard(space);
  for (const auto& unit : make_enum_units(space, 1)) for_each_pair_in_unit(unit, f);
}

template <class F>
void enumerate_pairs(const PairSpace& space, F&& f) {
  enumerate_pair_masks(space, [&](const PairKey& k) { f(key_set_a(k), key_set_b(k)); });
}

struct PredicateStats {
  std::int64_t checked = 0;
  std::int64_t falsified = 0;

  friend bool operator==(const PredicateStats&, const PredicateStats&) = default;
};

struct Counterexample {
  PairKey key;
  Predicate predicate = Predicate::profile_identities;
  std::string detail;
};

struct VerifyOptions {
  PredicateSelection selection = PredicateSelection::all();
  int jobs = 1;
  int max_counterexamples = 100;
  int max_extremal_samples = 16;
  int census_samples_per_cell = 3;
  // Test hook: restricts the sweep to the pairs accepted by the filter.
  std::function<bool(const PairKey&)> pair_filter;
};

struct VerificationReport {
  int max_diam = 0;
  std::uint32_t selection_mask = PredicateSelection::all().mask();
  std::array<PredicateStats, predicate_count> predicates{};
  std::int64_t total_pairs = 0;
  std::int64_t hypothesis_pairs = 0;
  std::int64_t tight_pairs = 0;
  std::vector<Counterexample> counterexamples;  // capped, ordered by pair key
  std::vector<PairKey> extremal_samples;        // capped, ordered by pair key
  int max_counterexamples = 100;
  int max_extremal_samples = 16;

  // Open observations carried alongside the hard predicates: how often the
  // cardinality bound holds without the diameter chain, and whether the
  // excess ever drops below the holes of B when the hypotheses hold.
  std::int64_t obs_card_without_diam = 0;
  std::int64_t obs_card_without_diam_gcd_free = 0;
  std::int64_t obs_excess_below_holes_b = 0;

  bool clean() const {
    for (const auto& stats : predicates)
      if (stats.falsified) return false;
    return true;
  }
};

struct CellStats {
  std::int64_t hypothesis_pairs = 0;
  std::int64_t tight_pairs = 0;
  std::vector<PairKey> samples;  // capped, ordered by pair key
};

struct TightnessCensus {
  int max_diam = 0;
  int samples_per_cell = 3;
  std::map<std::pair<int, int>, CellStats> cells;  // keyed by (|A|, |B|)

  std::int64_t total_tight() const {
    std::int64_t total = 0;
    for (const auto& [key, cell] : cells) total += cell.tight_pairs;
    return total;
  }
};

namespace detail {

// Keeps the smallest `cap` entries in key order. Inputs arrive in ascending
// key order within a work unit, so the common case is an O(1) append or
// reject.
template <class T, class KeyFn>
void bounded_insert(std::vector<T>& dst, T value, std::size_t cap, KeyFn key) {
  if (cap == 0) return;
  if (dst.size() == cap && !(key(value) < key(dst.back()))) return;
  auto pos = std::lower_bound(dst.begin(), dst.end(), value,
                              [&](const T& lhs, const T& rhs) { return key(lhs) < key(rhs); });
  dst.insert(pos, std::move(value));
  if (dst.size() > cap) dst.pop_back();
}

template <class T, class KeyFn>
void bounded_merge(std::vector<T>& dst, const std::vector<T>& src, std::size_t cap, KeyFn key) {
  std::vector<T> merged;
  merged.reserve(std::min(cap, dst.size() + src.size()));
  std::merge(dst.begin(), dst.end(), src.begin(), src.end(), std::back_inserter(merged),
             [&](const T& lhs, const T& rhs) { return key(lhs) < key(rhs); });
  if (merged.size() > cap) merged.resize(cap);
  dst = std::move(merged);
}

}  // namespace detail

// Merging is associative and commutative, so reports from any partition of
// the pair space combine to the same result.
inline VerificationReport merge(VerificationReport left, const VerificationReport& right) {
  if (left.max_counterexamples != right.max_counterexamples ||
      left.max_extremal_samples != right.max_extremal_samples ||
      left.selection_mask != right.selection_mask)
    throw ContractError("merge: reports were produced with different options");
  left.max_diam = std::max(left.max_diam, right.max_diam);
  for (int i = 0; i < predicate_count; ++i) {
    left.predicates[i].checked += right.predicates[i].checked;
    left.predicates[i].falsified += right.predicates[i].falsified;
  }
  left.total_pairs += right.total_pairs;
  left.hypothesis_pairs += right.hypothesis_pairs;
  left.tight_pairs += right.tight_pairs;
  detail::bounded_merge(left.counterexamples, right.counterexamples,
                        static_cast<std::size_t>(left.max_counterexamples),
                        [](const Counterexample& c) { return c.key; });
  detail::bounded_merge(left.extremal_samples, right.extremal_samples,
                        static_cast<std::size_t>(left.max_extremal_samples),
                        [](const PairKey& k) { return k; });
  left.obs_card_without_diam += right.obs_card_without_diam;
  left.obs_card_without_diam_gcd_free += right.obs_card_without_diam_gcd_free;
  left.obs_excess_below_holes_b += right.obs_excess_below_holes_b;
  return left;
}

inline TightnessCensus merge(TightnessCensus left, const TightnessCensus& right) {
  if (left.samples_per_cell != right.samples_per_cell)
    throw ContractError("merge: censuses were produced with different options");
  left.max_diam = std::max(left.max_diam, right.max_diam);
  for (const auto& [key, cell] : right.cells) {
    auto& target = left.cells[key];
    target.hypothesis_pairs += cell.hypothesis_pairs;
    target.tight_pairs += cell.tight_pairs;
    detail::bounded_merge(target.samples, cell.samples,
                          static_cast<std::size_t>(left.samples_per_cell),
                          [](const PairKey& k) { return k; });
  }
  return left;
}

struct SweepResult {
  VerificationReport report;
  TightnessCensus census;
};

namespace detail {

inline std::string falsification_detail(const PairAnalysis& an, Predicate p) {
  std::string detail{predicate_name(p)};
  detail += " failed: sizes " + std::to_string(an.profile.size_a) + "/" +
            std::to_string(an.profile.size_b) + "/" + std::to_string(an.profile.size_sumset) +
            ", excess " + std::to_string(an.profile.excess);
  return detail;
}

inline void accumulate_pair(const PairKey& key, const VerifyOptions& opt, SweepResult& out) {
  const PairBits<Mask64> p =
      make_pair_bits(Mask64{key.a_bits}, Mask64{key.b_bits}, key.max_a, key.max_b);
  const PairAnalysis an = analyze_pair(p, opt.selection);
  auto& rep = out.report;

  ++rep.total_pairs;
  if (an.hypotheses_hold) {
    ++rep.hypothesis_pairs;
    auto& cell = out.census.cells[{an.profile.size_a, an.profile.size_b}];
    ++cell.hypothesis_pairs;
    if (an.theorem.tight) {
      ++rep.tight_pairs;
      ++cell.tight_pairs;
      bounded_insert(cell.samples, key, static_cast<std::size_t>(opt.census_samples_per_cell),
                     [](const PairKey& k) { return k; });
      bounded_insert(rep.extremal_samples, key,
                     static_cast<std::size_t>(rep.max_extremal_samples),
                     [](const PairKey& k) { return k; });
    }
    if (an.profile.excess < an.profile.holes_b) ++rep.obs_excess_below_holes_b;
  }
  if (an.theorem.card_bound && !an.theorem.diam_chain) {
    ++rep.obs_card_without_diam;
    if (an.profile.gcd_a == 1) ++rep.obs_card_without_diam_gcd_free;
  }

  for (int i = 0; i < predicate_count; ++i) {
    const auto pred = static_cast<Predicate>(i);
    if (!opt.selection.has(pred)) continue;
    const PredicateOutcome result = outcome(an, pred);
    if (!result.applicable) continue;
    ++rep.predicates[i].checked;
    if (!result.ok) {
      ++rep.predicates[i].falsified;
      bounded_insert(rep.counterexamples,
                     Counterexample{key, pred, falsification_detail(an, pred)},
                     static_cast<std::size_t>(rep.max_counterexamples),
                     [](const Counterexample& c) { return c.key; });
    }
  }
}

}  // namespace detail

inline SweepResult run_sweep(const PairSpace& space, const VerifyOptions& opt,
                             int guard = enumeration_hard_guard) {
  check_enumeration_guard(space, guard);
  if (opt.jobs < 1) throw ContractError("run_sweep: jobs must be at least 1");
  if (opt.max_counterexamples < 1)
    throw ContractError("run_sweep: the counterexample cap must be at least 1");

  auto fresh = [&] {
    SweepResult r;
    r.report.max_diam = space.max_diam;
    r.report.selection_mask = opt.selection.mask();
    r.report.max_counterexamples = opt.max_counterexamples;
    r.report.max_extremal_samples = opt.max_extremal_samples;
    r.census.max_diam = space.max_diam;
    r.census.samples_per_cell = opt.census_samples_per_cell;
    return r;
  };

  const std::vector<EnumUnit> units = make_enum_units(space, 4 * std::max(1, opt.jobs));
  std::vector<SweepResult> partials(units.size());
  for (auto& partial : partials) partial = fresh();

  std::atomic<std::size_t> next_unit{0};
  auto worker = [&] {
    while (true) {
      const std::size_t index = next_unit.fetch_add(1);
      if (index >= units.size()) break;
      for_each_pair_in_unit(units[index], [&](const PairKey& key) {
        if (opt.pair_filter && !opt.pair_filter(key)) return;
        detail::accumulate_pair(key, opt, partials[index]);
      });
    }
  };

  const int thread_count = std::min<int>(opt.jobs, static_cast<int>(units.size()));
  if (thread_count <= 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(thread_count);
    for (int t = 0; t < thread_count; ++t) threads.emplace_back(worker);
    for (auto& thread : threads) thread.join();
  }

  SweepResult total = fresh();
  for (const auto& partial : partials) {
    total.report = merge(std::move(total.report), partial.report);
    total.census = merge(std::move(total.census), partial.census);
  }
  return total;
}

inline VerificationReport verify_range(const PairSpace& space, const VerifyOptions& opt = {}) {
  return run_sweep(space, opt).report;
}

inline TightnessCensus tightness_census(const PairSpace& space, const VerifyOptions& opt = {}) {
  return run_sweep(space, opt).census;
}

}  // namespace sumsetlab
