#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <vector>

#include <sumsetlab/report_json.hpp>
#include <sumsetlab/verifier.hpp>

#include "oracle.hpp"

using namespace sumsetlab;

TEST_CASE("canonical pair counts follow the closed form") {
  CHECK(canonical_pair_count(1) == 2);
  CHECK(canonical_pair_count(2) == 8);
  CHECK(canonical_pair_count(3) == 36);
  CHECK(canonical_pair_count(12) == 11'180'716);

  for (int cap = 1; cap <= 6; ++cap) {
    std::int64_t seen = 0;
    enumerate_pair_masks(PairSpace{cap}, [&](const PairKey&) { ++seen; });
    CHECK(seen == canonical_pair_count(cap));
  }
}

TEST_CASE("the smallest space holds exactly the two expected pairs") {
  std::vector<PairKey> keys;
  enumerate_pair_masks(PairSpace{1}, [&](const PairKey& k) { keys.push_back(k); });
  REQUIRE(keys.size() == 2);
  CHECK(key_set_a(keys[0]) == IntSet{0});
  CHECK(key_set_b(keys[0]) == IntSet{0});
  CHECK(key_set_a(keys[1]) == IntSet{0, 1});
  CHECK(key_set_b(keys[1]) == IntSet{0, 1});
}

TEST_CASE("enumerated pairs are canonical, distinct and ordered") {
  std::set<PairKey> seen;
  PairKey previous{-1, 0, 0, 0};
  bool ordered = true;
  enumerate_pairs(PairSpace{4}, [&](const IntSet& a, const IntSet& b) {
    CHECK(a.min() == 0);
    CHECK(b.min() == 0);
    CHECK(diam(b) <= diam(a));
    CHECK(diam(a) <= 4);
    PairKey key{static_cast<int>(diam(a)), 0, static_cast<int>(diam(b)), 0};
    for (auto x : a) key.a_bits |= 1u << x;
    for (auto x : b) key.b_bits |= 1u << x;
    CHECK(seen.insert(key).second);
    ordered = ordered && previous < key;
    previous = key;
  });
  CHECK(ordered);
  CHECK(static_cast<std::int64_t>(seen.size()) == canonical_pair_count(4));
}

TEST_CASE("enumeration guard rejects out-of-range caps") {
  CHECK_THROWS_AS(enumerate_pair_masks(PairSpace{0}, [](const PairKey&) {}), ContractError);
  CHECK_THROWS_AS(enumerate_pair_masks(PairSpace{21}, [](const PairKey&) {}), ContractError);
  CHECK_THROWS_AS(run_sweep(PairSpace{15}, VerifyOptions{}, 10), ContractError);
  // A guard above the hard cap clamps down to it instead of unlocking more.
  CHECK_THROWS_AS(run_sweep(PairSpace{25}, VerifyOptions{}, 30), ContractError);
}

TEST_CASE("every predicate survives the exhaustive sweep up to diameter six") {
  const SweepResult result = run_sweep(PairSpace{6}, VerifyOptions{});
  const VerificationReport& rep = result.report;

  CHECK(rep.total_pairs == canonical_pair_count(6));
  CHECK(rep.clean());
  CHECK(rep.counterexamples.empty());
  CHECK(rep.hypothesis_pairs > 0);
  CHECK(rep.tight_pairs > 0);
  CHECK(rep.tight_pairs <= rep.hypothesis_pairs);

  // Unconditional predicates check every pair; gated ones check fewer.
  const auto at = [&](Predicate p) { return rep.predicates[static_cast<int>(p)]; };
  CHECK(at(Predicate::profile_identities).checked == rep.total_pairs);
  CHECK(at(Predicate::key_lemma).checked == rep.total_pairs);
  CHECK(at(Predicate::theorem).checked == rep.hypothesis_pairs);
  CHECK(at(Predicate::ordering).checked == rep.hypothesis_pairs);
  CHECK(at(Predicate::frontier_interval).checked == rep.hypothesis_pairs);
  CHECK(at(Predicate::decomposition).checked == rep.hypothesis_pairs);
  CHECK(at(Predicate::stability_identities).checked >= rep.hypothesis_pairs);
  CHECK(at(Predicate::frobenius_prefix).checked > 0);
  CHECK(at(Predicate::frobenius_prefix).checked <= rep.hypothesis_pairs);
  CHECK(at(Predicate::corollary).checked > 0);
  CHECK(at(Predicate::cited_diam).checked > 0);

  // The excess never dips under the holes of B while the hypotheses hold.
  CHECK(rep.obs_excess_below_holes_b == 0);
}

TEST_CASE("worker count does not change the report or the census") {
  VerifyOptions serial;
  serial.jobs = 1;
  VerifyOptions parallel;
  parallel.jobs = 4;

  const SweepResult one = run_sweep(PairSpace{5}, serial);
  const SweepResult four = run_sweep(PairSpace{5}, parallel);

  CHECK(to_json(one.report).dump() == to_json(four.report).dump());
  CHECK(census_csv(one.census) == census_csv(four.census));
}

TEST_CASE("reports merge the same way any partition is cut") {
  VerifyOptions base;
  const SweepResult whole = run_sweep(PairSpace{5}, base);

  VerifyOptions even = base;
  even.pair_filter = [](const PairKey& k) { return Mask64{k.a_bits}.count() % 2 == 0; };
  VerifyOptions odd = base;
  odd.pair_filter = [](const PairKey& k) { return Mask64{k.a_bits}.count() % 2 == 1; };

  const SweepResult part_a = run_sweep(PairSpace{5}, even);
  const SweepResult part_b = run_sweep(PairSpace{5}, odd);

  const VerificationReport joined_ab = merge(part_a.report, part_b.report);
  const VerificationReport joined_ba = merge(part_b.report, part_a.report);
  CHECK(to_json(joined_ab).dump() == to_json(whole.report).dump());
  CHECK(to_json(joined_ba).dump() == to_json(whole.report).dump());

  const TightnessCensus census_ab = merge(part_a.census, part_b.census);
  CHECK(census_csv(census_ab) == census_csv(whole.census));
}

TEST_CASE("merge refuses mismatched caps") {
  VerifyOptions small_caps;
  small_caps.max_counterexamples = 5;
  const SweepResult a = run_sweep(PairSpace{2}, VerifyOptions{});
  const SweepResult b = run_sweep(PairSpace{2}, small_caps);
  CHECK_THROWS_AS(merge(a.report, b.report), ContractError);
}

TEST_CASE("predicate selection narrows the work") {
  VerifyOptions only_theorem;
  only_theorem.selection = PredicateSelection::none();
  only_theorem.selection.add(Predicate::theorem);

  const SweepResult result = run_sweep(PairSpace{5}, only_theorem);
  const auto at = [&](Predicate p) { return result.report.predicates[static_cast<int>(p)]; };
  CHECK(at(Predicate::theorem).checked == result.report.hypothesis_pairs);
  CHECK(at(Predicate::profile_identities).checked == 0);
  CHECK(at(Predicate::frobenius_prefix).checked == 0);
  CHECK(result.report.clean());
}

TEST_CASE("predicate names round-trip") {
  for (int i = 0; i < predicate_count; ++i) {
    const auto pred = static_cast<Predicate>(i);
    const auto parsed = parse_predicate(predicate_name(pred));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == pred);
  }
  CHECK_FALSE(parse_predicate("no-such-predicate").has_value());
}

TEST_CASE("census counts tight pairs per size cell") {
  VerifyOptions options;
  options.census_samples_per_cell = 8;
  const SweepResult result = run_sweep(PairSpace{5}, options);
  const TightnessCensus& census = result.census;

  CHECK(census.total_tight() == result.report.tight_pairs);

  // The worked pair sits in the (5, 3) cell and is tight.
  const auto cell = census.cells.find({5, 3});
  REQUIRE(cell != census.cells.end());
  CHECK(cell->second.tight_pairs > 0);
  bool found = false;
  for (const auto& key : cell->second.samples)
    found = found || (key_set_a(key) == IntSet{0, 1, 2, 3, 5} && key_set_b(key) == IntSet{0, 1, 3});
  CHECK(found);

  for (const auto& [sizes, cell_stats] : census.cells) {
    CHECK(cell_stats.hypothesis_pairs >= cell_stats.tight_pairs);
    CHECK(static_cast<int>(cell_stats.samples.size()) <=
          std::min<std::int64_t>(options.census_samples_per_cell, cell_stats.tight_pairs));
    for (const auto& key : cell_stats.samples) {
      CHECK(static_cast<std::int64_t>(key_set_a(key).size()) == sizes.first);
      CHECK(static_cast<std::int64_t>(key_set_b(key).size()) == sizes.second);
    }
  }
}

TEST_CASE("extremal family members are counted by the census") {
  VerifyOptions options;
  const SweepResult result = run_sweep(PairSpace{6}, options);
  // family_one(k, r) paired with itself is canonical whenever k + r - 1 <= 6.
  for (int k = 3; k <= 7; ++k)
    for (int r = 0; r <= k - 3 && k + r - 1 <= 6; ++r) {
      const auto cell = result.census.cells.find({k, k});
      REQUIRE(cell != result.census.cells.end());
      CHECK(cell->second.tight_pairs > 0);
    }
}

TEST_CASE("the hard guard can be lowered but not raised") {
  CHECK_NOTHROW(check_enumeration_guard(PairSpace{8}, 8));
  CHECK_THROWS_AS(check_enumeration_guard(PairSpace{9}, 8), ContractError);
  CHECK_NOTHROW(check_enumeration_guard(PairSpace{20}, 64));  // clamped to 20
  CHECK_THROWS_AS(check_enumeration_guard(PairSpace{21}, 64), ContractError);
}
