#pragma once

// JSON and CSV rendering. Key order is fixed by construction order, so a
// given input always produces byte-identical output regardless of job count.

#include <string>

#include <json.hpp>

#include "sumsetlab/ap_engine.hpp"
#include "sumsetlab/generators.hpp"
#include "sumsetlab/hole_analysis.hpp"
#include "sumsetlab/pair_analysis.hpp"
#include "sumsetlab/set_io.hpp"
#include "sumsetlab/verifier.hpp"

namespace sumsetlab {

using ordered_json = nlohmann::ordered_json;

inline constexpr int report_schema_version = 1;

inline const char* hole_side_name(HoleSide side) {
  switch (side) {
    case HoleSide::left:
      return "left";
    case HoleSide::middle:
      return "middle";
    case HoleSide::right:
      return "right";
  }
  return "middle";
}

inline ordered_json to_json(const SumsetProfile& pf) {
  ordered_json j;
  j["maxA"] = pf.max_a;
  j["maxB"] = pf.max_b;
  j["sizeA"] = pf.size_a;
  j["sizeB"] = pf.size_b;
  j["sizeSumset"] = pf.size_sumset;
  j["excess"] = pf.excess;
  j["holesA"] = pf.holes_a;
  j["holesB"] = pf.holes_b;
  j["holesSumset"] = pf.holes_sumset;
  j["delta"] = pf.delta;
  j["gcdStarA"] = pf.gcd_a;
  j["gcdStarSumset"] = pf.gcd_sumset;
  return j;
}

inline ordered_json to_json(const SetHole& hole) {
  ordered_json j;
  j["position"] = hole.position;
  ordered_json tags = ordered_json::array();
  if (hole.left_stable) tags.push_back("leftStable");
  if (hole.right_stable) tags.push_back("rightStable");
  if (!hole.left_stable && !hole.right_stable) tags.push_back("unstable");
  j["tags"] = std::move(tags);
  return j;
}

inline ordered_json to_json(const SumsetHole& hole) {
  ordered_json j;
  j["position"] = hole.position;
  j["side"] = hole_side_name(hole.side);
  j["witnessA"] = hole.witness_a;
  j["witnessB"] = hole.witness_b;
  return j;
}

inline ordered_json to_json(const HoleLedger& lg) {
  ordered_json j;
  j["stableA"] = lg.stable_a;
  j["stableB"] = lg.stable_b;
  j["unstableA"] = lg.unstable_a;
  j["unstableB"] = lg.unstable_b;
  ordered_json holes_a = ordered_json::array();
  for (const auto& hole : lg.holes_a) holes_a.push_back(to_json(hole));
  j["holesA"] = std::move(holes_a);
  ordered_json holes_b = ordered_json::array();
  for (const auto& hole : lg.holes_b) holes_b.push_back(to_json(hole));
  j["holesB"] = std::move(holes_b);
  ordered_json holes_ab = ordered_json::array();
  for (const auto& hole : lg.holes_sumset) holes_ab.push_back(to_json(hole));
  j["holesSumset"] = std::move(holes_ab);
  return j;
}

inline ordered_json to_json(const Interval& interval) {
  ordered_json j;
  j["lo"] = interval.lo;
  j["hi"] = interval.hi;
  j["size"] = interval.size();
  return j;
}

inline ordered_json to_json(const Frontier& f) {
  ordered_json j;
  j["hypothesesHold"] = f.hypotheses_hold;
  j["lastLeftStable"] = f.last_left_stable;
  j["firstRightStable"] = f.first_right_stable;
  j["guaranteed"] = to_json(f.guaranteed);
  j["slack"] = f.slack;
  j["ordered"] = f.ordered;
  j["contained"] = f.contained;
  j["longEnough"] = f.long_enough;
  return j;
}

inline ordered_json to_json(const TheoremVerdict& v) {
  ordered_json j;
  j["diamChain"] = v.diam_chain;
  j["cardBound"] = v.card_bound;
  j["hypothesesHold"] = v.hypotheses_hold;
  j["conclusionHolds"] = v.conclusion_holds;
  j["apStart"] = v.ap_start;
  j["apLength"] = v.ap_length;
  j["required"] = v.required;
  j["tight"] = v.tight;
  return j;
}

inline ordered_json to_json(const CorollaryVerdict& v) {
  ordered_json j;
  j["gcdStarSumset"] = v.gcd_sumset;
  j["cardBound"] = v.card_bound;
  j["gcdStarAIsOne"] = v.gcd_a_is_one;
  j["relaxedBound"] = v.relaxed_bound;
  j["hypothesesHold"] = v.hypotheses_hold;
  j["degenerate"] = v.degenerate;
  j["difference"] = v.difference;
  j["conclusionHolds"] = v.conclusion_holds;
  j["apStart"] = v.ap_start;
  j["apLength"] = v.ap_length;
  j["required"] = v.required;
  j["tight"] = v.tight;
  return j;
}

inline ordered_json to_json(const CitedDiamReport& r) {
  ordered_json j;
  j["applicable"] = r.applicable;
  j["diamAOk"] = r.diam_a_ok;
  j["diamBOk"] = r.diam_b_ok;
  j["slackA"] = r.slack_a;
  j["slackB"] = r.slack_b;
  return j;
}

inline ordered_json to_json(const DecompositionReport& r) {
  ordered_json j;
  j["applicable"] = r.applicable;
  j["guaranteed"] = to_json(r.guaranteed);
  j["padA"] = to_json(r.pad_a);
  j["padB"] = to_json(r.pad_b);
  j["holds"] = r.holds;
  return j;
}

inline ordered_json to_json(const FrobeniusReport& r) {
  ordered_json j;
  j["applicable"] = r.applicable;
  j["leftBound"] = r.left_bound;
  j["horizon"] = r.horizon;
  j["halvesEqual"] = r.halves_equal;
  j["prefixMatches"] = r.prefix_matches;
  j["closedUnderSteps"] = r.closed_under_steps;
  j["stabilizedAfter"] = r.stabilized_after;
  return j;
}

inline ordered_json predicate_status_json(const PairAnalysis& an) {
  ordered_json statuses;
  for (int i = 0; i < predicate_count; ++i) {
    const auto pred = static_cast<Predicate>(i);
    const PredicateOutcome result = outcome(an, pred);
    statuses[std::string(predicate_name(pred))] =
        !result.applicable ? "not-applicable" : (result.ok ? "pass" : "fail");
  }
  return statuses;
}

inline ordered_json to_json(const VerificationReport& rep) {
  ordered_json j;
  j["maxDiam"] = rep.max_diam;
  ordered_json selected = ordered_json::array();
  for (int i = 0; i < predicate_count; ++i)
    if ((rep.selection_mask >> i) & 1u)
      selected.push_back(std::string(predicate_names[i]));
  j["selectedPredicates"] = std::move(selected);
  j["totalPairs"] = rep.total_pairs;
  j["hypothesisPairs"] = rep.hypothesis_pairs;
  j["tightPairs"] = rep.tight_pairs;
  ordered_json stats;
  for (int i = 0; i < predicate_count; ++i) {
    if (!((rep.selection_mask >> i) & 1u)) continue;
    ordered_json entry;
    entry["checked"] = rep.predicates[i].checked;
    entry["falsified"] = rep.predicates[i].falsified;
    stats[std::string(predicate_names[i])] = std::move(entry);
  }
  j["predicates"] = std::move(stats);
  ordered_json counterexamples = ordered_json::array();
  for (const auto& ce : rep.counterexamples) {
    ordered_json entry;
    entry["predicate"] = std::string(predicate_name(ce.predicate));
    entry["a"] = format_set(key_set_a(ce.key));
    entry["b"] = format_set(key_set_b(ce.key));
    entry["detail"] = ce.detail;
    counterexamples.push_back(std::move(entry));
  }
  j["counterexamples"] = std::move(counterexamples);
  ordered_json samples = ordered_json::array();
  for (const auto& key : rep.extremal_samples) {
    ordered_json entry;
    entry["a"] = format_set(key_set_a(key));
    entry["b"] = format_set(key_set_b(key));
    samples.push_back(std::move(entry));
  }
  j["extremalSamples"] = std::move(samples);
  ordered_json observations;
  observations["cardBoundWithoutDiamChain"] = rep.obs_card_without_diam;
  observations["cardBoundWithoutDiamChainGcdFree"] = rep.obs_card_without_diam_gcd_free;
  observations["excessBelowHolesB"] = rep.obs_excess_below_holes_b;
  j["observations"] = std::move(observations);
  return j;
}

// One row per (|A|, |B|) cell that saw a hypothesis-satisfying pair; the
// sample columns quote the smallest tight pair, or stay empty when the cell
// has none.
inline std::string census_csv(const TightnessCensus& census) {
  std::string out = "sizeA,sizeB,tightCount,sampleA,sampleB\n";
  for (const auto& [key, cell] : census.cells) {
    out += std::to_string(key.first);
    out += ',';
    out += std::to_string(key.second);
    out += ',';
    out += std::to_string(cell.tight_pairs);
    out += ',';
    if (!cell.samples.empty()) {
      const PairKey& sample = cell.samples.front();
      out += '"' + format_set(key_set_a(sample)) + '"';
      out += ',';
      out += '"' + format_set(key_set_b(sample)) + '"';
    } else {
      out += ',';
    }
    out += '\n';
  }
  return out;
}

}  // namespace sumsetlab
