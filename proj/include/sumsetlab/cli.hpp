#pragma once

// Command implementations behind the command-line front end. They take
// already-parsed requests and report through streams, so tests can drive
// them in-process and check exit codes directly.
//
// Exit codes: 0 success, 1 falsification found, 2 malformed arguments or set
// literals, 3 broken precondition or enumeration guard.

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "sumsetlab/report_json.hpp"
#include "sumsetlab/set_io.hpp"
#include "sumsetlab/verifier.hpp"

namespace sumsetlab {

inline constexpr int exit_ok = 0;
inline constexpr int exit_falsified = 1;
inline constexpr int exit_parse = 2;
inline constexpr int exit_contract = 3;

// Clamps the enumeration guard from the environment; the variable may lower
// the built-in cap but never raise it.
inline int effective_guard(const char* env_value) {
  if (!env_value || !*env_value) return enumeration_hard_guard;
  std::int64_t value = 0;
  const std::string text(env_value);
  std::size_t used = 0;
  try {
    value = std::stoll(text, &used);
  } catch (...) {
    throw ParseError("SUMSETLAB_MAX_GUARD: not an integer");
  }
  if (used != text.size()) throw ParseError("SUMSETLAB_MAX_GUARD: not an integer");
  if (value < 1) throw ParseError("SUMSETLAB_MAX_GUARD: must be at least 1");
  return static_cast<int>(std::min<std::int64_t>(value, enumeration_hard_guard));
}

inline std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm parts{};
  gmtime_r(&now, &parts);
  char buffer[32];
  std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &parts);
  return buffer;
}

struct AnalyzeRequest {
  std::string a;
  std::string b;
  std::string out_dir;  // empty: stdout only
  bool timestamps = false;
};

struct VerifyRequest {
  int max_diam = default_enumeration_cap;
  std::vector<std::string> only;
  int jobs = 1;
  std::string out_dir = ".";
  bool timestamps = false;
  int guard = enumeration_hard_guard;
};

struct GenRequest {
  std::string family;  // "one" or "two"
  int k = 3;
  std::optional<int> r;
  std::optional<int> x;
  bool check = false;
  bool timestamps = false;
};

namespace detail {

inline ordered_json analyze_envelope(const IntSet& input_a, const IntSet& input_b,
                                     bool timestamps) {
  Normalized na = normalize(input_a);
  Normalized nb = normalize(input_b);
  bool swapped = false;
  if (diam(nb.set) > diam(na.set)) {
    std::swap(na, nb);
    swapped = true;
  }

  const auto p = make_pair_bits(na.set, nb.set);
  const PairAnalysis an = analyze_pair(p);
  const KeyLemmaReport key_lemma = check_key_lemma(p);

  ordered_json j;
  j["schemaVersion"] = report_schema_version;
  j["command"] = "analyze";
  if (timestamps) j["generatedAt"] = utc_timestamp();
  ordered_json inputs;
  inputs["a"] = format_set(input_a);
  inputs["b"] = format_set(input_b);
  j["inputs"] = std::move(inputs);
  ordered_json norm;
  norm["swapped"] = swapped;
  norm["offsetA"] = na.offset;
  norm["offsetB"] = nb.offset;
  norm["a"] = format_set(na.set);
  norm["b"] = format_set(nb.set);
  j["normalization"] = std::move(norm);
  j["profile"] = to_json(an.profile);
  j["sumset"] = format_set(sumset(na.set, nb.set));
  j["ledger"] = to_json(an.ledger);
  ordered_json kl;
  kl["falsified"] = key_lemma.falsified;
  ordered_json entries = ordered_json::array();
  for (const auto& entry : key_lemma.entries) {
    ordered_json item;
    item["position"] = entry.position;
    item["side"] = hole_side_name(entry.side);
    item["slack"] = entry.slack;
    entries.push_back(std::move(item));
  }
  kl["entries"] = std::move(entries);
  j["keyLemma"] = std::move(kl);
  j["frontier"] = to_json(an.front);
  ordered_json verdicts;
  verdicts["theorem"] = to_json(an.theorem);
  verdicts["corollary"] = to_json(an.corollary);
  j["verdicts"] = std::move(verdicts);
  ordered_json checks;
  checks["citedDiam"] = to_json(an.cited);
  checks["decomposition"] = to_json(an.decomposition);
  checks["frobeniusPrefix"] = to_json(an.frobenius);
  j["checks"] = std::move(checks);
  j["predicates"] = predicate_status_json(an);
  return j;
}

inline void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ContractError("cannot write " + path.string());
  out << text;
}

}  // namespace detail

inline int cmd_analyze(const AnalyzeRequest& request, std::ostream& out, std::ostream& err) {
  try {
    const IntSet a = load_set_argument(request.a);
    const IntSet b = load_set_argument(request.b);
    const ordered_json envelope = detail::analyze_envelope(a, b, request.timestamps);
    const std::string text = envelope.dump(2) + "\n";
    out << text;
    if (!request.out_dir.empty()) {
      std::filesystem::create_directories(request.out_dir);
      detail::write_text_file(std::filesystem::path(request.out_dir) / "analyze.json", text);
    }
    return exit_ok;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_parse;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_contract;
  }
}

inline int cmd_verify(const VerifyRequest& request, std::ostream& out, std::ostream& err) {
  try {
    VerifyOptions options;
    if (!request.only.empty()) {
      PredicateSelection selection = PredicateSelection::none();
      for (const auto& name : request.only) {
        const auto parsed = parse_predicate(name);
        if (!parsed) throw ParseError("unknown predicate '" + name + "'");
        selection.add(*parsed);
      }
      options.selection = selection;
    }
    options.jobs = request.jobs;

    const PairSpace space{request.max_diam};
    const SweepResult result = run_sweep(space, options, request.guard);

    ordered_json j;
    j["schemaVersion"] = report_schema_version;
    j["command"] = "verify";
    if (request.timestamps) j["generatedAt"] = utc_timestamp();
    ordered_json body = to_json(result.report);
    for (auto& [key, value] : body.items()) j[key] = std::move(value);

    const std::filesystem::path out_dir(request.out_dir.empty() ? "." : request.out_dir);
    std::filesystem::create_directories(out_dir);
    detail::write_text_file(out_dir / "report.json", j.dump(2) + "\n");
    detail::write_text_file(out_dir / "census.csv", census_csv(result.census));

    out << "pairs: " << result.report.total_pairs
        << "  hypothesis: " << result.report.hypothesis_pairs
        << "  tight: " << result.report.tight_pairs << "\n";
    for (int i = 0; i < predicate_count; ++i) {
      if (!((result.report.selection_mask >> i) & 1u)) continue;
      out << "  " << predicate_names[i] << ": checked " << result.report.predicates[i].checked
          << ", falsified " << result.report.predicates[i].falsified << "\n";
    }
    out << "wrote " << (out_dir / "report.json").string() << " and "
        << (out_dir / "census.csv").string() << "\n";
    return result.report.clean() ? exit_ok : exit_falsified;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_parse;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_contract;
  }
}

inline int cmd_gen(const GenRequest& request, std::ostream& out, std::ostream& err) {
  try {
    FamilySpec spec;
    if (request.family == "one") {
      spec.family = FamilySpec::Family::one;
      spec.k = request.k;
      spec.r = request.r.value_or(0);
      if (request.x) throw ParseError("family one takes --r, not --x");
    } else if (request.family == "two") {
      spec.family = FamilySpec::Family::two;
      spec.k = request.k;
      if (!request.x) throw ParseError("family two needs --x");
      spec.x = *request.x;
      if (request.r) throw ParseError("family two takes --x, not --r");
    } else {
      throw ParseError("unknown family '" + request.family + "' (expected one or two)");
    }

    if (!request.check) {
      const IntSet made = spec.family == FamilySpec::Family::one ? family_one(spec.k, spec.r)
                                                                 : family_two(spec.k, spec.x);
      out << format_set(made) << "\n";
      return exit_ok;
    }

    const FamilyClaimsReport report = family_claims_check(spec);
    out << format_set(report.set) << "\n";
    ordered_json j;
    j["schemaVersion"] = report_schema_version;
    j["command"] = "gen";
    if (request.timestamps) j["generatedAt"] = utc_timestamp();
    j["family"] = request.family;
    j["k"] = spec.k;
    if (spec.family == FamilySpec::Family::one)
      j["r"] = spec.r;
    else
      j["x"] = spec.x;
    j["set"] = format_set(report.set);
    j["doublingSize"] = report.doubling_size;
    j["doublingBound"] = report.doubling_bound;
    j["cardClaim"] = report.card_claim;
    ordered_json run;
    run["start"] = report.run.start;
    run["length"] = report.run.length;
    j["run"] = std::move(run);
    j["runTarget"] = report.run_target;
    j["runClaim"] = report.run_claim;
    j["pass"] = report.pass;
    out << j.dump(2) << "\n";
    return report.pass ? exit_ok : exit_falsified;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_parse;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_contract;
  }
}

}  // namespace sumsetlab
