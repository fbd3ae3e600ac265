#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sumsetlab/cli.hpp>

using namespace sumsetlab;

namespace {

ordered_json run_analyze(const std::string& a, const std::string& b, int expected_exit = 0) {
  AnalyzeRequest request;
  request.a = a;
  request.b = b;
  std::ostringstream out, err;
  const int code = cmd_analyze(request, out, err);
  REQUIRE(code == expected_exit);
  if (expected_exit != 0) return {};
  return ordered_json::parse(out.str());
}

std::filesystem::path fresh_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "sumsetlab_tests" / name;
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

TEST_CASE("analyze envelope for the worked pair") {
  const ordered_json j = run_analyze("0,1,2,3,5", "0,1,3");

  CHECK(j["schemaVersion"] == 1);
  CHECK(j["command"] == "analyze");
  CHECK_FALSE(j.contains("generatedAt"));
  CHECK(j["inputs"]["a"] == "0,1,2,3,5");
  CHECK(j["normalization"]["swapped"] == false);
  CHECK(j["normalization"]["offsetA"] == 0);
  CHECK(j["profile"]["sizeSumset"] == 8);
  CHECK(j["profile"]["excess"] == 1);
  CHECK(j["sumset"] == "0,1,2,3,4,5,6,8");
  CHECK(j["ledger"]["stableA"] == 1);
  CHECK(j["ledger"]["holesSumset"][0]["position"] == 7);
  CHECK(j["ledger"]["holesSumset"][0]["witnessA"] == 4);
  CHECK(j["keyLemma"]["falsified"] == false);
  CHECK(j["frontier"]["guaranteed"]["lo"] == 0);
  CHECK(j["frontier"]["guaranteed"]["hi"] == 6);
  CHECK(j["verdicts"]["theorem"]["tight"] == true);
  CHECK(j["verdicts"]["theorem"]["apLength"] == 7);
  CHECK(j["verdicts"]["corollary"]["difference"] == 1);
  CHECK(j["checks"]["decomposition"]["holds"] == true);
  CHECK(j["checks"]["frobeniusPrefix"]["applicable"] == true);
  CHECK(j["predicates"]["theorem"] == "pass");
  CHECK(j["predicates"]["key-lemma"] == "pass");
}

TEST_CASE("analyze normalizes, swaps and reports offsets") {
  const ordered_json j = run_analyze("10,11,13", "3,4,5,6,8");

  // The wider set becomes A after the swap.
  CHECK(j["normalization"]["swapped"] == true);
  CHECK(j["normalization"]["a"] == "0,1,2,3,5");
  CHECK(j["normalization"]["b"] == "0,1,3");
  CHECK(j["normalization"]["offsetA"] == 3);
  CHECK(j["normalization"]["offsetB"] == 10);
  CHECK(j["verdicts"]["theorem"]["tight"] == true);
}

TEST_CASE("analyze accepts JSON array literals") {
  const ordered_json j = run_analyze("[0,1,2,3,5]", "[0,3,1]");
  CHECK(j["profile"]["sizeSumset"] == 8);
  CHECK(j["inputs"]["b"] == "0,1,3");
}

TEST_CASE("analyze input through a file") {
  const auto dir = fresh_dir("at_file");
  const auto path = dir / "a.txt";
  std::ofstream(path) << "0, 1, 2, 3, 5\n";
  const ordered_json j = run_analyze("@" + path.string(), "0,1,3");
  CHECK(j["profile"]["sizeSumset"] == 8);
}

TEST_CASE("analyze exit codes") {
  run_analyze("0,1,x", "0,1", exit_parse);
  run_analyze("", "0,1", exit_parse);
  run_analyze("@/no/such/file", "0,1", exit_parse);

  // Parses fine but breaks the dense-window precondition.
  run_analyze("0,2000000000", "0,1", exit_contract);
}

TEST_CASE("analyze is deterministic without timestamps") {
  AnalyzeRequest request;
  request.a = "0,1,2,3,5";
  request.b = "0,1,3";
  std::ostringstream first, second, err;
  REQUIRE(cmd_analyze(request, first, err) == exit_ok);
  REQUIRE(cmd_analyze(request, second, err) == exit_ok);
  CHECK(first.str() == second.str());

  request.timestamps = true;
  std::ostringstream stamped;
  REQUIRE(cmd_analyze(request, stamped, err) == exit_ok);
  CHECK(ordered_json::parse(stamped.str()).contains("generatedAt"));
}

TEST_CASE("verify writes report and census and succeeds") {
  const auto dir = fresh_dir("verify_small");
  VerifyRequest request;
  request.max_diam = 4;
  request.jobs = 2;
  request.out_dir = dir.string();
  std::ostringstream out, err;
  REQUIRE(cmd_verify(request, out, err) == exit_ok);

  const ordered_json report = ordered_json::parse(slurp(dir / "report.json"));
  CHECK(report["schemaVersion"] == 1);
  CHECK(report["command"] == "verify");
  CHECK(report["maxDiam"] == 4);
  CHECK(report["totalPairs"] == 156);
  CHECK(report["counterexamples"].empty());
  for (const auto& [name, stats] : report["predicates"].items()) {
    CAPTURE(name);
    CHECK(stats["falsified"] == 0);
  }

  const std::string census = slurp(dir / "census.csv");
  CHECK(census.rfind("sizeA,sizeB,tightCount,sampleA,sampleB\n", 0) == 0);
  CHECK(census.find("\"0,1\"") != std::string::npos);
}

TEST_CASE("verify respects predicate selection and rejects unknown names") {
  const auto dir = fresh_dir("verify_selection");
  VerifyRequest request;
  request.max_diam = 3;
  request.only = {"theorem", "key-lemma"};
  request.out_dir = dir.string();
  std::ostringstream out, err;
  REQUIRE(cmd_verify(request, out, err) == exit_ok);
  const ordered_json report = ordered_json::parse(slurp(dir / "report.json"));
  CHECK(report["selectedPredicates"].size() == 2);
  CHECK(report["predicates"].contains("theorem"));
  CHECK_FALSE(report["predicates"].contains("corollary"));

  request.only = {"not-a-predicate"};
  std::ostringstream out2, err2;
  CHECK(cmd_verify(request, out2, err2) == exit_parse);
}

TEST_CASE("verify enforces the enumeration guard") {
  VerifyRequest request;
  request.max_diam = 25;
  std::ostringstream out, err;
  CHECK(cmd_verify(request, out, err) == exit_contract);

  request.max_diam = 9;
  request.guard = 8;  // pre-lowered, as the environment variable would
  std::ostringstream out2, err2;
  CHECK(cmd_verify(request, out2, err2) == exit_contract);
}

TEST_CASE("environment guard parsing") {
  CHECK(effective_guard(nullptr) == 20);
  CHECK(effective_guard("") == 20);
  CHECK(effective_guard("8") == 8);
  CHECK(effective_guard("20") == 20);
  CHECK(effective_guard("64") == 20);  // can never raise the cap
  CHECK_THROWS_AS(effective_guard("abc"), ParseError);
  CHECK_THROWS_AS(effective_guard("8.5"), ParseError);
  CHECK_THROWS_AS(effective_guard("0"), ParseError);
  CHECK_THROWS_AS(effective_guard("-3"), ParseError);
}

TEST_CASE("gen emits family members") {
  GenRequest request;
  request.family = "one";
  request.k = 5;
  request.r = 1;
  std::ostringstream out, err;
  REQUIRE(cmd_gen(request, out, err) == exit_ok);
  CHECK(out.str() == "0,1,2,3,5\n");

  GenRequest two;
  two.family = "two";
  two.k = 6;
  two.x = 7;
  std::ostringstream out2, err2;
  REQUIRE(cmd_gen(two, out2, err2) == exit_ok);
  CHECK(out2.str() == "1,2,3,8,9,10\n");
}

TEST_CASE("gen check re-derives the claims") {
  GenRequest request;
  request.family = "two";
  request.k = 6;
  request.x = 7;
  request.check = true;
  std::ostringstream out, err;
  REQUIRE(cmd_gen(request, out, err) == exit_ok);

  const std::string text = out.str();
  const auto newline = text.find('\n');
  REQUIRE(newline != std::string::npos);
  CHECK(text.substr(0, newline) == "1,2,3,8,9,10");
  const ordered_json j = ordered_json::parse(text.substr(newline + 1));
  CHECK(j["command"] == "gen");
  CHECK(j["doublingSize"] == 15);
  CHECK(j["doublingBound"] == 14);
  CHECK(j["cardClaim"] == true);
  CHECK(j["run"]["length"] == 5);
  CHECK(j["runTarget"] == 11);
  CHECK(j["runClaim"] == true);
  CHECK(j["pass"] == true);
}

TEST_CASE("gen exit codes") {
  GenRequest bad_domain;
  bad_domain.family = "one";
  bad_domain.k = 2;
  std::ostringstream out, err;
  CHECK(cmd_gen(bad_domain, out, err) == exit_contract);

  GenRequest bad_family;
  bad_family.family = "three";
  bad_family.k = 5;
  std::ostringstream out2, err2;
  CHECK(cmd_gen(bad_family, out2, err2) == exit_parse);

  GenRequest missing_x;
  missing_x.family = "two";
  missing_x.k = 5;
  std::ostringstream out3, err3;
  CHECK(cmd_gen(missing_x, out3, err3) == exit_parse);

  GenRequest wrong_param;
  wrong_param.family = "one";
  wrong_param.k = 5;
  wrong_param.x = 9;
  std::ostringstream out4, err4;
  CHECK(cmd_gen(wrong_param, out4, err4) == exit_parse);
}
