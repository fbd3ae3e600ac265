// Command-line front end: analyze one pair, sweep the canonical pair space,
// or generate the extremal families.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include <sumsetlab/sumsetlab.hpp>

namespace {

int default_jobs() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sumset structure analyzer"};
  app.require_subcommand(1);

  sumsetlab::AnalyzeRequest analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "analyze one pair of sets");
  analyze_cmd->add_option("--a", analyze.a, "first set: comma literal, JSON array, or @file")
      ->required();
  analyze_cmd->add_option("--b", analyze.b, "second set")->required();
  analyze_cmd->add_option("--out", analyze.out_dir, "also write analyze.json into this directory");
  analyze_cmd->add_flag("--timestamps", analyze.timestamps, "embed a generation timestamp");

  sumsetlab::VerifyRequest verify;
  verify.jobs = default_jobs();
  auto* verify_cmd = app.add_subcommand("verify", "sweep all canonical pairs up to a diameter");
  verify_cmd->add_option("--max-m", verify.max_diam, "largest diameter of A to enumerate")
      ->capture_default_str();
  verify_cmd->add_option("--only", verify.only, "restrict to one predicate (repeatable)");
  verify_cmd->add_option("--jobs", verify.jobs, "worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify_cmd->add_option("--out", verify.out_dir, "directory for report.json and census.csv")
      ->capture_default_str();
  verify_cmd->add_flag("--timestamps", verify.timestamps, "embed a generation timestamp");

  sumsetlab::GenRequest gen;
  std::optional<int> gen_r, gen_x;
  auto* gen_cmd = app.add_subcommand("gen", "emit an extremal family member");
  gen_cmd->add_option("family", gen.family, "one or two")->required();
  gen_cmd->add_option("--k", gen.k, "family size parameter")->required();
  auto* r_opt = gen_cmd->add_option("--r", "second parameter of family one");
  auto* x_opt = gen_cmd->add_option("--x", "block offset of family two");
  gen_cmd->add_flag("--check", gen.check, "re-derive and verify the family's claims");
  gen_cmd->add_flag("--timestamps", gen.timestamps, "embed a generation timestamp");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return sumsetlab::exit_parse;
  }

  try {
    verify.guard = sumsetlab::effective_guard(std::getenv("SUMSETLAB_MAX_GUARD"));
  } catch (const sumsetlab::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return sumsetlab::exit_parse;
  }

  if (analyze_cmd->parsed()) return sumsetlab::cmd_analyze(analyze, std::cout, std::cerr);
  if (verify_cmd->parsed()) return sumsetlab::cmd_verify(verify, std::cout, std::cerr);
  if (gen_cmd->parsed()) {
    if (r_opt->count()) gen.r = r_opt->as<int>();
    if (x_opt->count()) gen.x = x_opt->as<int>();
    return sumsetlab::cmd_gen(gen, std::cout, std::cerr);
  }
  return sumsetlab::exit_parse;
}
