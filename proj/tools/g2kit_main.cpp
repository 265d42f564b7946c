// g2kit CLI: runs a scenario file through the verification engine.
//
//   g2kit verify <scenario.json> [--report text|json] [--seed N]
//                [--samples N] [--grid N] [--tol X] [--strict]
//
// Exit codes: 0 all checks pass or proven, 1 any failed clause, 2 input
// error, 3 (with --strict) passed but some clause only verified on samples.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "g2kit/g2kit.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw g2kit::Error("cannot open scenario file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact G2 / contact compatibility verification on R^7 patches",
               "g2kit"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run a scenario's check list");
  std::string scenario_path;
  std::string format = "text";
  g2kit::SamplingSpec spec;
  bool strict = false;
  bool seed_given = false;

  verify->add_option("scenario", scenario_path, "scenario JSON file")
      ->required();
  verify->add_option("--report", format, "report format")
      ->check(CLI::IsMember({"text", "json"}));
  verify
      ->add_option_function<std::uint64_t>(
          "--seed", [&](std::uint64_t s) { spec.seed = s; seed_given = true; },
          "sampling seed (default 42; env G2KIT_SEED overrides the default)")
      ->expected(1);
  verify->add_option("--samples", spec.random_points,
                     "pseudo-random sample points per certificate");
  verify->add_option("--grid", spec.grid_resolution,
                     "lattice resolution per axis for certificates");
  verify->add_option("--tol", spec.numeric_tol,
                     "tolerance for numeric (non-exact) clauses");
  verify->add_flag("--strict", strict,
                   "exit 3 when a clause is only verified on samples");

  CLI11_PARSE(app, argc, argv);

  if (!seed_given) {
    if (const char* env = std::getenv("G2KIT_SEED")) {
      try {
        spec.seed = std::stoull(env);
      } catch (...) {
        std::cerr << "error: G2KIT_SEED is not an integer\n";
        return 2;
      }
    }
  }

  try {
    const g2kit::Scenario sc = g2kit::parse_scenario(read_file(scenario_path));
    const g2kit::RunReport run = g2kit::run_checks(sc, spec);
    std::cout << g2kit::render_report(run, format == "json"
                                               ? g2kit::ReportFormat::JsonFormat
                                               : g2kit::ReportFormat::Text);
    const std::string overall = run.overall();
    if (overall == "fail") return 1;
    if (overall == "sampled" && strict) return 3;
    return 0;
  } catch (const g2kit::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const g2kit::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
