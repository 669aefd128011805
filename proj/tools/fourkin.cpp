#include <chrono>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "fourkin/fourkin.hpp"

namespace {

void print_registry(const char* heading, const std::vector<fourkin::RegistryEntry>& entries) {
  std::printf("%s\n", heading);
  for (const auto& e : entries) {
    std::printf("  %-22s %s\n", e.name.c_str(), e.brief.c_str());
    if (!e.params.empty()) std::printf("  %-22s params: %s\n", "", e.params.c_str());
  }
}

int run_verify(const std::string& path, const fourkin::RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const fourkin::RunOutcome outcome = fourkin::run_scenario(path, options);
  if (outcome.exit_code == 2) {
    std::fprintf(stderr, "error: %s\n", outcome.error.c_str());
    return 2;
  }

  std::size_t passed = 0;
  for (const auto& r : outcome.results) {
    const char* mode = r.negative ? "floor" : "tolerance";
    std::printf("[%s] %-28s %-22s max defect %.3e  %s %.3e\n", r.passed ? "PASS" : "FAIL",
                r.id.c_str(), ("(" + r.type + ")").c_str(), r.max_defect, mode, r.threshold);
    if (r.passed) ++passed;
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  std::printf("%s: %zu/%zu checks passed in %.2f s\n", outcome.scenario_name.c_str(), passed,
              outcome.results.size(), elapsed.count());
  return outcome.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"four-dimensional kinematics verification"};
  app.require_subcommand(1);

  std::string scenario_path;
  fourkin::RunOptions options;
  std::uint64_t seed = 0;

  CLI::App* verify = app.add_subcommand("verify", "run the checks of a scenario file");
  verify->add_option("scenario", scenario_path, "scenario TOML file")->required();
  verify->add_option("--report", options.report_path, "write the JSON report here");
  verify->add_option("--csv", options.csv_path, "write per-sample rows here");
  CLI::Option* seed_opt = verify->add_option("--seed", seed, "override the scenario seed");
  verify->add_option("--tolerance-scale", options.tolerance_scale,
                     "multiply tolerances (divide defect floors) by this factor");

  app.add_subcommand("list-motions", "print the motion registry");
  app.add_subcommand("list-fields", "print the field registries");
  app.add_subcommand("list-checks", "print the check registry");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (verify->parsed()) {
    if (*seed_opt) options.seed = seed;
    return run_verify(scenario_path, options);
  }
  if (app.got_subcommand("list-motions")) {
    print_registry("motions:", fourkin::motion_registry());
    return 0;
  }
  if (app.got_subcommand("list-fields")) {
    print_registry("vector fields:", fourkin::vector_field_registry());
    print_registry("scalar fields:", fourkin::scalar_field_registry());
    return 0;
  }
  std::printf("checks:\n");
  for (const auto& c : fourkin::check_registry()) {
    std::printf("  %-24s %s\n", c.type.c_str(), c.brief.c_str());
    if (!c.params.empty()) std::printf("  %-24s params: %s\n", "", c.params.c_str());
    std::printf("  %-24s default %s: %.0e\n", "",
                c.type == "vector_objectivity" || c.type == "rate_objectivity"
                    ? "tolerance (floor 1e-01 when expect = non_objective)"
                    : "tolerance",
                fourkin::default_tolerance(c.type));
  }
  return 0;
}
