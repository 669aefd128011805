#pragma once

#include <cstdint>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "fourkin/checks.hpp"
#include "fourkin/report.hpp"
#include "fourkin/scenario.hpp"

namespace fourkin {

struct RunOptions {
  std::optional<std::uint64_t> seed;
  double tolerance_scale = 1.0;
  std::string report_path;  // overrides the scenario's [output] paths
  std::string csv_path;
};

// Exit codes: 0 all checks pass, 1 at least one check fails,
// 2 configuration or I/O error (error holds the diagnostic).
struct RunOutcome {
  int exit_code = 2;
  std::string scenario_name;
  std::string report_json;
  std::string csv;
  std::vector<CheckResult> results;
  std::string error;
};

namespace detail {

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  out << content;
  if (!out) throw ConfigError("write failed for '" + path + "'");
}

}  // namespace detail

inline RunOutcome run_scenario(const std::string& path, const RunOptions& opt = {}) {
  RunOutcome outcome;
  try {
    Scenario s = load_scenario(path);
    if (opt.seed) s.seed = *opt.seed;
    outcome.scenario_name = s.name;

    CheckContext ctx{s, draw_samples(s.sampling, s.seed), opt.tolerance_scale};
    outcome.results = run_all_checks(ctx);
    outcome.report_json = render_report(s, ctx, outcome.results);
    outcome.csv = render_csv(outcome.results);

    const std::string report_path = !opt.report_path.empty() ? opt.report_path : s.report_path;
    const std::string csv_path = !opt.csv_path.empty() ? opt.csv_path : s.csv_path;
    if (!report_path.empty()) detail::write_file(report_path, outcome.report_json);
    if (!csv_path.empty()) detail::write_file(csv_path, outcome.csv);

    bool all = true;
    for (const auto& r : outcome.results) all = all && r.passed;
    outcome.exit_code = all ? 0 : 1;
  } catch (const std::exception& e) {
    outcome.exit_code = 2;
    outcome.error = e.what();
  }
  return outcome;
}

}  // namespace fourkin
