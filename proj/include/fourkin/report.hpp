#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include "json.hpp"

#include "fourkin/checks.hpp"
#include "fourkin/scenario.hpp"

namespace fourkin {

inline constexpr const char* kToolName = "fourkin";
inline constexpr const char* kToolVersion = "0.1.0";

namespace detail {

// Fixed formatting so reports and CSVs are byte-stable run to run.
inline std::string num17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace detail

// Report JSON. Key order is fixed; no timings or environment data enter, so
// two runs with the same scenario and seed serialize identically.
inline std::string render_report(const Scenario& s, const CheckContext& ctx,
                                 const std::vector<CheckResult>& results) {
  nlohmann::ordered_json root;
  root["tool"] = kToolName;
  root["version"] = kToolVersion;
  root["scenario"] = s.name;
  root["seed"] = s.seed;
  root["tolerance_scale"] = ctx.tolerance_scale;
  root["motion"] = s.motion_summary;
  root["sample_count"] = ctx.samples.size();

  bool all = true;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    all = all && r.passed;
    nlohmann::ordered_json c;
    c["id"] = r.id;
    c["type"] = r.type;
    c["status"] = r.passed ? "pass" : "fail";
    c["mode"] = r.negative ? "defect_floor" : "tolerance";
    c["threshold"] = r.threshold;
    c["max_defect"] = r.max_defect;
    c["samples"] = r.sample_count;
    c["worst_point"] = {{"t", r.worst.t}, {"x", {r.worst.x[0], r.worst.x[1], r.worst.x[2]}}};
    checks.push_back(std::move(c));
  }
  root["all_passed"] = all;
  root["checks"] = std::move(checks);
  return root.dump(2) + "\n";
}

inline std::string render_csv(const std::vector<CheckResult>& results) {
  std::string out = "check_id,t,x1,x2,x3,component,lhs,rhs,abs_err\n";
  for (const auto& r : results) {
    for (const auto& e : r.entries) {
      out += r.id;
      out += ',';
      out += detail::num17(e.p.t);
      out += ',';
      out += detail::num17(e.p.x[0]);
      out += ',';
      out += detail::num17(e.p.x[1]);
      out += ',';
      out += detail::num17(e.p.x[2]);
      out += ',';
      out += e.component;
      out += ',';
      out += detail::num17(e.lhs);
      out += ',';
      out += detail::num17(e.rhs);
      out += ',';
      out += detail::num17(e.abs_err());
      out += '\n';
    }
  }
  return out;
}

}  // namespace fourkin
