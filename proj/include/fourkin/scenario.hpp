#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "fourkin/errors.hpp"
#include "fourkin/fields.hpp"
#include "fourkin/motion.hpp"
#include "fourkin/registry.hpp"
#include "fourkin/toml_lite.hpp"

namespace fourkin {

struct SamplingSpec {
  std::vector<SpacetimePoint> explicit_points;
  int count = 100;
  Vec3 box_min{-1.0, -1.0, -1.0};
  Vec3 box_max{1.0, 1.0, 1.0};
  double t_min = 0.0;
  double t_max = 1.0;

  bool has_explicit() const { return !explicit_points.empty(); }
};

struct CheckSpec {
  std::string type;
  std::string id;
  std::string field;    // registry field name, or velocity subject
  std::string rate;     // for rate checks
  bool expect_objective = true;
  std::optional<double> tolerance;
  std::optional<double> defect_floor;
  Vec3 omega{0.0, 0.0, 0.0};  // centripetal_field / angular_velocity expectation
  bool has_omega = false;
  double duration = 0.2;  // flow checks
  double step = 1e-3;
  double dt = 1e-3;
  // Off-grid split, so the direct and the staged integrations take genuinely
  // different step sequences.
  double t1 = 0.3005;
  double t2 = 0.4;
};

struct Scenario {
  std::string name;
  std::uint64_t seed = 1;
  Motion motion = Motion::identity();
  std::string motion_summary = "identity";
  std::map<std::string, VectorField4> vector_fields;
  std::map<std::string, ScalarField> scalar_fields;
  std::optional<VelocityField> velocity;
  std::string velocity_summary;
  SamplingSpec sampling;
  std::vector<CheckSpec> checks;
  std::map<std::string, double> tolerance_overrides;  // check type -> value
  std::string report_path;
  std::string csv_path;
};

// Uniform double in [0, 1) from the top 53 bits, so sample streams are
// identical across platforms.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline std::vector<SpacetimePoint> draw_samples(const SamplingSpec& s, std::uint64_t seed) {
  if (s.has_explicit()) return s.explicit_points;
  std::mt19937_64 rng(seed);
  std::vector<SpacetimePoint> pts;
  pts.reserve(static_cast<std::size_t>(s.count));
  for (int i = 0; i < s.count; ++i) {
    SpacetimePoint p;
    p.t = s.t_min + (s.t_max - s.t_min) * uniform01(rng);
    for (int a = 0; a < 3; ++a) {
      p.x[a] = s.box_min[a] + (s.box_max[a] - s.box_min[a]) * uniform01(rng);
    }
    pts.push_back(p);
  }
  return pts;
}

namespace config {

inline const toml::Value& require(const toml::Value& tbl, const std::string& key,
                                  const std::string& where) {
  const toml::Value* v = tbl.find(key);
  if (!v) throw ConfigError(where + ": missing key '" + key + "'");
  return *v;
}

inline double require_double(const toml::Value& tbl, const std::string& key,
                             const std::string& where) {
  try {
    return require(tbl, key, where).as_double();
  } catch (const ConfigError& e) {
    throw ConfigError(where + "." + key + ": " + e.what());
  }
}

inline double double_or(const toml::Value& tbl, const std::string& key, double fallback) {
  const toml::Value* v = tbl.find(key);
  return v ? v->as_double() : fallback;
}

inline std::string string_or(const toml::Value& tbl, const std::string& key,
                             const std::string& fallback) {
  const toml::Value* v = tbl.find(key);
  return v ? v->as_string() : fallback;
}

inline Vec3 as_vec3(const toml::Value& v, const std::string& where) {
  const auto& a = v.as_array();
  if (a.size() != 3) throw ConfigError(where + ": expected 3 numbers");
  return Vec3{a[0].as_double(), a[1].as_double(), a[2].as_double()};
}

inline Vec3 require_vec3(const toml::Value& tbl, const std::string& key,
                         const std::string& where) {
  return as_vec3(require(tbl, key, where), where + "." + key);
}

inline Vec3 vec3_or(const toml::Value& tbl, const std::string& key, const Vec3& fallback) {
  const toml::Value* v = tbl.find(key);
  return v ? as_vec3(*v, key) : fallback;
}

inline Mat3 require_mat3(const toml::Value& tbl, const std::string& key,
                         const std::string& where) {
  const auto& a = require(tbl, key, where).as_array();
  if (a.size() != 9) throw ConfigError(where + "." + key + ": expected 9 numbers, row-major");
  Mat3 m;
  for (int i = 0; i < 9; ++i) m.m[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)].as_double();
  return m;
}

inline Motion build_motion(const toml::Value& tbl, std::string& summary,
                           const std::string& where = "[motion]") {
  const std::string kind = require(tbl, "kind", where).as_string();
  if (kind == "identity") {
    summary = "identity";
    return Motion::identity();
  }
  if (kind == "uniform_translation") {
    summary = "uniform_translation";
    return Motion::uniform_translation(require_vec3(tbl, "velocity", where));
  }
  if (kind == "uniform_acceleration") {
    summary = "uniform_acceleration";
    return Motion::uniform_acceleration(require_vec3(tbl, "acceleration", where));
  }
  if (kind == "rotation") {
    summary = "rotation";
    const Vec3 axis = require_vec3(tbl, "axis", where);
    const double rate = require_double(tbl, "rate", where);
    try {
      return Motion::rotation(axis, rate);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(where + ": " + e.what());
    }
  }
  if (kind == "composite") {
    const toml::Value& stages = require(tbl, "stages", where);
    if (!stages.is_array() || stages.as_array().empty()) {
      throw ConfigError(where + ".stages: expected a non-empty array of motion tables");
    }
    std::vector<Motion> parts;
    summary = "composite(";
    for (std::size_t i = 0; i < stages.as_array().size(); ++i) {
      std::string part_summary;
      parts.push_back(build_motion(stages.as_array()[i], part_summary,
                                   where + ".stages[" + std::to_string(i) + "]"));
      summary += (i ? ", " : "") + part_summary;
    }
    summary += ")";
    return Motion::composite(parts);
  }
  throw ConfigError(where + ": unknown motion kind '" + kind + "'");
}

inline VectorField4 build_vector_field(const toml::Value& tbl, const std::string& where) {
  const std::string kind = require(tbl, "kind", where).as_string();
  if (kind == "constant") {
    return constant_field(require_vec3(tbl, "value", where),
                          double_or(tbl, "time_component", 0.0));
  }
  if (kind == "linear") {
    return linear_field(require_mat3(tbl, "matrix", where),
                        vec3_or(tbl, "offset", Vec3::zero()),
                        vec3_or(tbl, "time", Vec3::zero()));
  }
  if (kind == "rigid_rotation") {
    return rigid_rotation_field(require_vec3(tbl, "omega", where));
  }
  if (kind == "shear") {
    const int component = static_cast<int>(tbl.contains("component")
                                               ? tbl.at("component").as_integer()
                                               : 1);
    const int axis = static_cast<int>(tbl.contains("gradient_axis")
                                          ? tbl.at("gradient_axis").as_integer()
                                          : 2);
    try {
      return shear_field(require_double(tbl, "rate", where), component, axis);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(where + ": " + e.what());
    }
  }
  if (kind == "radial") {
    return radial_field(require_double(tbl, "rate", where));
  }
  if (kind == "corotating") {
    return corotating_field(require_vec3(tbl, "omega", where),
                            require_vec3(tbl, "value", where));
  }
  throw ConfigError(where + ": unknown vector field kind '" + kind + "'");
}

inline ScalarField build_scalar_field(const toml::Value& tbl, const std::string& where) {
  const std::string kind = require(tbl, "kind", where).as_string();
  if (kind == "scalar_constant") return constant_scalar(require_double(tbl, "value", where));
  if (kind == "scalar_time") return time_scalar();
  if (kind == "scalar_coordinate") {
    try {
      return coordinate_scalar(static_cast<int>(require(tbl, "axis", where).as_integer()));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(where + ": " + e.what());
    }
  }
  if (kind == "scalar_linear") {
    return linear_scalar(double_or(tbl, "time", 0.0), require_vec3(tbl, "space", where));
  }
  if (kind == "scalar_wave") {
    return wave_scalar(require_vec3(tbl, "wavevector", where),
                       require_double(tbl, "frequency", where),
                       double_or(tbl, "amplitude", 1.0));
  }
  throw ConfigError(where + ": unknown scalar field kind '" + kind + "'");
}

inline SamplingSpec build_sampling(const toml::Value& tbl) {
  SamplingSpec s;
  if (const toml::Value* pts = tbl.find("points")) {
    for (std::size_t i = 0; i < pts->as_array().size(); ++i) {
      const auto& row = pts->as_array()[i].as_array();
      if (row.size() != 4) {
        throw ConfigError("[sampling].points[" + std::to_string(i) +
                          "]: expected [t, x1, x2, x3]");
      }
      s.explicit_points.push_back(SpacetimePoint{
          row[0].as_double(), Vec3{row[1].as_double(), row[2].as_double(), row[3].as_double()}});
    }
    return s;
  }
  s.count = static_cast<int>(tbl.contains("count") ? tbl.at("count").as_integer() : 100);
  if (s.count <= 0) throw ConfigError("[sampling].count: must be positive");
  s.box_min = vec3_or(tbl, "box_min", s.box_min);
  s.box_max = vec3_or(tbl, "box_max", s.box_max);
  s.t_min = double_or(tbl, "t_min", s.t_min);
  s.t_max = double_or(tbl, "t_max", s.t_max);
  return s;
}

inline CheckSpec build_check(const toml::Value& tbl, std::size_t index) {
  const std::string where = "[[checks]][" + std::to_string(index) + "]";
  CheckSpec c;
  c.type = require(tbl, "type", where).as_string();
  c.id = string_or(tbl, "id", c.type + "_" + std::to_string(index));
  c.field = string_or(tbl, "field", "");
  c.rate = string_or(tbl, "rate", "");
  const std::string expect = string_or(tbl, "expect", "objective");
  if (expect == "objective") {
    c.expect_objective = true;
  } else if (expect == "non_objective") {
    c.expect_objective = false;
  } else {
    throw ConfigError(where + ".expect: must be 'objective' or 'non_objective'");
  }
  if (const toml::Value* v = tbl.find("tolerance")) c.tolerance = v->as_double();
  if (const toml::Value* v = tbl.find("defect_floor")) c.defect_floor = v->as_double();
  if (const toml::Value* v = tbl.find("omega")) {
    c.omega = as_vec3(*v, where + ".omega");
    c.has_omega = true;
  }
  c.duration = double_or(tbl, "duration", c.duration);
  c.step = double_or(tbl, "step", c.step);
  c.dt = double_or(tbl, "dt", c.dt);
  c.t1 = double_or(tbl, "t1", c.t1);
  c.t2 = double_or(tbl, "t2", c.t2);
  return c;
}

}  // namespace config

inline Scenario scenario_from_toml(const toml::Value& root) {
  Scenario s;
  s.name = config::string_or(root, "name", "scenario");
  if (const toml::Value* v = root.find("seed")) {
    s.seed = static_cast<std::uint64_t>(v->as_integer());
  }

  if (const toml::Value* m = root.find("motion")) {
    s.motion = config::build_motion(*m, s.motion_summary);
  }

  if (const toml::Value* fields = root.find("fields")) {
    if (const toml::Value* vecs = fields->find("vector")) {
      for (std::size_t i = 0; i < vecs->as_array().size(); ++i) {
        const toml::Value& tbl = vecs->as_array()[i];
        const std::string where = "[[fields.vector]][" + std::to_string(i) + "]";
        const std::string name = config::require(tbl, "name", where).as_string();
        if (!s.vector_fields.emplace(name, config::build_vector_field(tbl, where)).second) {
          throw ConfigError(where + ": duplicate field name '" + name + "'");
        }
      }
    }
    if (const toml::Value* scs = fields->find("scalar")) {
      for (std::size_t i = 0; i < scs->as_array().size(); ++i) {
        const toml::Value& tbl = scs->as_array()[i];
        const std::string where = "[[fields.scalar]][" + std::to_string(i) + "]";
        const std::string name = config::require(tbl, "name", where).as_string();
        if (!s.scalar_fields.emplace(name, config::build_scalar_field(tbl, where)).second) {
          throw ConfigError(where + ": duplicate field name '" + name + "'");
        }
      }
    }
  }

  if (const toml::Value* v = root.find("velocity")) {
    s.velocity = as_velocity(config::build_vector_field(*v, "[velocity]"));
    s.velocity_summary = config::require(*v, "kind", "[velocity]").as_string();
  }

  if (const toml::Value* v = root.find("sampling")) {
    s.sampling = config::build_sampling(*v);
  }

  if (const toml::Value* v = root.find("tolerances")) {
    for (const auto& [key, val] : v->as_table()) {
      s.tolerance_overrides[key] = val.as_double();
    }
  }

  if (const toml::Value* v = root.find("output")) {
    s.report_path = config::string_or(*v, "report", "");
    s.csv_path = config::string_or(*v, "csv", "");
  }

  const toml::Value* checks = root.find("checks");
  if (!checks || !checks->is_array() || checks->as_array().empty()) {
    throw ConfigError("scenario has no [[checks]]");
  }
  for (std::size_t i = 0; i < checks->as_array().size(); ++i) {
    s.checks.push_back(config::build_check(checks->as_array()[i], i));
  }
  return s;
}

inline Scenario load_scenario(const std::string& path) {
  return scenario_from_toml(toml::parse_file(path));
}

}  // namespace fourkin
