#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "fourkin/calculus.hpp"
#include "fourkin/christoffel_oracle.hpp"
#include "fourkin/errors.hpp"
#include "fourkin/fields.hpp"
#include "fourkin/flow.hpp"
#include "fourkin/motion.hpp"
#include "fourkin/registry.hpp"
#include "fourkin/scenario.hpp"

namespace fourkin {

// One CSV row: a single compared component at a sample point.
struct SampleEntry {
  SpacetimePoint p;
  std::string component;
  double lhs = 0.0;
  double rhs = 0.0;

  double abs_err() const { return std::fabs(lhs - rhs); }
};

struct CheckResult {
  std::string id;
  std::string type;
  bool passed = false;
  bool negative = false;  // pass means the defect stays above the floor
  double threshold = 0.0;
  double max_defect = 0.0;
  SpacetimePoint worst;
  std::size_t sample_count = 0;
  std::vector<SampleEntry> entries;
};

inline double default_tolerance(const std::string& type) {
  if (type == "jacobian_identity") return 1e-10;
  if (type == "rate_cancellation") return 1e-10;
  if (type == "pushforward_functorial") return 1e-10;
  if (type == "centripetal_field") return 1e-10;
  if (type == "angular_velocity") return 1e-12;
  if (type == "self_rate_zero") return 1e-12;
  if (type == "jaumann_mean") return 1e-12;
  if (type == "christoffel_oracle") return 1e-6;
  if (type == "rate_objectivity") return 1e-6;
  if (type == "naive_rate_defect") return 1e-6;
  if (type == "field_partials") return 1e-6;
  if (type == "vector_objectivity") return 1e-8;
  if (type == "rate_zero") return 1e-8;
  if (type == "flow_semigroup") return 1e-8;
  if (type == "flow_identity") return 1e-5;
  throw ConfigError("unknown check type '" + type + "'");
}

inline constexpr double kDefaultDefectFloor = 1e-1;

struct CheckDoc {
  std::string type;
  std::string params;
  std::string brief;
};

inline const std::vector<CheckDoc>& check_registry() {
  static const std::vector<CheckDoc> docs{
      {"christoffel_oracle", "", "analytic connection vs both finite-difference forms"},
      {"jacobian_identity", "", "inverse Jacobian composed with forward Jacobian is I4"},
      {"angular_velocity", "omega = [3] (optional expectation)",
       "Omega is antisymmetric, optionally equals a given spin"},
      {"centripetal_field", "omega = [3]", "g00 = omega x (omega x x) for steady rotation"},
      {"vector_objectivity", "field = four_velocity | three_velocity, expect",
       "transform law vs velocity measured on the transformed trajectory"},
      {"rate_objectivity",
       "rate = material | naive | upper_convected | lower_convected | jaumann, field, expect",
       "rate mapped by the Jacobian vs rate computed natively in the new frame"},
      {"naive_rate_defect", "field", "naive-rate defect magnitude equals |Omega C|"},
      {"rate_cancellation", "field", "upper convected with vs without connection terms"},
      {"self_rate_zero", "", "upper convected rate of the four-velocity vanishes"},
      {"rate_zero", "rate, field", "the named rate of the named field vanishes"},
      {"jaumann_mean", "field", "corotational rate is the mean of the convected pair"},
      {"field_partials", "field (optional; default all)",
       "analytic partials vs central differences"},
      {"pushforward_functorial", "field",
       "staged pushforward through a composite equals the whole"},
      {"flow_identity", "field, duration = 0.2, dt = 1e-3, step = 1e-3",
       "derivative along the integrated flow equals the material derivative"},
      {"flow_semigroup", "t1 = 0.3005, t2 = 0.4, step = 1e-3", "F_{t1+t2} = F_{t2} o F_{t1}"},
  };
  return docs;
}

namespace detail {

inline bool is_objectivity_type(const std::string& type) {
  return type == "vector_objectivity" || type == "rate_objectivity";
}

inline bool needs_velocity(const std::string& type) {
  return type == "vector_objectivity" || type == "rate_objectivity" ||
         type == "naive_rate_defect" || type == "rate_cancellation" ||
         type == "self_rate_zero" || type == "rate_zero" || type == "jaumann_mean" ||
         type == "flow_identity" || type == "flow_semigroup";
}

inline bool needs_vector_field(const std::string& type) {
  return type == "rate_objectivity" || type == "naive_rate_defect" ||
         type == "rate_cancellation" || type == "rate_zero" || type == "jaumann_mean" ||
         type == "pushforward_functorial";
}

inline bool valid_rate_name(const std::string& rate) {
  return rate == "material" || rate == "naive" || rate == "upper_convected" ||
         rate == "lower_convected" || rate == "jaumann";
}

// Accumulates rows and the worst per-sample defect.
class Accumulator {
 public:
  explicit Accumulator(CheckResult& r) : r_(r) {}

  void row(const SpacetimePoint& p, std::string component, double lhs, double rhs) {
    r_.entries.push_back({p, std::move(component), lhs, rhs});
  }

  void sample_defect(const SpacetimePoint& p, double defect) {
    ++r_.sample_count;
    if (defect > r_.max_defect) {
      r_.max_defect = defect;
      r_.worst = p;
    }
  }

 private:
  CheckResult& r_;
};

inline double l2(const FourVector& d) {
  return std::sqrt(d.c0 * d.c0 + d.c[0] * d.c[0] + d.c[1] * d.c[1] + d.c[2] * d.c[2]);
}

inline std::string ij(int i, int j) {
  return std::to_string(i) + "_" + std::to_string(j);
}

inline void rows_four(Accumulator& acc, const SpacetimePoint& p, const FourVector& lhs,
                      const FourVector& rhs) {
  for (int i = 0; i < 4; ++i) {
    acc.row(p, "c" + std::to_string(i), lhs.component(i), rhs.component(i));
  }
}

// Worst entry of a 4x4 difference, reported as one row.
inline double row_worst_mat4(Accumulator& acc, const SpacetimePoint& p, const std::string& tag,
                             const Mat4& lhs, const Mat4& rhs) {
  double worst = -1.0;
  int wi = 0, wj = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const double d = std::fabs(lhs(i, j) - rhs(i, j));
      if (d > worst) {
        worst = d;
        wi = i;
        wj = j;
      }
    }
  acc.row(p, tag + "_" + ij(wi, wj), lhs(wi, wj), rhs(wi, wj));
  return worst;
}

inline double row_worst_gamma(Accumulator& acc, const SpacetimePoint& p, const std::string& tag,
                              const Gamma4& lhs, const Gamma4& rhs) {
  double worst = -1.0;
  int wi = 0, wj = 0, wk = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) {
        const double d = std::fabs(lhs(i, j, k) - rhs(i, j, k));
        if (d > worst) {
          worst = d;
          wi = i;
          wj = j;
          wk = k;
        }
      }
  acc.row(p, tag + "_" + std::to_string(wi) + "_" + ij(wj, wk), lhs(wi, wj, wk),
          rhs(wi, wj, wk));
  return worst;
}

inline double row_worst_mat3(Accumulator& acc, const SpacetimePoint& p, const std::string& tag,
                             const Mat3& lhs, const Mat3& rhs) {
  double worst = -1.0;
  int wi = 0, wj = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const double d = std::fabs(lhs(i, j) - rhs(i, j));
      if (d > worst) {
        worst = d;
        wi = i;
        wj = j;
      }
    }
  acc.row(p, tag + "_" + ij(wi, wj), lhs(wi, wj), rhs(wi, wj));
  return worst;
}

inline FourVector eval_rate(const std::string& rate, const VectorField4& c,
                            const VelocityField& vf, const Christoffel& g,
                            const SpacetimePoint& p) {
  if (rate == "material") return material_derivative(c, vf, g, p);
  if (rate == "naive") return naive_rate(c, vf, p);
  if (rate == "upper_convected") return upper_convected(c, vf, p);
  if (rate == "lower_convected") return lower_convected(c, vf, p);
  if (rate == "jaumann") return jaumann(c, vf, p);
  throw ConfigError("unknown rate '" + rate + "'");
}

// Hatted velocity measured from the transformed trajectory alone: RK4 arc
// in the original coordinates, mapped pointwise, then a one-sided
// five-point first difference. Independent of the transform law under test.
inline Vec3 measured_hat_velocity(const Motion& m, const VelocityField& vf,
                                  const SpacetimePoint& p, double h) {
  const FlowMap arc = integrate_flow(vf, p, 4.0 * h, h);
  Vec3 out;
  for (int a = 0; a < 3; ++a) {
    std::array<double, 5> samples{};
    for (std::size_t k = 0; k < 5; ++k) {
      samples[k] = transform_point(m, arc.samples[k]).x[a];
    }
    out[a] = fd::one_sided_first(samples, h);
  }
  return out;
}

}  // namespace detail

struct CheckContext {
  const Scenario& scenario;
  std::vector<SpacetimePoint> samples;
  double tolerance_scale = 1.0;
};

inline void validate_scenario(const Scenario& s) {
  for (const auto& c : s.checks) {
    const std::string where = "check '" + c.id + "'";
    default_tolerance(c.type);  // rejects unknown types
    if (detail::needs_velocity(c.type) && !s.velocity.has_value()) {
      throw ConfigError(where + ": scenario has no [velocity] table");
    }
    if (detail::needs_vector_field(c.type) && !s.vector_fields.count(c.field)) {
      throw ConfigError(where + ": references unknown vector field '" + c.field + "'");
    }
    if (c.type == "vector_objectivity" && c.field != "four_velocity" &&
        c.field != "three_velocity") {
      throw ConfigError(where + ": field must be 'four_velocity' or 'three_velocity'");
    }
    if ((c.type == "rate_objectivity" || c.type == "rate_zero") &&
        !detail::valid_rate_name(c.rate)) {
      throw ConfigError(where + ": unknown rate '" + c.rate + "'");
    }
    if (c.type == "flow_identity" && !s.vector_fields.count(c.field) &&
        !s.scalar_fields.count(c.field)) {
      throw ConfigError(where + ": references unknown field '" + c.field + "'");
    }
    if (c.type == "field_partials" && !c.field.empty() && !s.vector_fields.count(c.field) &&
        !s.scalar_fields.count(c.field)) {
      throw ConfigError(where + ": references unknown field '" + c.field + "'");
    }
    if (c.type == "pushforward_functorial" && s.motion.kind() != MotionKind::composite) {
      throw ConfigError(where + ": needs a composite motion");
    }
    if (c.type == "centripetal_field" && !c.has_omega) {
      throw ConfigError(where + ": needs omega = [w1, w2, w3]");
    }
    if (c.type == "flow_identity" && c.duration < c.dt) {
      throw ConfigError(where + ": duration must be at least dt");
    }
  }
}

inline double resolve_threshold(const CheckSpec& c, const CheckContext& ctx, bool negative) {
  if (negative) {
    return c.defect_floor.value_or(kDefaultDefectFloor) / ctx.tolerance_scale;
  }
  double tol;
  if (c.tolerance) {
    tol = *c.tolerance;
  } else {
    auto it = ctx.scenario.tolerance_overrides.find(c.type);
    tol = it != ctx.scenario.tolerance_overrides.end() ? it->second : default_tolerance(c.type);
  }
  return tol * ctx.tolerance_scale;
}

namespace detail {

inline void run_christoffel_oracle(const CheckContext& ctx, Accumulator& acc) {
  const Motion& m = ctx.scenario.motion;
  for (const auto& p : ctx.samples) {
    const Gamma4 analytic = expand(christoffel(m, p));
    const Gamma4 first = fd_christoffel_first_form(m, p);
    const Gamma4 second = fd_christoffel_second_form(m, p);
    const double d1 = row_worst_gamma(acc, p, "G_first", analytic, first);
    const double d2 = row_worst_gamma(acc, p, "G_second", analytic, second);
    const double d12 = row_worst_gamma(acc, p, "G_forms", first, second);
    acc.sample_defect(p, std::max({d1, d2, d12}));
  }
}

inline void run_jacobian_identity(const CheckContext& ctx, Accumulator& acc) {
  const Motion& m = ctx.scenario.motion;
  const Mat4 eye = Mat4::identity();
  for (const auto& p : ctx.samples) {
    const SpacetimePoint p_hat = transform_point(m, p);
    const Jacobian4 fwd = jacobian_hat(m, p);
    const Jacobian4 inv = jacobian_inverse(m, p_hat);
    const double a = row_worst_mat4(acc, p, "invfwd", (inv * fwd).as_mat4(), eye);
    const double b = row_worst_mat4(acc, p, "fwdinv", (fwd * inv).as_mat4(), eye);
    acc.sample_defect(p, std::max(a, b));
  }
}

inline void run_angular_velocity(const CheckContext& ctx, const CheckSpec& spec, Accumulator& acc) {
  const Motion& m = ctx.scenario.motion;
  for (const auto& p : ctx.samples) {
    const Mat3 omega = angular_velocity(m, p.t);
    double defect = row_worst_mat3(acc, p, "antisym", omega + omega.transpose(), Mat3{});
    if (spec.has_omega) {
      defect = std::max(defect, row_worst_mat3(acc, p, "spin", omega, skew(spec.omega)));
    }
    acc.sample_defect(p, defect);
  }
}

inline void run_centripetal_field(const CheckContext& ctx, const CheckSpec& spec, Accumulator& acc) {
  const Motion& m = ctx.scenario.motion;
  for (const auto& p : ctx.samples) {
    const Vec3 g00 = christoffel(m, p).g00;
    const Vec3 want = cross(spec.omega, cross(spec.omega, p.x));
    for (int a = 0; a < 3; ++a) acc.row(p, "g00_" + std::to_string(a + 1), g00[a], want[a]);
    acc.sample_defect(p, max_abs(g00 - want));
  }
}

inline void run_vector_objectivity(const CheckContext& ctx, const CheckSpec& spec,
                                   Accumulator& acc) {
  const Motion& m = ctx.scenario.motion;
  const VelocityField& vf = *ctx.scenario.velocity;
  const bool four = spec.field == "four_velocity";
  const double h = 1e-3;
  for (const auto& p : ctx.samples) {
    const Vec3 v_hat = measured_hat_velocity(m, vf, p, h);
    const FourVector subject{four ? 1.0 : 0.0, vf(p)};
    const FourVector claimed = transform_four_vector(jacobian_hat(m, p), subject);
    const FourVector measured{subject.c0, v_hat};
    rows_four(acc, p, claimed, measured);
    acc.sample_defect(p, l2(claimed - measured));
  }
}

inline void run_rate_objectivity(const CheckContext& ctx, const CheckSpec& spec, Accumulator& acc) {
  const Motion& m = ctx.scenario.motion;
  const VelocityField& vf = *ctx.scenario.velocity;
  const VectorField4& c = ctx.scenario.vector_fields.at(spec.field);
  const VectorField4 c_hat = pushforward_field(m, c);
  const VelocityField vf_hat = pushforward_velocity(m, vf);
  const Christoffel flat = Christoffel::zero();
  for (const auto& p : ctx.samples) {
    const SpacetimePoint p_hat = transform_point(m, p);
    const FourVector rate = eval_rate(spec.rate, c, vf, christoffel(m, p), p);
    const FourVector mapped = transform_four_vector(jacobian_hat(m, p), rate);
    const FourVector native = eval_rate(spec.rate, c_hat, vf_hat, flat, p_hat);
    rows_four(acc, p, mapped, native);
    acc.sample_defect(p, l2(mapped - native));
  }
}

inline void run_naive_rate_defect(const CheckContext& ctx, const CheckSpec& spec, Accumulator& acc) {
  const Motion& m = ctx.scenario.motion;
  const VelocityField& vf = *ctx.scenario.velocity;
  const VectorField4& c = ctx.scenario.vector_fields.at(spec.field);
  const VectorField4 c_hat = pushforward_field(m, c);
  const VelocityField vf_hat = pushforward_velocity(m, vf);
  for (const auto& p : ctx.samples) {
    const SpacetimePoint p_hat = transform_point(m, p);
    const FourVector mapped = transform_four_vector(jacobian_hat(m, p), naive_rate(c, vf, p));
    const FourVector native = naive_rate(c_hat, vf_hat, p_hat);
    const double defect = l2(mapped - native);
    const Vec3 omega_c = angular_velocity(m, p.t) * c.value(p).c;
    const double want = norm(omega_c);
    acc.row(p, "norm", defect, want);
    acc.sample_defect(p, std::fabs(defect - want));
  }
}

inline void run_rate_cancellation(const CheckContext& ctx, const CheckSpec& spec, Accumulator& acc) {
  const Motion& m = ctx.scenario.motion;
  const VelocityField& vf = *ctx.scenario.velocity;
  const VectorField4& c = ctx.scenario.vector_fields.at(spec.field);
  for (const auto& p : ctx.samples) {
    const FourVector plain = upper_convected(c, vf, p);
    const FourVector via = upper_convected_via_christoffel(c, vf, christoffel(m, p), p);
    rows_four(acc, p, via, plain);
    acc.sample_defect(p, l2(via - plain));
  }
}

inline void run_self_rate_zero(const CheckContext& ctx, Accumulator& acc) {
  const VelocityField& vf = *ctx.scenario.velocity;
  const VectorField4 vel = four_velocity_field(vf);
  const FourVector zero{0.0, Vec3::zero()};
  for (const auto& p : ctx.samples) {
    const FourVector rate = upper_convected(vel, vf, p);
    rows_four(acc, p, rate, zero);
    acc.sample_defect(p, l2(rate));
  }
}

inline void run_rate_zero(const CheckContext& ctx, const CheckSpec& spec, Accumulator& acc) {
  const Motion& m = ctx.scenario.motion;
  const VelocityField& vf = *ctx.scenario.velocity;
  const VectorField4& c = ctx.scenario.vector_fields.at(spec.field);
  const FourVector zero{0.0, Vec3::zero()};
  for (const auto& p : ctx.samples) {
    const FourVector rate = eval_rate(spec.rate, c, vf, christoffel(m, p), p);
    rows_four(acc, p, rate, zero);
    acc.sample_defect(p, l2(rate));
  }
}

inline void run_jaumann_mean(const CheckContext& ctx, const CheckSpec& spec, Accumulator& acc) {
  const VelocityField& vf = *ctx.scenario.velocity;
  const VectorField4& c = ctx.scenario.vector_fields.at(spec.field);
  for (const auto& p : ctx.samples) {
    const FourVector j = jaumann(c, vf, p);
    const FourVector mean = 0.5 * (upper_convected(c, vf, p) + lower_convected(c, vf, p));
    rows_four(acc, p, j, mean);
    acc.sample_defect(p, l2(j - mean));
  }
}

inline void run_field_partials(const CheckContext& ctx, const CheckSpec& spec, Accumulator& acc) {
  const Scenario& s = ctx.scenario;
  for (const auto& p : ctx.samples) {
    double defect = 0.0;
    for (const auto& [name, field] : s.vector_fields) {
      if (!spec.field.empty() && spec.field != name) continue;
      if (!field.partials) continue;
      VectorField4 numeric = field;
      numeric.partials = nullptr;
      defect = std::max(defect, row_worst_mat4(acc, p, name, field.partials_at(p),
                                               numeric.partials_at(p)));
    }
    for (const auto& [name, field] : s.scalar_fields) {
      if (!spec.field.empty() && spec.field != name) continue;
      if (!field.gradient) continue;
      ScalarField numeric = field;
      numeric.gradient = nullptr;
      const auto analytic = field.gradient_at(p);
      const auto fd_grad = numeric.gradient_at(p);
      double worst = -1.0;
      int wd = 0;
      for (int d = 0; d < 4; ++d) {
        const double e = std::fabs(analytic[static_cast<std::size_t>(d)] -
                                   fd_grad[static_cast<std::size_t>(d)]);
        if (e > worst) {
          worst = e;
          wd = d;
        }
      }
      acc.row(p, name + "_d" + std::to_string(wd), analytic[static_cast<std::size_t>(wd)],
              fd_grad[static_cast<std::size_t>(wd)]);
      defect = std::max(defect, worst);
    }
    acc.sample_defect(p, defect);
  }
}

inline void run_pushforward_functorial(const CheckContext& ctx, const CheckSpec& spec,
                                       Accumulator& acc) {
  const Motion& m = ctx.scenario.motion;
  const VectorField4& c = ctx.scenario.vector_fields.at(spec.field);
  const VectorField4 whole = pushforward_field(m, c);
  VectorField4 staged = c;
  for (const Motion& stage : m.stages()) staged = pushforward_field(stage, staged);
  for (const auto& p : ctx.samples) {
    const SpacetimePoint p_hat = transform_point(m, p);
    const FourVector a = whole.value(p_hat);
    const FourVector b = staged.value(p_hat);
    rows_four(acc, p, a, b);
    acc.sample_defect(p, l2(a - b));
  }
}

inline void run_flow_identity(const CheckContext& ctx, const CheckSpec& spec, Accumulator& acc) {
  const Scenario& s = ctx.scenario;
  const VelocityField& vf = *s.velocity;
  const bool vector = s.vector_fields.count(spec.field) > 0;
  for (const auto& p : ctx.samples) {
    const double defect = vector
        ? flow_derivative_check(s.vector_fields.at(spec.field), vf, p, spec.duration, spec.dt)
        : flow_derivative_check(s.scalar_fields.at(spec.field), vf, p, spec.duration, spec.dt);
    acc.row(p, "norm", defect, 0.0);
    acc.sample_defect(p, defect);
  }
}

inline void run_flow_semigroup(const CheckContext& ctx, const CheckSpec& spec, Accumulator& acc) {
  const VelocityField& vf = *ctx.scenario.velocity;
  for (const auto& p : ctx.samples) {
    const SpacetimePoint direct = integrate_flow(vf, p, spec.t1 + spec.t2, spec.step).end();
    const SpacetimePoint leg = integrate_flow(vf, p, spec.t1, spec.step).end();
    const SpacetimePoint staged = integrate_flow(vf, leg, spec.t2, spec.step).end();
    for (int a = 0; a < 3; ++a) {
      acc.row(p, "x" + std::to_string(a + 1), direct.x[a], staged.x[a]);
    }
    acc.sample_defect(p, norm(direct.x - staged.x));
  }
}

}  // namespace detail

inline CheckResult run_check(const CheckContext& ctx, const CheckSpec& spec) {
  CheckResult r;
  r.id = spec.id;
  r.type = spec.type;
  r.negative = detail::is_objectivity_type(spec.type) && !spec.expect_objective;
  r.threshold = resolve_threshold(spec, ctx, r.negative);

  detail::Accumulator acc(r);
  if (spec.type == "christoffel_oracle") {
    detail::run_christoffel_oracle(ctx, acc);
  } else if (spec.type == "jacobian_identity") {
    detail::run_jacobian_identity(ctx, acc);
  } else if (spec.type == "angular_velocity") {
    detail::run_angular_velocity(ctx, spec, acc);
  } else if (spec.type == "centripetal_field") {
    detail::run_centripetal_field(ctx, spec, acc);
  } else if (spec.type == "vector_objectivity") {
    detail::run_vector_objectivity(ctx, spec, acc);
  } else if (spec.type == "rate_objectivity") {
    detail::run_rate_objectivity(ctx, spec, acc);
  } else if (spec.type == "naive_rate_defect") {
    detail::run_naive_rate_defect(ctx, spec, acc);
  } else if (spec.type == "rate_cancellation") {
    detail::run_rate_cancellation(ctx, spec, acc);
  } else if (spec.type == "self_rate_zero") {
    detail::run_self_rate_zero(ctx, acc);
  } else if (spec.type == "rate_zero") {
    detail::run_rate_zero(ctx, spec, acc);
  } else if (spec.type == "jaumann_mean") {
    detail::run_jaumann_mean(ctx, spec, acc);
  } else if (spec.type == "field_partials") {
    detail::run_field_partials(ctx, spec, acc);
  } else if (spec.type == "pushforward_functorial") {
    detail::run_pushforward_functorial(ctx, spec, acc);
  } else if (spec.type == "flow_identity") {
    detail::run_flow_identity(ctx, spec, acc);
  } else if (spec.type == "flow_semigroup") {
    detail::run_flow_semigroup(ctx, spec, acc);
  } else {
    throw ConfigError("unknown check type '" + spec.type + "'");
  }

  r.passed = r.negative ? r.max_defect >= r.threshold : r.max_defect <= r.threshold;
  return r;
}

inline std::vector<CheckResult> run_all_checks(const CheckContext& ctx) {
  validate_scenario(ctx.scenario);
  std::vector<CheckResult> results;
  results.reserve(ctx.scenario.checks.size());
  for (const auto& spec : ctx.scenario.checks) {
    results.push_back(run_check(ctx, spec));
  }
  return results;
}

}  // namespace fourkin
