// Acceptance gate: every release-blocking property in one binary, one
// pass/fail line per criterion. Tolerances here are the contract and are
// deliberately written out as literals.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "fourkin/fourkin.hpp"
#include "oracles.hpp"

using namespace fourkin;

namespace {

using Clock = std::chrono::steady_clock;

int g_failures = 0;

// Collects the measurements behind one criterion; the verdict line comes
// out first, the individual bounds after it.
class Criterion {
 public:
  Criterion(int number, std::string what) : number_(number), what_(std::move(what)) {}

  void at_most(const std::string& label, double measured, double bound) {
    part(label, measured <= bound, measured, "<=", bound);
  }
  void less_than(const std::string& label, double measured, double bound) {
    part(label, measured < bound, measured, "<", bound);
  }
  void at_least(const std::string& label, double measured, double bound) {
    part(label, measured >= bound, measured, ">=", bound);
  }
  void exactly(const std::string& label, bool ok) {
    part(label, ok, ok ? 0.0 : 1.0, "==", 0.0);
  }

  ~Criterion() {
    std::printf("[%s] criterion %d: %s\n", ok_ ? "PASS" : "FAIL", number_, what_.c_str());
    for (const auto& line : detail_) std::printf("%s", line.c_str());
    if (!ok_) ++g_failures;
  }

 private:
  void part(const std::string& label, bool ok, double measured, const char* rel, double bound) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "       %s %s: %.3e %s %.3e\n", ok ? "ok" : "NOT",
                  label.c_str(), measured, rel, bound);
    detail_.push_back(buf);
    ok_ = ok_ && ok;
  }

  int number_;
  std::string what_;
  bool ok_ = true;
  std::vector<std::string> detail_;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<Motion> bundled_motions() {
  return {
      Motion::identity(),
      Motion::uniform_acceleration({0.0, 0.0, 2.0}),
      Motion::rotation({0.0, 0.0, 1.0}, 0.7),
      Motion::composite({Motion::rotation({0.0, 0.0, 1.0}, 0.7),
                         Motion::uniform_translation({0.3, -0.2, 0.5})}),
  };
}

std::vector<SpacetimePoint> unit_box_points(std::uint64_t seed, int count = 100) {
  SamplingSpec spec;
  spec.count = count;
  return draw_samples(spec, seed);
}

std::vector<VectorField4> spacelike_registry_fields() {
  Mat3 a;
  a(0, 0) = 0.2; a(0, 1) = -0.4; a(0, 2) = 0.1;
  a(1, 1) = 0.3; a(1, 2) = -0.2;
  a(2, 0) = 0.5; a(2, 1) = 0.1; a(2, 2) = -0.3;
  return {
      constant_field({0.3, -1.1, 0.7}),
      linear_field(a, {0.4, -0.1, 0.2}, {0.1, 0.0, -0.2}),
      rigid_rotation_field({0.2, -0.3, 0.4}),
      shear_field(0.8),
      radial_field(0.6),
      corotating_field({0.0, 0.0, 0.5}, {1.0, 0.0, 0.0}),
  };
}

// Trajectory-measured velocity in the image coordinates: integrate the
// motion of a particle, map the arc pointwise, differentiate the mapped
// positions. Uses nothing from the transport formulas it is checking.
Vec3 measured_image_velocity(const Motion& m, const VelocityField& vf, const SpacetimePoint& p,
                             double h) {
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

double rate_objectivity_defect(const std::string& rate, const Motion& m, const VectorField4& c,
                               const VelocityField& vf, const std::vector<SpacetimePoint>& pts) {
  const VectorField4 c_hat = pushforward_field(m, c);
  const VelocityField vf_hat = pushforward_velocity(m, vf);
  const Christoffel flat = Christoffel::zero();
  double worst = 0.0;
  for (const auto& p : pts) {
    const SpacetimePoint p_hat = transform_point(m, p);
    FourVector own, native;
    if (rate == "material") {
      own = material_derivative(c, vf, christoffel(m, p), p);
      native = material_derivative(c_hat, vf_hat, flat, p_hat);
    } else if (rate == "naive") {
      own = naive_rate(c, vf, p);
      native = naive_rate(c_hat, vf_hat, p_hat);
    } else if (rate == "upper_convected") {
      own = upper_convected(c, vf, p);
      native = upper_convected(c_hat, vf_hat, p_hat);
    } else if (rate == "lower_convected") {
      own = lower_convected(c, vf, p);
      native = lower_convected(c_hat, vf_hat, p_hat);
    } else {
      own = jaumann(c, vf, p);
      native = jaumann(c_hat, vf_hat, p_hat);
    }
    const FourVector mapped = transform_four_vector(jacobian_hat(m, p), own);
    worst = std::max(worst, norm(mapped - native));
  }
  return worst;
}

void criterion_1(const std::vector<SpacetimePoint>& pts) {
  Criterion c(1, "analytic connection matches both finite-difference oracles");
  const auto start = Clock::now();
  double worst = 0.0;
  bool zeros_exact = true;
  for (const auto& m : bundled_motions()) {
    for (const auto& p : pts) {
      const Gamma4 full = expand(christoffel(m, p));
      worst = std::max(worst, max_abs_diff(full, fd_christoffel_first_form(m, p)));
      worst = std::max(worst, max_abs_diff(full, fd_christoffel_second_form(m, p)));
      for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k) {
          zeros_exact = zeros_exact && full(0, j, k) == 0.0;
          if (j > 0 && k > 0) {
            for (int i = 1; i < 4; ++i) zeros_exact = zeros_exact && full(i, j, k) == 0.0;
          }
        }
    }
  }
  c.at_most("finite-difference agreement, both forms, all motions", worst, 1e-6);
  c.exactly("timelike and space-space entries are exactly zero", zeros_exact);
  c.less_than("sweep time (s)", seconds_since(start), 2.0);
}

void criterion_2(const std::vector<SpacetimePoint>& pts) {
  Criterion c(2, "rotating frame has the closed-form spin and centripetal terms");
  const Motion m = Motion::rotation({0.0, 0.0, 1.0}, 0.7);
  const Mat3 expected_spin = 0.7 * skew(Vec3{0.0, 0.0, 1.0});
  double spin_err = 0.0, g00_err = 0.0, fd_err = 0.0;
  for (const auto& p : pts) {
    const Mat3 omega = angular_velocity(m, p.t);
    spin_err = std::max(spin_err, max_abs(omega - expected_spin));

    const Vec3 g00 = christoffel(m, p).g00;
    const Vec3 want{-0.49 * p.x[0], -0.49 * p.x[1], 0.0};
    g00_err = std::max(g00_err, max_abs(g00 - want));

    Mat3 qd_fd;
    for (int r = 0; r < 3; ++r)
      for (int col = 0; col < 3; ++col) {
        qd_fd(r, col) = fd::central_first(
            [&](double t) { return m.sample(t).Q(r, col); }, p.t, fd::kFirstStep);
      }
    const Mat3 omega_fd = inverse(m.sample(p.t).Q) * qd_fd;
    fd_err = std::max(fd_err, max_abs(omega - omega_fd));
  }
  c.at_most("angular velocity vs rate times axis generator", spin_err, 1e-12);
  c.at_most("g00 vs centripetal closed form", g00_err, 1e-10);
  c.at_most("angular velocity vs differentiated frames", fd_err, 1e-6);
}

void criterion_3(const std::vector<SpacetimePoint>& pts) {
  Criterion c(3, "inverse and forward frame Jacobians compose to the identity");
  double worst = 0.0;
  const Mat4 eye = Mat4::identity();
  for (const auto& m : bundled_motions()) {
    for (const auto& p : pts) {
      const SpacetimePoint p_hat = transform_point(m, p);
      const Jacobian4 fwd = jacobian_hat(m, p);
      const Jacobian4 inv = jacobian_inverse(m, p_hat);
      worst = std::max(worst, max_abs((inv * fwd).as_mat4() - eye));
      worst = std::max(worst, max_abs((fwd * inv).as_mat4() - eye));
    }
  }
  c.at_most("both products vs identity, all motions", worst, 1e-10);
}

void criterion_4(const std::vector<SpacetimePoint>& pts) {
  Criterion c(4, "four-velocity is objective where the three-velocity is not");
  const Motion m = Motion::rotation({0.0, 0.0, 1.0}, 1.0);
  const VelocityField vf = as_velocity(rigid_rotation_field({0.0, 0.0, 0.5}));
  const double h = 1e-3;
  double four_defect = 0.0, three_defect = 0.0;
  for (const auto& p : pts) {
    const Vec3 v_hat = measured_image_velocity(m, vf, p, h);
    const Jacobian4 j = jacobian_hat(m, p);
    const FourVector four_mapped = transform_four_vector(j, {1.0, vf(p)});
    const FourVector three_mapped = transform_four_vector(j, {0.0, vf(p)});
    four_defect = std::max(four_defect, norm(four_mapped - FourVector{1.0, v_hat}));
    three_defect = std::max(three_defect, norm(three_mapped - FourVector{0.0, v_hat}));
  }
  c.less_than("four-velocity vs measured trajectories", four_defect, 1e-8);
  c.at_least("three-velocity defect", three_defect, 0.1);
}

void criterion_5(const std::vector<SpacetimePoint>& pts) {
  Criterion c(5, "material rate is objective and the naive rate fails by the spin");
  const VelocityField vf = as_velocity(rigid_rotation_field({0.0, 0.0, 0.5}));
  double worst = 0.0;
  for (const auto& m : bundled_motions()) {
    for (const auto& field : spacelike_registry_fields()) {
      worst = std::max(worst, rate_objectivity_defect("material", m, field, vf, pts));
    }
  }
  c.at_most("material rate, all bundled fields and motions", worst, 1e-6);

  const Motion rot = Motion::rotation({0.0, 0.0, 1.0}, 0.7);
  const VectorField4 cf = constant_field({0.3, -1.1, 0.7});
  c.at_least("naive-rate defect under rotation",
             rate_objectivity_defect("naive", rot, cf, vf, pts), 0.1);

  const VelocityField rest = as_velocity(constant_field({0.0, 0.0, 0.0}));
  const VectorField4 cf_hat = pushforward_field(rot, cf);
  const VelocityField rest_hat = pushforward_velocity(rot, rest);
  double formula_err = 0.0;
  for (const auto& p : pts) {
    const SpacetimePoint p_hat = transform_point(rot, p);
    const FourVector mapped = transform_four_vector(jacobian_hat(rot, p), naive_rate(cf, rest, p));
    const FourVector native = naive_rate(cf_hat, rest_hat, p_hat);
    const double defect = norm(mapped - native);
    const double want = norm(angular_velocity(rot, p.t) * cf.value(p).c);
    formula_err = std::max(formula_err, std::fabs(defect - want));
  }
  c.at_most("resting naive defect vs spin applied to the field", formula_err, 1e-6);
}

void criterion_6(const std::vector<SpacetimePoint>& pts) {
  Criterion c(6, "connection terms cancel in the convected bracket");
  const VelocityField vf = as_velocity(rigid_rotation_field({0.0, 0.0, 0.5}));
  const VectorField4 linear = spacelike_registry_fields()[1];

  double cancel_err = 0.0;
  for (const auto& m : bundled_motions()) {
    for (const auto& p : pts) {
      const FourVector plain = upper_convected(linear, vf, p);
      const FourVector via = upper_convected_via_christoffel(linear, vf, christoffel(m, p), p);
      cancel_err = std::max(cancel_err, norm(via - plain));
    }
  }
  c.at_most("bracket with vs without connection terms", cancel_err, 1e-10);

  double self_err = 0.0;
  const std::vector<VelocityField> velocities{
      vf, as_velocity(shear_field(1.0)), as_velocity(radial_field(0.4))};
  for (const auto& v : velocities) {
    const VectorField4 vel = four_velocity_field(v);
    for (const auto& p : pts) self_err = std::max(self_err, norm(upper_convected(vel, v, p)));
  }
  c.at_most("four-velocity against itself", self_err, 1e-12);
}

void criterion_7(const std::vector<SpacetimePoint>& pts) {
  Criterion c(7, "convected and corotational rates are objective");
  const VelocityField vf = as_velocity(rigid_rotation_field({0.0, 0.0, 0.5}));
  const VectorField4 linear = spacelike_registry_fields()[1];

  double conv_err = 0.0;
  for (const auto& m : bundled_motions()) {
    for (const char* rate : {"upper_convected", "lower_convected", "jaumann"}) {
      conv_err = std::max(conv_err, rate_objectivity_defect(rate, m, linear, vf, pts));
    }
  }
  c.at_most("all three rates, all bundled motions", conv_err, 1e-6);

  double mean_err = 0.0;
  for (const auto& p : pts) {
    const FourVector mean =
        0.5 * (upper_convected(linear, vf, p) + lower_convected(linear, vf, p));
    mean_err = std::max(mean_err, norm(jaumann(linear, vf, p) - mean));
  }
  c.at_most("corotational rate vs mean of the convected pair", mean_err, 1e-12);

  const Vec3 omega{0.0, 0.0, 0.5};
  const VectorField4 corot = corotating_field(omega, {1.0, 0.0, 0.0});
  const VelocityField rigid = as_velocity(rigid_rotation_field(omega));
  double corot_err = 0.0;
  for (const auto& p : pts) corot_err = std::max(corot_err, norm(jaumann(corot, rigid, p)));
  c.at_most("corotating vector's corotational rate", corot_err, 1e-8);
}

void criterion_8(const std::vector<SpacetimePoint>& pts) {
  Criterion c(8, "integral-curve transport and flow composition hold");
  const VelocityField rigid = as_velocity(rigid_rotation_field({0.0, 0.0, 0.5}));
  const VelocityField shear = as_velocity(shear_field(1.0));
  const ScalarField wave = wave_scalar({1.0, 2.0, -0.5}, 0.8);
  const VectorField4 linear = spacelike_registry_fields()[1];

  // Flow checks integrate three arcs per point; a slice of the grid keeps
  // the sweep well inside the suite budget without losing coverage.
  const std::vector<SpacetimePoint> slice(pts.begin(), pts.begin() + 25);

  double transport_err = 0.0;
  for (const VelocityField* v : {&rigid, &shear}) {
    for (const auto& p : slice) {
      transport_err = std::max(transport_err, flow_derivative_check(wave, *v, p, 0.2, 1e-3));
      transport_err = std::max(transport_err, flow_derivative_check(linear, *v, p, 0.2, 1e-3));
    }
  }
  c.at_most("material derivative vs derivative along integral curves", transport_err, 1e-5);

  double semigroup_err = 0.0;
  for (const VelocityField* v : {&rigid, &shear}) {
    for (const auto& p : slice) {
      const Vec3 direct = integrate_flow(*v, p, 0.3005 + 0.4, 1e-3).end().x;
      const SpacetimePoint leg = integrate_flow(*v, p, 0.3005, 1e-3).end();
      const Vec3 staged = integrate_flow(*v, leg, 0.4, 1e-3).end().x;
      semigroup_err = std::max(semigroup_err, norm(direct - staged));
    }
  }
  c.less_than("composition across misaligned grids", semigroup_err, 1e-8);

  double expm_err = 0.0;
  const Mat3 spin = skew(Vec3{0.0, 0.0, 0.5});
  Mat3 shear_gen;
  shear_gen(0, 1) = 1.0;
  const std::vector<std::pair<const VelocityField*, Mat3>> autonomous{{&rigid, spin},
                                                                      {&shear, shear_gen}};
  const double tau = 0.8;
  for (const auto& [v, gen] : autonomous) {
    const Mat3 propagator = testing::expm(tau * gen);
    for (const auto& p : slice) {
      const Vec3 end = integrate_flow(*v, p, tau, 1e-3).end().x;
      expm_err = std::max(expm_err, max_abs(end - propagator * p.x));
    }
  }
  c.less_than("integrated linear flows vs matrix exponential", expm_err, 1e-8);
}

void criterion_9(Clock::time_point suite_start) {
  Criterion c(9, "the bundled scenario verifies, reruns byte-identically, rejects bad input");
  const std::string scenario = std::string(FOURKIN_SCENARIO_DIR) + "/rotating_frame.toml";
  const RunOutcome first = run_scenario(scenario);
  const RunOutcome second = run_scenario(scenario);
  c.exactly("rotating-frame scenario exits 0", first.exit_code == 0 && second.exit_code == 0);
  c.exactly("same-seed reruns byte-identical",
            first.report_json == second.report_json && first.csv == second.csv);

  const RunOutcome broken =
      run_scenario(std::string(FOURKIN_TEST_DATA_DIR) + "/broken_unknown_field.toml");
  c.exactly("malformed scenario exits 2", broken.exit_code == 2);

  c.less_than("suite time (s)", seconds_since(suite_start), 10.0);
}

}  // namespace

int main() {
  const auto suite_start = Clock::now();
  const std::vector<SpacetimePoint> pts = unit_box_points(7);

  criterion_1(pts);
  criterion_2(pts);
  criterion_3(pts);
  criterion_4(pts);
  criterion_5(pts);
  criterion_6(pts);
  criterion_7(pts);
  criterion_8(pts);
  criterion_9(suite_start);

  if (g_failures == 0) {
    std::printf("acceptance: all 9 criteria satisfied\n");
    return 0;
  }
  std::printf("acceptance: %d of 9 criteria failed\n", g_failures);
  return 1;
}
