#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "fourkin/calculus.hpp"
#include "fourkin/errors.hpp"
#include "fourkin/fields.hpp"
#include "fourkin/spacetime.hpp"

namespace fourkin {

// Per-step truncation estimates above this abort the integration.
inline constexpr double kFlowErrorBound = 1e-3;

// Integral-curve samples of the four-velocity (1, v) from a base point.
// Sample times step uniformly; a trailing fractional step is appended when
// the duration is not a step multiple, so the last sample always sits at
// base.t + duration exactly.
struct FlowMap {
  SpacetimePoint base;
  double duration = 0.0;
  double step = 0.0;
  std::vector<SpacetimePoint> samples;

  const SpacetimePoint& end() const { return samples.back(); }
};

namespace detail {

// One classical RK4 step for dx/dt = v(t, x). Time is not integrated; the
// caller assigns exact sample times.
inline Vec3 rk4_step(const VelocityField& vf, double t, const Vec3& x, double h) {
  const Vec3 k1 = vf({t, x});
  const Vec3 k2 = vf({t + 0.5 * h, x + (0.5 * h) * k1});
  const Vec3 k3 = vf({t + 0.5 * h, x + (0.5 * h) * k2});
  const Vec3 k4 = vf({t + h, x + h * k3});
  return x + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

inline Vec3 rk4_step_checked(const VelocityField& vf, double t, const Vec3& x, double h) {
  const Vec3 full = rk4_step(vf, t, x, h);
  const Vec3 half = rk4_step(vf, t + 0.5 * h, rk4_step(vf, t, x, 0.5 * h), 0.5 * h);
  if (max_abs(full - half) > kFlowErrorBound) {
    throw StepTooLarge("integrate_flow: local truncation estimate exceeds 1e-3");
  }
  return full;
}

}  // namespace detail

inline FlowMap integrate_flow(const VelocityField& vf, const SpacetimePoint& x0,
                              double duration, double step) {
  if (step <= 0.0) throw std::invalid_argument("integrate_flow: step must be positive");
  if (duration < 0.0) throw std::invalid_argument("integrate_flow: duration must be nonnegative");

  FlowMap flow{x0, duration, step, {x0}};
  const auto n_full = static_cast<long long>(std::floor(duration / step + 1e-9));
  Vec3 x = x0.x;
  for (long long k = 0; k < n_full; ++k) {
    const double t = x0.t + static_cast<double>(k) * step;
    x = detail::rk4_step_checked(vf, t, x, step);
    flow.samples.push_back({x0.t + static_cast<double>(k + 1) * step, x});
  }
  const double covered = static_cast<double>(n_full) * step;
  if (duration - covered > 1e-12 * (1.0 + std::fabs(duration))) {
    x = detail::rk4_step_checked(vf, x0.t + covered, x, duration - covered);
    flow.samples.push_back({x0.t + duration, x});
  }
  return flow;
}

namespace detail {

// Flow endpoint after parameter time tau from x0, stepping no coarser than h.
inline SpacetimePoint flow_point(const VelocityField& vf, const SpacetimePoint& x0,
                                 double tau, double h) {
  if (tau == 0.0) return x0;
  return integrate_flow(vf, x0, tau, h).end();
}

}  // namespace detail

// Defect of the transport identity for a scalar: central difference of
// t -> a(F_t(x)) against D_V a at the midpoint, both in the coordinates the
// fields are given in (inertial, so no connection terms enter).
inline double flow_derivative_check(const ScalarField& a, const VelocityField& vf,
                                    const SpacetimePoint& x0, double t, double dt) {
  if (dt <= 0.0 || dt > 1e-3) throw std::invalid_argument("flow_derivative_check: need 0 < dt <= 1e-3");
  if (t < dt) throw std::invalid_argument("flow_derivative_check: need t >= dt");
  const double h = std::min(dt, 1e-3);
  const SpacetimePoint plus = detail::flow_point(vf, x0, t + dt, h);
  const SpacetimePoint minus = detail::flow_point(vf, x0, t - dt, h);
  const SpacetimePoint mid = detail::flow_point(vf, x0, t, h);
  const double lhs = (a(plus) - a(minus)) / (2.0 * dt);
  return std::fabs(lhs - material_derivative_scalar(a, vf, mid));
}

// Same identity for a vector field, max over components.
inline double flow_derivative_check(const VectorField4& c, const VelocityField& vf,
                                    const SpacetimePoint& x0, double t, double dt) {
  if (dt <= 0.0 || dt > 1e-3) throw std::invalid_argument("flow_derivative_check: need 0 < dt <= 1e-3");
  if (t < dt) throw std::invalid_argument("flow_derivative_check: need t >= dt");
  const double h = std::min(dt, 1e-3);
  const SpacetimePoint plus = detail::flow_point(vf, x0, t + dt, h);
  const SpacetimePoint minus = detail::flow_point(vf, x0, t - dt, h);
  const SpacetimePoint mid = detail::flow_point(vf, x0, t, h);
  const FourVector lhs = (1.0 / (2.0 * dt)) * (c.value(plus) - c.value(minus));
  const FourVector rhs = material_derivative(c, vf, Christoffel::zero(), mid);
  return max_abs(lhs - rhs);
}

}  // namespace fourkin
