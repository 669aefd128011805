#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "fourkin/fields.hpp"
#include "fourkin/linalg.hpp"
#include "fourkin/motion.hpp"

namespace fourkin {

// Closed-form field constructors. Every field carries analytic partials;
// finite differences are kept for derived evaluators (pushforwards), not
// for these.

inline VectorField4 constant_field(const Vec3& c, double c0 = 0.0) {
  VectorField4 f;
  f.value = [c, c0](const SpacetimePoint&) { return FourVector{c0, c}; };
  f.partials = [](const SpacetimePoint&) { return MixedTensor4{}; };
  return f;
}

// C(t, x) = A x + b + t c_t
inline VectorField4 linear_field(const Mat3& a, const Vec3& b, const Vec3& ct) {
  VectorField4 f;
  f.value = [a, b, ct](const SpacetimePoint& p) {
    return FourVector{0.0, a * p.x + b + p.t * ct};
  };
  f.partials = [a, ct](const SpacetimePoint&) {
    MixedTensor4 d;
    for (int i = 0; i < 3; ++i) {
      d(i + 1, 0) = ct[i];
      for (int j = 0; j < 3; ++j) d(i + 1, j + 1) = a(i, j);
    }
    return d;
  };
  return f;
}

// v(x) = omega x x
inline VectorField4 rigid_rotation_field(const Vec3& omega) {
  return linear_field(skew(omega), Vec3::zero(), Vec3::zero());
}

// Single-entry velocity gradient: v[component] = rate * x[gradient_axis],
// axes 1-based.
inline VectorField4 shear_field(double rate, int component = 1, int gradient_axis = 2) {
  if (component < 1 || component > 3 || gradient_axis < 1 || gradient_axis > 3) {
    throw std::invalid_argument("shear_field: axes must be in 1..3");
  }
  Mat3 a;
  a(component - 1, gradient_axis - 1) = rate;
  return linear_field(a, Vec3::zero(), Vec3::zero());
}

// v(x) = k x
inline VectorField4 radial_field(double k) {
  return linear_field(k * Mat3::identity(), Vec3::zero(), Vec3::zero());
}

// C(t) = R(axis, |omega| t) C0: a vector corotating with the rigid angular
// velocity omega, uniform in space.
inline VectorField4 corotating_field(const Vec3& omega, const Vec3& c0) {
  const double rate = norm(omega);
  const Vec3 axis = rate > 0.0 ? (1.0 / rate) * omega : Vec3{0.0, 0.0, 1.0};
  VectorField4 f;
  f.value = [axis, rate, c0](const SpacetimePoint& p) {
    return FourVector{0.0, rotation_about(axis, rate * p.t) * c0};
  };
  f.partials = [axis, rate, c0, omega](const SpacetimePoint& p) {
    MixedTensor4 d;
    const Vec3 c_now = rotation_about(axis, rate * p.t) * c0;
    const Vec3 dc = cross(omega, c_now);
    for (int i = 0; i < 3; ++i) d(i + 1, 0) = dc[i];
    return d;
  };
  return f;
}

inline ScalarField constant_scalar(double v) {
  ScalarField f;
  f.value = [v](const SpacetimePoint&) { return v; };
  f.gradient = [](const SpacetimePoint&) { return std::array<double, 4>{}; };
  return f;
}

// a(t, x) = t
inline ScalarField time_scalar() {
  ScalarField f;
  f.value = [](const SpacetimePoint& p) { return p.t; };
  f.gradient = [](const SpacetimePoint&) { return std::array<double, 4>{1.0, 0.0, 0.0, 0.0}; };
  return f;
}

// a(t, x) = x^axis, axis 1-based.
inline ScalarField coordinate_scalar(int axis) {
  if (axis < 1 || axis > 3) throw std::invalid_argument("coordinate_scalar: axis must be in 1..3");
  ScalarField f;
  f.value = [axis](const SpacetimePoint& p) { return p.x[axis - 1]; };
  f.gradient = [axis](const SpacetimePoint&) {
    std::array<double, 4> g{};
    g[static_cast<std::size_t>(axis)] = 1.0;
    return g;
  };
  return f;
}

// a(t, x) = ct t + cx . x
inline ScalarField linear_scalar(double ct, const Vec3& cx) {
  ScalarField f;
  f.value = [ct, cx](const SpacetimePoint& p) { return ct * p.t + dot(cx, p.x); };
  f.gradient = [ct, cx](const SpacetimePoint&) {
    return std::array<double, 4>{ct, cx[0], cx[1], cx[2]};
  };
  return f;
}

// a(t, x) = amp sin(k . x - freq t)
inline ScalarField wave_scalar(const Vec3& k, double freq, double amp = 1.0) {
  ScalarField f;
  f.value = [k, freq, amp](const SpacetimePoint& p) {
    return amp * std::sin(dot(k, p.x) - freq * p.t);
  };
  f.gradient = [k, freq, amp](const SpacetimePoint& p) {
    const double c = amp * std::cos(dot(k, p.x) - freq * p.t);
    return std::array<double, 4>{-freq * c, k[0] * c, k[1] * c, k[2] * c};
  };
  return f;
}

// Wrap a spacelike vector field as a continuum velocity. Spacelike-ness is
// spot-checked at the origin; registry fields are spacelike by
// construction unless an explicit time component was requested.
inline VelocityField as_velocity(const VectorField4& v) {
  if (v.value(SpacetimePoint{}).c0 != 0.0) {
    throw NotSpacelike("as_velocity: field has a time component");
  }
  return VelocityField{v};
}

// Registry listings for the CLI.
struct RegistryEntry {
  std::string name;
  std::string params;
  std::string brief;
};

inline const std::vector<RegistryEntry>& vector_field_registry() {
  static const std::vector<RegistryEntry> entries{
      {"constant", "value = [c1, c2, c3], time_component = 0.0",
       "uniform four-vector field"},
      {"linear", "matrix = [9 row-major], offset = [3], time = [3]",
       "C = A x + offset + t * time"},
      {"rigid_rotation", "omega = [w1, w2, w3]", "v = omega x x"},
      {"shear", "rate = g, component = 1, gradient_axis = 2",
       "v[component] = rate * x[gradient_axis]"},
      {"radial", "rate = k", "v = k x"},
      {"corotating", "omega = [3], value = [3]",
       "spatially uniform vector rotating at omega"},
  };
  return entries;
}

inline const std::vector<RegistryEntry>& scalar_field_registry() {
  static const std::vector<RegistryEntry> entries{
      {"scalar_constant", "value = a", "uniform scalar"},
      {"scalar_time", "", "a = t"},
      {"scalar_coordinate", "axis = 1", "a = x^axis"},
      {"scalar_linear", "time = c0, space = [c1, c2, c3]", "a = c0 t + c . x"},
      {"scalar_wave", "wavevector = [3], frequency = f, amplitude = 1.0",
       "a = amplitude * sin(k . x - f t)"},
  };
  return entries;
}

inline const std::vector<RegistryEntry>& motion_registry() {
  static const std::vector<RegistryEntry> entries{
      {"identity", "", "x_hat = x"},
      {"uniform_translation", "velocity = [3]", "h = v t, Q = I"},
      {"uniform_acceleration", "acceleration = [3]", "h = a t^2 / 2, Q = I"},
      {"rotation", "axis = [3] (unit), rate = w", "Q = rotation about axis at rate w"},
      {"composite", "stages = [motion tables], applied first to last",
       "chained observer transformations"},
  };
  return entries;
}

}  // namespace fourkin
