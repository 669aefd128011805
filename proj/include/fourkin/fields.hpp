#pragma once

#include <array>
#include <functional>
#include <utility>

#include "fourkin/finite_difference.hpp"
#include "fourkin/motion.hpp"
#include "fourkin/spacetime.hpp"

namespace fourkin {

// Scalar field on spacetime. The gradient is analytic when supplied,
// otherwise central differences with fd_step.
struct ScalarField {
  std::function<double(const SpacetimePoint&)> value;
  std::function<std::array<double, 4>(const SpacetimePoint&)> gradient{};
  double fd_step = fd::kFirstStep;

  double operator()(const SpacetimePoint& p) const { return value(p); }

  std::array<double, 4> gradient_at(const SpacetimePoint& p) const {
    if (gradient) return gradient(p);
    std::array<double, 4> g{};
    for (int d = 0; d < 4; ++d) {
      g[static_cast<std::size_t>(d)] = fd::central_first(
          [&](double u) { return value(p.shifted(d, u - p.coord(d))); }, p.coord(d), fd_step);
    }
    return g;
  }
};

// Four-vector field with partial-derivative access. partials(p)(i, j) is
// the j-th partial of component i (derivative index second).
struct VectorField4 {
  std::function<FourVector(const SpacetimePoint&)> value;
  std::function<MixedTensor4(const SpacetimePoint&)> partials{};
  double fd_step = fd::kFirstStep;

  FourVector operator()(const SpacetimePoint& p) const { return value(p); }

  MixedTensor4 partials_at(const SpacetimePoint& p) const {
    if (partials) return partials(p);
    MixedTensor4 d;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        d(i, j) = fd::central_first(
            [&](double u) {
              return value(p.shifted(j, u - p.coord(j))).component(i);
            },
            p.coord(j), fd_step);
      }
    return d;
  }
};

// A continuum velocity field v together with the four-velocity V = (1, v)
// it generates. Stored as the spacelike field (0, v); the partials of
// (0, v) and of (1, v) coincide, so one set serves both.
struct VelocityField {
  VectorField4 spatial;

  Vec3 operator()(const SpacetimePoint& p) const { return spatial.value(p).c; }

  MixedTensor4 partials_at(const SpacetimePoint& p) const { return spatial.partials_at(p); }
};

// V = (1, v(p)); the time component is exactly one.
inline FourVector four_velocity(const VelocityField& vf, const SpacetimePoint& p) {
  return {1.0, vf(p)};
}

// The four-velocity as a field, sharing the velocity's partials exactly.
inline VectorField4 four_velocity_field(const VelocityField& vf) {
  VectorField4 f;
  const VectorField4 spatial = vf.spatial;
  f.value = [spatial](const SpacetimePoint& p) { return FourVector{1.0, spatial.value(p).c}; };
  if (spatial.partials) f.partials = spatial.partials;
  f.fd_step = spatial.fd_step;
  return f;
}

// L(i, j) = dv^i/dx^j, the spatial block of the velocity partials.
inline Mat3 velocity_gradient(const VelocityField& vf, const SpacetimePoint& p) {
  const MixedTensor4 d = vf.partials_at(p);
  Mat3 l;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) l(a, b) = d(a + 1, b + 1);
  return l;
}

// The field as seen through the motion: value at p_hat is the Jacobian
// applied to the value at the preimage. Partials of the result come from
// finite differences over the new evaluator.
inline VectorField4 pushforward_field(const Motion& m, const VectorField4& c) {
  VectorField4 out;
  out.value = [m, c](const SpacetimePoint& p_hat) {
    const SpacetimePoint p = inverse_transform_point(m, p_hat);
    return transform_four_vector(jacobian_hat(m, p), c.value(p));
  };
  out.fd_step = c.fd_step;
  return out;
}

// Velocity field of the transformed continuum: the spacelike part of the
// pushed-forward four-velocity. Its four-velocity time component stays
// exactly one because the Jacobian's timelike row is (1, 0).
inline VelocityField pushforward_velocity(const Motion& m, const VelocityField& vf) {
  VectorField4 v_hat;
  const VectorField4 spatial = vf.spatial;
  v_hat.value = [m, spatial](const SpacetimePoint& p_hat) {
    const SpacetimePoint p = inverse_transform_point(m, p_hat);
    const FourVector vel{1.0, spatial.value(p).c};
    return FourVector{0.0, transform_four_vector(jacobian_hat(m, p), vel).c};
  };
  v_hat.fd_step = spatial.fd_step;
  return VelocityField{v_hat};
}

}  // namespace fourkin
