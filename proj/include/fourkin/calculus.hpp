#pragma once

#include "fourkin/errors.hpp"
#include "fourkin/fields.hpp"
#include "fourkin/spacetime.hpp"

namespace fourkin {

// D_j C^i = d_j C^i + Gamma^i_{jk} C^k, written out against the structural
// zeros of the connection: the timelike row needs no correction, the
// spatial rows pick up g00 and the angular-velocity block only through
// the j = 0 column and the C^0 component.
inline MixedTensor4 covariant_derivative(const VectorField4& c, const Christoffel& g,
                                         const SpacetimePoint& p) {
  MixedTensor4 d = c.partials_at(p);
  const FourVector cv = c.value(p);
  const Vec3 omega_c = g.g0b * cv.c;
  for (int a = 0; a < 3; ++a) {
    d(a + 1, 0) += g.g00[a] * cv.c0 + omega_c[a];
    for (int b = 0; b < 3; ++b) d(a + 1, b + 1) += g.g0b(a, b) * cv.c0;
  }
  return d;
}

// D_V a = (d_0 + v . grad) a.
inline double material_derivative_scalar(const ScalarField& a, const VelocityField& vf,
                                         const SpacetimePoint& p) {
  const auto grad = a.gradient_at(p);
  const Vec3 v = vf(p);
  return grad[0] + v[0] * grad[1] + v[1] * grad[2] + v[2] * grad[3];
}

// (D_V C)^i = V^j D_j C^i with V = (1, v). For spacelike C this is
// (d_0 + v . grad + Omega) C; a nonzero C^0 adds C^0 (g00 + Omega v) to the
// spacelike part and advects C^0 in the time slot.
inline FourVector material_derivative(const VectorField4& c, const VelocityField& vf,
                                      const Christoffel& g, const SpacetimePoint& p) {
  const MixedTensor4 d = c.partials_at(p);
  const FourVector cv = c.value(p);
  const Vec3 v = vf(p);
  FourVector out;
  out.c0 = d(0, 0) + v[0] * d(0, 1) + v[1] * d(0, 2) + v[2] * d(0, 3);
  const Vec3 omega_c = g.g0b * cv.c;
  const Vec3 omega_v = g.g0b * v;
  for (int a = 0; a < 3; ++a) {
    out.c[a] = d(a + 1, 0) + v[0] * d(a + 1, 1) + v[1] * d(a + 1, 2) + v[2] * d(a + 1, 3)
             + omega_c[a] + cv.c0 * (g.g00[a] + omega_v[a]);
  }
  return out;
}

// (d_0 + v . grad) C componentwise, with no connection terms. This is the
// textbook comoving rate; it is kept as the known non-objective baseline.
inline FourVector naive_rate(const VectorField4& c, const VelocityField& vf,
                             const SpacetimePoint& p) {
  const MixedTensor4 d = c.partials_at(p);
  const Vec3 v = vf(p);
  FourVector out;
  out.c0 = d(0, 0) + v[0] * d(0, 1) + v[1] * d(0, 2) + v[2] * d(0, 3);
  for (int a = 0; a < 3; ++a) {
    out.c[a] = d(a + 1, 0) + v[0] * d(a + 1, 1) + v[1] * d(a + 1, 2) + v[2] * d(a + 1, 3);
  }
  return out;
}

// V^j d_j C^i - C^j d_j V^i, partial derivatives only. For spacelike C the
// spacelike part reduces to (d_0 + v . grad) C - L C. Feeding the
// generating four-velocity back in gives exactly zero.
inline FourVector upper_convected(const VectorField4& c, const VelocityField& vf,
                                  const SpacetimePoint& p) {
  const MixedTensor4 dc = c.partials_at(p);
  const MixedTensor4 dv = vf.partials_at(p);
  const FourVector cv = c.value(p);
  const FourVector vel{1.0, vf(p)};
  FourVector out;
  for (int i = 0; i < 4; ++i) {
    double s = 0.0;
    for (int j = 0; j < 4; ++j) {
      s += vel.component(j) * dc(i, j) - cv.component(j) * dv(i, j);
    }
    if (i == 0) out.c0 = s; else out.c[i - 1] = s;
  }
  return out;
}

// The same bracket computed through covariant derivatives. The connection
// contributions cancel by the symmetry of its lower indices, so this must
// agree with upper_convected to rounding.
inline FourVector upper_convected_via_christoffel(const VectorField4& c, const VelocityField& vf,
                                                  const Christoffel& g, const SpacetimePoint& p) {
  const MixedTensor4 dc = covariant_derivative(c, g, p);
  const MixedTensor4 dv = covariant_derivative(four_velocity_field(vf), g, p);
  const FourVector cv = c.value(p);
  const FourVector vel{1.0, vf(p)};
  FourVector out;
  for (int i = 0; i < 4; ++i) {
    double s = 0.0;
    for (int j = 0; j < 4; ++j) {
      s += vel.component(j) * dc(i, j) - cv.component(j) * dv(i, j);
    }
    if (i == 0) out.c0 = s; else out.c[i - 1] = s;
  }
  return out;
}

namespace detail {

// Advective part (d_0 + v . grad) of the spacelike rows.
inline Vec3 advected_spacelike(const VectorField4& c, const Vec3& v, const SpacetimePoint& p) {
  const MixedTensor4 d = c.partials_at(p);
  Vec3 out;
  for (int a = 0; a < 3; ++a) {
    out[a] = d(a + 1, 0) + v[0] * d(a + 1, 1) + v[1] * d(a + 1, 2) + v[2] * d(a + 1, 3);
  }
  return out;
}

inline void require_spacelike(const VectorField4& c, const SpacetimePoint& p, const char* op) {
  if (c.value(p).c0 != 0.0) {
    throw NotSpacelike(std::string(op) + ": field has a nonzero time component");
  }
}

}  // namespace detail

// (d_0 + v . grad) C + L^T C on spacelike vectors.
inline FourVector lower_convected(const VectorField4& c, const VelocityField& vf,
                                  const SpacetimePoint& p) {
  detail::require_spacelike(c, p, "lower_convected");
  const Vec3 v = vf(p);
  const Mat3 lt = velocity_gradient(vf, p).transpose();
  return {0.0, detail::advected_spacelike(c, v, p) + lt * c.value(p).c};
}

// (d_0 + v . grad) C - W C with the spin W = (L - L^T)/2; pointwise the
// mean of the two convected rates.
inline FourVector jaumann(const VectorField4& c, const VelocityField& vf,
                          const SpacetimePoint& p) {
  detail::require_spacelike(c, p, "jaumann");
  const Vec3 v = vf(p);
  const Mat3 l = velocity_gradient(vf, p);
  const Mat3 w = 0.5 * (l - l.transpose());
  return {0.0, detail::advected_spacelike(c, v, p) - w * c.value(p).c};
}

}  // namespace fourkin
