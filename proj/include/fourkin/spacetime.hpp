#pragma once

#include <array>
#include <cmath>

#include "fourkin/linalg.hpp"

namespace fourkin {

// An event (t, x) in a fixed coordinatization. Index 0 is the time slot,
// indices 1..3 the spatial slots.
struct SpacetimePoint {
  double t = 0.0;
  Vec3 x{};

  double coord(int i) const { return i == 0 ? t : x[i - 1]; }
  SpacetimePoint shifted(int i, double delta) const {
    SpacetimePoint p = *this;
    if (i == 0) p.t += delta; else p.x[i - 1] += delta;
    return p;
  }
};

// A four-vector (time component, spacelike 3-vector). Spacelike means the
// time component is exactly zero.
struct FourVector {
  double c0 = 0.0;
  Vec3 c{};

  bool spacelike() const { return c0 == 0.0; }
  double component(int i) const { return i == 0 ? c0 : c[i - 1]; }
};

inline FourVector operator+(const FourVector& a, const FourVector& b) {
  return {a.c0 + b.c0, a.c + b.c};
}
inline FourVector operator-(const FourVector& a, const FourVector& b) {
  return {a.c0 - b.c0, a.c - b.c};
}
inline FourVector operator*(double s, const FourVector& a) { return {s * a.c0, s * a.c}; }

inline double max_abs(const FourVector& a) {
  return std::max(std::fabs(a.c0), max_abs(a.c));
}

inline double norm(const FourVector& a) {
  return std::sqrt(a.c0 * a.c0 + dot(a.c, a.c));
}

// Jacobian of a time-dependent Euclidean point transformation. The timelike
// row is (1, 0, 0, 0) by construction, so only the remaining blocks are
// stored: xt holds the time derivatives of the spatial image, xx the spatial
// block.
struct Jacobian4 {
  Vec3 xt{};
  Mat3 xx = Mat3::identity();

  static Jacobian4 identity() { return {}; }

  double entry(int i, int j) const {
    if (i == 0) return j == 0 ? 1.0 : 0.0;
    if (j == 0) return xt[i - 1];
    return xx(i - 1, j - 1);
  }

  Mat4 as_mat4() const {
    Mat4 r;
    r(0, 0) = 1.0;
    for (int a = 0; a < 3; ++a) {
      r(a + 1, 0) = xt[a];
      for (int b = 0; b < 3; ++b) r(a + 1, b + 1) = xx(a, b);
    }
    return r;
  }
};

// Block product; the set of such Jacobians is closed under composition.
inline Jacobian4 operator*(const Jacobian4& a, const Jacobian4& b) {
  return {a.xt + a.xx * b.xt, a.xx * b.xx};
}

// Contraction J^i_j C^j. The time component passes through unchanged.
inline FourVector transform_four_vector(const Jacobian4& J, const FourVector& C) {
  return {C.c0, C.c0 * J.xt + J.xx * C.c};
}

// Connection coefficients of a Euclidean observer transformation. Only the
// (time,time) column g00 and the mixed block g0b are ever nonzero; the
// timelike row and the purely spatial block vanish identically and are not
// stored. Symmetry in the lower index pair holds because the single stored
// block serves both orderings.
struct Christoffel {
  Vec3 g00{};   // component a of Gamma^a_{00}
  Mat3 g0b{};   // Gamma^a_{0b} = Gamma^a_{b0}

  static Christoffel zero() { return {}; }

  double entry(int i, int j, int k) const {
    if (i == 0) return 0.0;
    if (j == 0 && k == 0) return g00[i - 1];
    if (j == 0) return g0b(i - 1, k - 1);
    if (k == 0) return g0b(i - 1, j - 1);
    return 0.0;
  }
};

// Entry (i, j) holds the j-th derivative of component i, the time slot
// first: partial derivatives as produced by fields, covariant derivatives
// as produced by the calculus operations.
using MixedTensor4 = Mat4;

}  // namespace fourkin
