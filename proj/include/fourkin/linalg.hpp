#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <initializer_list>

#include "fourkin/errors.hpp"

namespace fourkin {

struct Vec3 {
  std::array<double, 3> v{0.0, 0.0, 0.0};

  constexpr Vec3() = default;
  constexpr Vec3(double a, double b, double c) : v{a, b, c} {}

  constexpr double& operator[](int i) { return v[static_cast<std::size_t>(i)]; }
  constexpr double operator[](int i) const { return v[static_cast<std::size_t>(i)]; }

  static constexpr Vec3 zero() { return {}; }

  Vec3& operator+=(const Vec3& o) {
    v[0] += o.v[0]; v[1] += o.v[1]; v[2] += o.v[2];
    return *this;
  }
  Vec3& operator-=(const Vec3& o) {
    v[0] -= o.v[0]; v[1] -= o.v[1]; v[2] -= o.v[2];
    return *this;
  }
  Vec3& operator*=(double s) {
    v[0] *= s; v[1] *= s; v[2] *= s;
    return *this;
  }
};

constexpr Vec3 operator+(Vec3 a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
constexpr Vec3 operator-(Vec3 a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
constexpr Vec3 operator-(const Vec3& a) { return {-a[0], -a[1], -a[2]}; }
constexpr Vec3 operator*(double s, const Vec3& a) { return {s * a[0], s * a[1], s * a[2]}; }
constexpr Vec3 operator*(const Vec3& a, double s) { return s * a; }

constexpr double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1],
          a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

inline double max_abs(const Vec3& a) {
  return std::max({std::fabs(a[0]), std::fabs(a[1]), std::fabs(a[2])});
}

// Row-major 3x3 matrix.
struct Mat3 {
  std::array<double, 9> m{};

  constexpr Mat3() = default;
  constexpr Mat3(double a00, double a01, double a02,
                 double a10, double a11, double a12,
                 double a20, double a21, double a22)
      : m{a00, a01, a02, a10, a11, a12, a20, a21, a22} {}

  constexpr double& operator()(int r, int c) { return m[static_cast<std::size_t>(3 * r + c)]; }
  constexpr double operator()(int r, int c) const { return m[static_cast<std::size_t>(3 * r + c)]; }

  static constexpr Mat3 identity() {
    return {1, 0, 0,
            0, 1, 0,
            0, 0, 1};
  }
  static constexpr Mat3 zero() { return {}; }

  constexpr Mat3 transpose() const {
    return {m[0], m[3], m[6],
            m[1], m[4], m[7],
            m[2], m[5], m[8]};
  }

  constexpr double det() const {
    return m[0] * (m[4] * m[8] - m[5] * m[7])
         - m[1] * (m[3] * m[8] - m[5] * m[6])
         + m[2] * (m[3] * m[7] - m[4] * m[6]);
  }

  constexpr Vec3 row(int r) const { return {(*this)(r, 0), (*this)(r, 1), (*this)(r, 2)}; }
  constexpr Vec3 col(int c) const { return {(*this)(0, c), (*this)(1, c), (*this)(2, c)}; }
};

constexpr Mat3 operator+(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (std::size_t i = 0; i < 9; ++i) r.m[i] = a.m[i] + b.m[i];
  return r;
}

constexpr Mat3 operator-(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (std::size_t i = 0; i < 9; ++i) r.m[i] = a.m[i] - b.m[i];
  return r;
}

constexpr Mat3 operator*(double s, const Mat3& a) {
  Mat3 r;
  for (std::size_t i = 0; i < 9; ++i) r.m[i] = s * a.m[i];
  return r;
}
constexpr Mat3 operator*(const Mat3& a, double s) { return s * a; }

constexpr Vec3 operator*(const Mat3& a, const Vec3& x) {
  return {a(0, 0) * x[0] + a(0, 1) * x[1] + a(0, 2) * x[2],
          a(1, 0) * x[0] + a(1, 1) * x[1] + a(1, 2) * x[2],
          a(2, 0) * x[0] + a(2, 1) * x[1] + a(2, 2) * x[2]};
}

constexpr Mat3 operator*(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j) + a(i, 2) * b(2, j);
  return r;
}

inline double max_abs(const Mat3& a) {
  double r = 0.0;
  for (double x : a.m) r = std::max(r, std::fabs(x));
  return r;
}

// Inverse via the adjugate. Throws SingularFrame at |det| <= kSingularDetThreshold.
inline Mat3 inverse(const Mat3& a) {
  const double d = a.det();
  if (std::fabs(d) <= kSingularDetThreshold) {
    throw SingularFrame("matrix inverse: |det| <= 1e-12");
  }
  const double id = 1.0 / d;
  Mat3 r;
  r(0, 0) = (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) * id;
  r(0, 1) = (a(0, 2) * a(2, 1) - a(0, 1) * a(2, 2)) * id;
  r(0, 2) = (a(0, 1) * a(1, 2) - a(0, 2) * a(1, 1)) * id;
  r(1, 0) = (a(1, 2) * a(2, 0) - a(1, 0) * a(2, 2)) * id;
  r(1, 1) = (a(0, 0) * a(2, 2) - a(0, 2) * a(2, 0)) * id;
  r(1, 2) = (a(0, 2) * a(1, 0) - a(0, 0) * a(1, 2)) * id;
  r(2, 0) = (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0)) * id;
  r(2, 1) = (a(0, 1) * a(2, 0) - a(0, 0) * a(2, 1)) * id;
  r(2, 2) = (a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0)) * id;
  return r;
}

// skew(w) * x == cross(w, x)
constexpr Mat3 skew(const Vec3& w) {
  return {0, -w[2], w[1],
          w[2], 0, -w[0],
          -w[1], w[0], 0};
}

// Rotation by `angle` about the unit vector `axis` (Rodrigues).
inline Mat3 rotation_about(const Vec3& axis, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  const Mat3 s_ax = skew(axis);
  return Mat3::identity() + s * s_ax + (1.0 - c) * (s_ax * s_ax);
}

// Row-major 4x4 matrix; indices run 0..3 with 0 the time slot.
struct Mat4 {
  std::array<double, 16> m{};

  constexpr double& operator()(int r, int c) { return m[static_cast<std::size_t>(4 * r + c)]; }
  constexpr double operator()(int r, int c) const { return m[static_cast<std::size_t>(4 * r + c)]; }

  static constexpr Mat4 identity() {
    Mat4 r;
    r(0, 0) = r(1, 1) = r(2, 2) = r(3, 3) = 1.0;
    return r;
  }
  static constexpr Mat4 zero() { return {}; }
};

constexpr Mat4 operator*(const Mat4& a, const Mat4& b) {
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      double s = 0.0;
      for (int k = 0; k < 4; ++k) s += a(i, k) * b(k, j);
      r(i, j) = s;
    }
  return r;
}

constexpr Mat4 operator-(const Mat4& a, const Mat4& b) {
  Mat4 r;
  for (std::size_t i = 0; i < 16; ++i) r.m[i] = a.m[i] - b.m[i];
  return r;
}

inline double max_abs(const Mat4& a) {
  double r = 0.0;
  for (double x : a.m) r = std::max(r, std::fabs(x));
  return r;
}

}  // namespace fourkin
