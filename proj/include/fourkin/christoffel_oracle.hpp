#pragma once

#include <array>
#include <cmath>

#include "fourkin/finite_difference.hpp"
#include "fourkin/motion.hpp"
#include "fourkin/spacetime.hpp"

namespace fourkin {

// Full 4x4x4 array of connection coefficients, g[i][j][k] = Gamma^i_{jk}.
struct Gamma4 {
  std::array<std::array<std::array<double, 4>, 4>, 4> g{};

  double& operator()(int i, int j, int k) {
    return g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
  }
  double operator()(int i, int j, int k) const {
    return g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
  }
};

inline double max_abs_diff(const Gamma4& a, const Gamma4& b) {
  double r = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) r = std::max(r, std::fabs(a(i, j, k) - b(i, j, k)));
  return r;
}

// Expand the structured container into the full array; the entries not
// stored by Christoffel come out exactly zero.
inline Gamma4 expand(const Christoffel& c) {
  Gamma4 g;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) g(i, j, k) = c.entry(i, j, k);
  return g;
}

// Everything below differentiates the point maps numerically and never
// touches the analytic motion derivatives, so it can serve as an oracle
// for them.

namespace detail {

template <class Map>  // Map: SpacetimePoint -> SpacetimePoint
double map_component(const Map& f, const SpacetimePoint& p, int comp) {
  const SpacetimePoint q = f(p);
  return comp == 0 ? q.t : q.x[comp - 1];
}

template <class Map>
Mat4 fd_jacobian(const Map& f, const SpacetimePoint& p, double h) {
  Mat4 j;
  for (int i = 0; i < 4; ++i)
    for (int d = 0; d < 4; ++d) {
      j(i, d) = fd::central_first(
          [&](double u) { return map_component(f, p.shifted(d, u - p.coord(d)), i); },
          p.coord(d), h);
    }
  return j;
}

// Second partials of one map component with respect to coordinate pair (j, k).
template <class Map>
double fd_second(const Map& f, const SpacetimePoint& p, int comp, int j, int k, double h) {
  if (j == k) {
    return fd::central_second_richardson(
        [&](double u) { return map_component(f, p.shifted(j, u - p.coord(j)), comp); },
        p.coord(j), h);
  }
  return fd::mixed_second_richardson(
      [&](double u, double v) {
        return map_component(f, p.shifted(j, u - p.coord(j)).shifted(k, v - p.coord(k)), comp);
      },
      p.coord(j), p.coord(k), h);
}

}  // namespace detail

inline Mat4 fd_jacobian_forward(const Motion& m, const SpacetimePoint& p,
                                double h = fd::kFirstStep) {
  return detail::fd_jacobian([&](const SpacetimePoint& q) { return transform_point(m, q); }, p, h);
}

inline Mat4 fd_jacobian_inverse(const Motion& m, const SpacetimePoint& p_hat,
                                double h = fd::kFirstStep) {
  return detail::fd_jacobian(
      [&](const SpacetimePoint& q) { return inverse_transform_point(m, q); }, p_hat, h);
}

// First form: Gamma^i_{jk} = (d2 xhat^m / dx^j dx^k) (dx^i / dxhat^m),
// the inverse Jacobian taken at the image point.
inline Gamma4 fd_christoffel_first_form(const Motion& m, const SpacetimePoint& p,
                                        double h1 = fd::kFirstStep,
                                        double h2 = fd::kSecondStep) {
  const auto fwd = [&](const SpacetimePoint& q) { return transform_point(m, q); };
  const Mat4 jinv = fd_jacobian_inverse(m, transform_point(m, p), h1);
  Gamma4 out;
  for (int j = 0; j < 4; ++j)
    for (int k = j; k < 4; ++k) {
      std::array<double, 4> hess{};
      for (int comp = 0; comp < 4; ++comp) {
        hess[static_cast<std::size_t>(comp)] = detail::fd_second(fwd, p, comp, j, k, h2);
      }
      for (int i = 0; i < 4; ++i) {
        double s = 0.0;
        for (int mm = 0; mm < 4; ++mm) s += hess[static_cast<std::size_t>(mm)] * jinv(i, mm);
        out(i, j, k) = s;
        out(i, k, j) = s;
      }
    }
  return out;
}

// Second form: Gamma^i_{jk} = -(d2 x^i / dxhat^m dxhat^l)
//                              (dxhat^m / dx^j)(dxhat^l / dx^k),
// the inverse-map second partials taken at the image point.
inline Gamma4 fd_christoffel_second_form(const Motion& m, const SpacetimePoint& p,
                                         double h1 = fd::kFirstStep,
                                         double h2 = fd::kSecondStep) {
  const auto inv = [&](const SpacetimePoint& q) { return inverse_transform_point(m, q); };
  const SpacetimePoint p_hat = transform_point(m, p);
  const Mat4 jfwd = fd_jacobian_forward(m, p, h1);
  Gamma4 out;
  for (int i = 0; i < 4; ++i) {
    Mat4 hess;
    for (int mm = 0; mm < 4; ++mm)
      for (int l = mm; l < 4; ++l) {
        const double v = detail::fd_second(inv, p_hat, i, mm, l, h2);
        hess(mm, l) = v;
        hess(l, mm) = v;
      }
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) {
        double s = 0.0;
        for (int mm = 0; mm < 4; ++mm)
          for (int l = 0; l < 4; ++l) s += hess(mm, l) * jfwd(mm, j) * jfwd(l, k);
        out(i, j, k) = -s;
      }
  }
  return out;
}

}  // namespace fourkin
