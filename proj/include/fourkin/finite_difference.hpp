#pragma once

#include <array>
#include <utility>

namespace fourkin {
namespace fd {

// Default step for first derivatives.
inline constexpr double kFirstStep = 1e-5;

// Base step for second derivatives, refined once by Richardson
// extrapolation. Second differences divide by step^2, so the step is kept
// well above the first-derivative one to stay clear of cancellation noise.
inline constexpr double kSecondStep = 1e-3;

template <class F>
double central_first(F&& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

template <class F>
double central_second(F&& f, double x, double h) {
  return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

// One Richardson level over the three-point second difference: exact
// through fifth order in h.
template <class F>
double central_second_richardson(F&& f, double x, double h) {
  const double coarse = central_second(f, x, h);
  const double fine = central_second(f, x, 0.5 * h);
  return (4.0 * fine - coarse) / 3.0;
}

// Mixed partial d2f/dxdy via the four-point cross stencil.
template <class F>
double mixed_second(F&& f, double x, double y, double h) {
  return (f(x + h, y + h) - f(x + h, y - h) - f(x - h, y + h) + f(x - h, y - h)) /
         (4.0 * h * h);
}

template <class F>
double mixed_second_richardson(F&& f, double x, double y, double h) {
  const double coarse = mixed_second(f, x, y, h);
  const double fine = mixed_second(f, x, y, 0.5 * h);
  return (4.0 * fine - coarse) / 3.0;
}

// First derivative at the first of five equally spaced samples, one-sided,
// fourth order. Used where only forward samples exist.
inline double one_sided_first(const std::array<double, 5>& f, double h) {
  return (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] - 3.0 * f[4]) /
         (12.0 * h);
}

}  // namespace fd
}  // namespace fourkin
