#pragma once

#include <cmath>

#include "fourkin/linalg.hpp"

namespace fourkin::testing {

// Matrix exponential by scaling and squaring over a Taylor series. Plenty
// accurate for the moderate matrices the flow tests use.
inline Mat3 expm(const Mat3& a) {
  double scale = max_abs(a);
  int squarings = 0;
  while (scale > 0.5) {
    scale *= 0.5;
    ++squarings;
  }
  const double factor = std::ldexp(1.0, -squarings);
  const Mat3 b = factor * a;

  Mat3 result = Mat3::identity();
  Mat3 term = Mat3::identity();
  for (int k = 1; k <= 20; ++k) {
    term = (1.0 / k) * (term * b);
    result = result + term;
  }
  for (int k = 0; k < squarings; ++k) result = result * result;
  return result;
}

}  // namespace fourkin::testing
