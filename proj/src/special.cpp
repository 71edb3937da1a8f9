#include "qdlab/special.hpp"

#include <cmath>
#include <numbers>

namespace qdlab {

namespace {

// Power series J0(z) = sum_k (-1)^k (z^2/4)^k / (k!)^2. At the split point
// z = 8 the largest term has magnitude ~1e2, so cancellation costs ~3 decimal
// digits; still comfortably inside the accuracy budget.
double j0_series(double z) {
  const double q = 0.25 * z * z;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k <= 48; ++k) {
    term *= -q / (static_cast<double>(k) * k);
    sum += term;
    if (std::abs(term) < 1e-18) break;
  }
  return sum;
}

// Hankel expansion J0(z) ~ sqrt(2/(pi z)) [cos(w) P(z) - sin(w) Q(z)],
// w = z - pi/4, with coefficients a_{k+1} = a_k * (-(2k+1)^2) / (8(k+1)).
// Terms are added while they keep shrinking (optimal truncation).
double j0_asymptotic(double z) {
  const double w = z - 0.25 * std::numbers::pi;
  double p_sum = 0.0;
  double q_sum = 0.0;
  double t = 1.0;  // a_k / z^k, signed
  double prev_mag = HUGE_VAL;
  for (int k = 0; k < 40; ++k) {
    const double mag = std::abs(t);
    if (mag >= prev_mag) break;
    const double sign = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
    if (k % 2 == 0) {
      p_sum += sign * t;
    } else {
      q_sum += sign * t;
    }
    if (mag < 1e-18) break;
    prev_mag = mag;
    const double odd = 2.0 * k + 1.0;
    t *= -(odd * odd) / (8.0 * (k + 1) * z);
  }
  return std::sqrt(2.0 / (std::numbers::pi * z)) * (std::cos(w) * p_sum - std::sin(w) * q_sum);
}

}  // namespace

double bessel_j0(double z) {
  const double az = std::abs(z);
  return az < 8.0 ? j0_series(az) : j0_asymptotic(az);
}

double sinc(double x) {
  const double ax = std::abs(x);
  if (ax < 1e-4) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sin(x) / x;
}

}  // namespace qdlab
