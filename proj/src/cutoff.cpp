#include "qdlab/cutoff.hpp"

#include <cmath>
#include <stdexcept>

namespace qdlab {

namespace {

double mollifier(double x) { return x > 0.0 ? std::exp(-1.0 / x) : 0.0; }

}  // namespace

double smooth_step(double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double a = mollifier(x);
  const double b = mollifier(1.0 - x);
  return a / (a + b);
}

double ladder_eta(double u) { return 1.0 - smooth_step(u - 1.0); }

double chi_profile(double u) { return ladder_eta(u) - ladder_eta(2.0 * u); }

const std::array<double, 5>& chi_derivative_suprema() {
  // sup |chi^(m)|, m = 1..5, measured by central finite differences on a fine
  // grid over [0.45, 2.05] and rounded up ~10%.
  static const std::array<double, 5> suprema = {4.4, 44.0, 975.0, 40100.0, 2.7e6};
  return suprema;
}

DyadicCutoff::DyadicCutoff(double center_, bool sharp_)
    : center(center_), sharp(sharp_), derivative_constants{} {
  if (!(center > 0.0)) throw std::invalid_argument("DyadicCutoff: center must be > 0");
  if (!sharp) {
    const std::array<double, 5>& m = chi_derivative_suprema();
    for (int k = 0; k < 5; ++k) derivative_constants[k] = m[k] / center;
  }
}

double DyadicCutoff::operator()(double r) const {
  if (sharp) {
    constexpr double inv_sqrt2 = 0.7071067811865476;
    constexpr double sqrt2 = 1.4142135623730951;
    return (r >= center * inv_sqrt2 && r < center * sqrt2) ? 1.0 : 0.0;
  }
  return chi_profile(r / center);
}

}  // namespace qdlab
