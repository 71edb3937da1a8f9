#include "qdlab/fit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace qdlab {

DecayFit fit_linear(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("fit_linear: size mismatch");
  const std::size_t n = x.size();
  if (n < 2) throw std::invalid_argument("fit_linear: need at least 2 points");

  double mean_x = 0.0;
  double mean_y = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mean_x += x[i];
    mean_y += y[i];
  }
  mean_x /= n;
  mean_y /= n;

  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mean_x;
    const double dy = y[i] - mean_y;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (!(sxx > 0.0)) throw std::invalid_argument("fit_linear: degenerate abscissa range");

  DecayFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = mean_y - fit.slope * mean_x;
  if (syy > 0.0) {
    double ss_res = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double r = y[i] - (fit.slope * x[i] + fit.intercept);
      ss_res += r * r;
    }
    fit.r_squared = std::clamp(1.0 - ss_res / syy, 0.0, 1.0);
  } else {
    fit.r_squared = 1.0;  // constant ordinate: the flat line explains everything
  }
  const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
  fit.window_min = *lo;
  fit.window_max = *hi;
  return fit;
}

DecayFit fit_loglog(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("fit_loglog: size mismatch");
  std::vector<double> lx(x.size());
  std::vector<double> ly(y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0))
      throw std::invalid_argument("fit_loglog: inputs must be strictly positive");
    lx[i] = std::log(x[i]);
    ly[i] = std::log(y[i]);
  }
  DecayFit fit = fit_linear(lx, ly);
  const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
  fit.window_min = *lo;
  fit.window_max = *hi;
  return fit;
}

}  // namespace qdlab
