#pragma once

// Least-squares line fits used by every rate-measurement experiment: a plain
// linear fit and a log-log variant for power laws.

#include <span>

namespace qdlab {

// Result of a rate fit. For power-law fits the slope is the measured decay
// exponent; `window_min`/`window_max` record the (untransformed) abscissa
// range that entered the fit. r_squared is clamped to [0, 1]; a constant
// ordinate (zero total variance) fits perfectly and reports 1.
struct DecayFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  double window_min = 0.0;
  double window_max = 0.0;
};

// Ordinary least squares y ~ slope * x + intercept. Needs >= 2 points and a
// non-degenerate x range.
DecayFit fit_linear(std::span<const double> x, std::span<const double> y);

// Power-law fit: least squares on (log x, log y); slope is the exponent.
// All x and y must be strictly positive.
DecayFit fit_loglog(std::span<const double> x, std::span<const double> y);

}  // namespace qdlab
