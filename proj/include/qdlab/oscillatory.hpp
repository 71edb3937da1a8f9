#pragma once
// Direct evaluation of the band-localized oscillatory integral
//
//   I(t, x) = integral over R^d of e^{i t phi_eps(|xi|) + i x.xi} chi(|xi|) dxi
//
// by radial reduction: the angular integral collapses to a Bessel J0 kernel
// in two dimensions and a sinc kernel in three, leaving a one-dimensional
// integral over the cutoff support handled by composite Gauss-Legendre
// panels.  A resolution rule ties the node count to the total phase sweep so
// under-resolved (aliased) evaluations are refused rather than returned.
// All reductions run in a fixed order, so results are reproducible bit for
// bit for a given spec.

#include <complex>
#include <utility>
#include <vector>

#include "qdlab/cutoff.hpp"
#include "qdlab/dispersion.hpp"
#include "qdlab/fit.hpp"

namespace qdlab {

// One integral evaluation request.  x enters through |x| only (the integral
// is radially symmetric in x).
struct OscIntegralSpec {
  int d = 2;
  double t = 0.0;
  double x_abs = 0.0;
  DyadicCutoff cutoff{1.0};
  DispersionParams params{1.0, 1.0};
  int quad_points = 0;
};

// Minimum node count for (t, x_abs): 8 * (t * max|phi_eps'| + |x|) * R, the
// phase-resolution rule.  max|phi_eps'| is attained at the upper support edge.
int required_quad_points(int d, double t, double x_abs, const DyadicCutoff& cutoff,
                         const DispersionParams& params);

// Evaluates the integral for one spec.  Throws std::invalid_argument if the
// spec violates the resolution rule (quad_points too small for its t, x).
std::complex<double> osc_integral(const OscIntegralSpec& spec);

// Batched evaluator for scanning many x at fixed t: the radial nodes, weights,
// cutoff values, and phase factors are folded into one complex amplitude per
// node up front, so each x evaluation costs one kernel call per node.  The
// node count is chosen from the resolution rule for the largest |x| the
// evaluator is declared for (x_max).
class OscEvaluator {
 public:
  OscEvaluator(int d, double t, double x_max, const DyadicCutoff& cutoff,
               const DispersionParams& params);

  // |x| must stay within the declared budget; larger values are refused.
  std::complex<double> operator()(double x_abs) const;

  int points() const { return static_cast<int>(nodes_.size()); }
  double x_max() const { return x_max_; }

 private:
  int d_ = 2;
  double x_max_ = 0.0;
  std::vector<double> nodes_;
  std::vector<std::complex<double>> amplitudes_;
};

struct SupResult {
  double sup = 0.0;
  double argmax_x = 0.0;
};

// Scans |x| over [0, 2 t phi_eps'(2R)] — the window containing every
// stationary point of the phase — with n_x coarse samples, then refines the
// best bracket by golden-section search.  Requires n_x >= 64.
SupResult sup_over_x(int d, double t, const DyadicCutoff& cutoff,
                     const DispersionParams& params, int n_x);

// Least-squares power-law fit of sup-decay samples (t, sup): a line through
// (log t, log sup).  Requires at least 8 samples spanning a decade of t and
// positive values throughout.
DecayFit decay_fit(const std::vector<std::pair<double, double>>& samples);

// A fit is trustworthy for rate claims only when the line explains the data.
constexpr double kCleanFitRSquared = 0.99;
inline bool is_clean_fit(const DecayFit& fit) {
  return fit.r_squared >= kCleanFitRSquared;
}

// Normalized decay ratio sup(t) * t^{d/2} * kappa^{d/2} / m(eps kappa R)^delta
// with m(u) = u / sqrt(1 + u^2): bounded ratios over (t, eps, R) sweeps are
// the low-frequency dispersive gain in measurable form.  Requires
// delta in [0, (d-2)/2].
double eps_dispersive_check(int d, double t, const DyadicCutoff& cutoff,
                            const DispersionParams& params, double delta);

// Smallest t for which the phase varies by >= 50 radians across the block
// (t * phi_eps''(R) * (R/2)^2 >= 50); below it, stationary-phase asymptotics
// have not set in and rate fits should be labeled pre-asymptotic.
double asymptotic_time_threshold(const DyadicCutoff& cutoff,
                                 const DispersionParams& params);

}  // namespace qdlab
