#include "qdlab/oscillatory.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qdlab/quadrature.hpp"
#include "qdlab/special.hpp"

namespace qdlab {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr int kPointsPerPanel = 16;
// Floor on the panel count so the mollifier's steep boundary layers stay
// resolved even when the phase is slow (panel width <= support width / 12).
constexpr int kMinPanels = 12;

struct Support {
  double lo;
  double hi;
};

Support cutoff_support(const DyadicCutoff& cutoff) {
  const double r = cutoff.center;
  if (cutoff.sharp) return {r / std::sqrt(2.0), r * std::sqrt(2.0)};
  return {r / 2.0, 2.0 * r};
}

double max_phase_speed(const DyadicCutoff& cutoff, const DispersionParams& params) {
  // phi_eps' is increasing, so the largest slope sits at the support edge.
  return phi_eps_derivatives(cutoff_support(cutoff).hi, params).first;
}

double kernel(int d, double z) { return d == 2 ? bessel_j0(z) : sinc(z); }

}  // namespace

int required_quad_points(int d, double t, double x_abs, const DyadicCutoff& cutoff,
                         const DispersionParams& params) {
  if (d != 2 && d != 3)
    throw std::invalid_argument("required_quad_points: dimension must be 2 or 3");
  if (!(t >= 0.0) || !(x_abs >= 0.0))
    throw std::invalid_argument("required_quad_points: t and |x| must be nonnegative");
  const double needed = 8.0 * (t * max_phase_speed(cutoff, params) + x_abs) * cutoff.center;
  return static_cast<int>(std::ceil(needed));
}

OscEvaluator::OscEvaluator(int d, double t, double x_max, const DyadicCutoff& cutoff,
                           const DispersionParams& params)
    : d_(d), x_max_(x_max) {
  if (d != 2 && d != 3)
    throw std::invalid_argument("OscEvaluator: dimension must be 2 or 3");
  if (!(t >= 0.0)) throw std::invalid_argument("OscEvaluator: t must be nonnegative");
  if (!(x_max >= 0.0)) throw std::invalid_argument("OscEvaluator: x_max must be nonnegative");

  const int min_points = required_quad_points(d, t, x_max, cutoff, params);
  const int panels =
      std::max(kMinPanels, (min_points + kPointsPerPanel - 1) / kPointsPerPanel);
  const Support support = cutoff_support(cutoff);
  QuadratureRule rule =
      composite_gauss_legendre(kPointsPerPanel, panels, support.lo, support.hi);

  const double angular = d == 2 ? 2.0 * kPi : 4.0 * kPi;
  nodes_.resize(rule.size());
  amplitudes_.resize(rule.size());
  for (std::size_t j = 0; j < rule.size(); ++j) {
    const double r = rule.nodes[j];
    const double phase = t * phi_eps(r, params);
    const double radial = d == 2 ? r : r * r;
    nodes_[j] = r;
    amplitudes_[j] = angular * rule.weights[j] * cutoff(r) * radial *
                     std::complex<double>(std::cos(phase), std::sin(phase));
  }
}

std::complex<double> OscEvaluator::operator()(double x_abs) const {
  if (!(x_abs >= 0.0) || x_abs > x_max_ * (1.0 + 1e-12))
    throw std::invalid_argument("OscEvaluator: |x| outside the declared budget");
  std::complex<double> sum(0.0, 0.0);
  for (std::size_t j = 0; j < nodes_.size(); ++j)
    sum += amplitudes_[j] * kernel(d_, x_abs * nodes_[j]);
  return sum;
}

std::complex<double> osc_integral(const OscIntegralSpec& spec) {
  const int needed =
      required_quad_points(spec.d, spec.t, spec.x_abs, spec.cutoff, spec.params);
  if (spec.quad_points < needed)
    throw std::invalid_argument(
        "osc_integral: quad_points " + std::to_string(spec.quad_points) +
        " below the phase-resolution requirement " + std::to_string(needed));

  const int panels =
      std::max(kMinPanels, (spec.quad_points + kPointsPerPanel - 1) / kPointsPerPanel);
  const Support support = cutoff_support(spec.cutoff);
  QuadratureRule rule =
      composite_gauss_legendre(kPointsPerPanel, panels, support.lo, support.hi);

  const double angular = spec.d == 2 ? 2.0 * kPi : 4.0 * kPi;
  std::complex<double> sum(0.0, 0.0);
  for (std::size_t j = 0; j < rule.size(); ++j) {
    const double r = rule.nodes[j];
    const double phase = spec.t * phi_eps(r, spec.params);
    const double radial = spec.d == 2 ? r : r * r;
    sum += rule.weights[j] * spec.cutoff(r) * radial *
           kernel(spec.d, spec.x_abs * r) *
           std::complex<double>(std::cos(phase), std::sin(phase));
  }
  return angular * sum;
}

SupResult sup_over_x(int d, double t, const DyadicCutoff& cutoff,
                     const DispersionParams& params, int n_x) {
  if (n_x < 64) throw std::invalid_argument("sup_over_x: need at least 64 scan points");
  const double x_hi = 2.0 * t * max_phase_speed(cutoff, params);
  OscEvaluator eval(d, t, x_hi, cutoff, params);

  // Coarse scan.
  int best = 0;
  double best_val = -1.0;
  std::vector<double> xs(n_x);
  for (int i = 0; i < n_x; ++i) {
    xs[i] = x_hi * i / (n_x - 1);
    const double v = std::abs(eval(xs[i]));
    if (v > best_val) {
      best_val = v;
      best = i;
    }
  }

  // Golden-section refinement on the bracket around the coarse winner.
  double a = xs[std::max(0, best - 1)];
  double b = xs[std::min(n_x - 1, best + 1)];
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - invphi * (b - a);
  double dd = a + invphi * (b - a);
  double fc = std::abs(eval(c));
  double fd = std::abs(eval(dd));
  for (int iter = 0; iter < 80 && (b - a) > 1e-10 * std::max(x_hi, 1.0); ++iter) {
    if (fc > fd) {
      b = dd;
      dd = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = std::abs(eval(c));
    } else {
      a = c;
      c = dd;
      fc = fd;
      dd = a + invphi * (b - a);
      fd = std::abs(eval(dd));
    }
  }
  const double x_star = (a + b) / 2.0;
  const double f_star = std::abs(eval(x_star));
  if (f_star > best_val) return {f_star, x_star};
  return {best_val, xs[best]};
}

DecayFit decay_fit(const std::vector<std::pair<double, double>>& samples) {
  if (samples.size() < 8)
    throw std::invalid_argument("decay_fit: need at least 8 samples");
  double t_min = samples.front().first, t_max = samples.front().first;
  std::vector<double> ts, sups;
  ts.reserve(samples.size());
  sups.reserve(samples.size());
  for (const auto& [t, sup] : samples) {
    if (!(t > 0.0) || !(sup > 0.0))
      throw std::invalid_argument("decay_fit: samples must be positive");
    t_min = std::min(t_min, t);
    t_max = std::max(t_max, t);
    ts.push_back(t);
    sups.push_back(sup);
  }
  if (t_max < 10.0 * t_min * (1.0 - 1e-12))
    throw std::invalid_argument("decay_fit: samples must span at least a decade of t");
  return fit_loglog(ts, sups);
}

double eps_dispersive_check(int d, double t, const DyadicCutoff& cutoff,
                            const DispersionParams& params, double delta) {
  const double delta_max = (d - 2) / 2.0;
  if (!(delta >= 0.0) || delta > delta_max + 1e-12)
    throw std::invalid_argument("eps_dispersive_check: delta outside [0, (d-2)/2]");
  const SupResult sup = sup_over_x(d, t, cutoff, params, 128);
  const double u = params.eps * params.kappa * cutoff.center;
  const double m = u / std::sqrt(1.0 + u * u);
  return sup.sup * std::pow(t, d / 2.0) * std::pow(params.kappa, d / 2.0) /
         std::pow(m, delta);
}

double asymptotic_time_threshold(const DyadicCutoff& cutoff,
                                 const DispersionParams& params) {
  const double r = cutoff.center;
  const double curvature = phi_eps_derivatives(r, params).second;
  return 50.0 / (curvature * (r / 2.0) * (r / 2.0));
}

}  // namespace qdlab
