#include "qdlab/dispersion.hpp"

#include <cmath>
#include <stdexcept>

namespace qdlab {

DispersionParams::DispersionParams(double eps_, double kappa_) : eps(eps_), kappa(kappa_) {
  if (!(eps > 0.0)) throw std::invalid_argument("DispersionParams: eps must be > 0");
  if (!(kappa > 0.0)) throw std::invalid_argument("DispersionParams: kappa must be > 0");
}

BogoliubovParams::BogoliubovParams(double g_, double n_, double m_) : g(g_), n(n_), m(m_) {
  if (!(g > 0.0) || !(n > 0.0) || !(m > 0.0))
    throw std::invalid_argument("BogoliubovParams: g, n, m must all be > 0");
}

double phi(double r, double kappa) {
  if (r < 0.0) throw std::invalid_argument("phi: r must be >= 0");
  const double kr = kappa * r;
  return r * std::sqrt(1.0 + kr * kr);
}

double phi_eps(double xi_abs, const DispersionParams& params) {
  if (xi_abs < 0.0) throw std::invalid_argument("phi_eps: xi_abs must be >= 0");
  const double u = params.eps * params.kappa * xi_abs;
  return (xi_abs / params.eps) * std::sqrt(1.0 + u * u);
}

PhiDerivatives phi_derivatives(double r, double kappa) {
  if (!(r > 0.0)) throw std::invalid_argument("phi_derivatives: r must be > 0");
  const double k2r2 = kappa * kappa * r * r;
  const double root = std::sqrt(1.0 + k2r2);
  const double first = (1.0 + 2.0 * k2r2) / root;
  const double second = kappa * kappa * r * (3.0 + 2.0 * k2r2) / (root * root * root);
  return {first, second};
}

PhiDerivatives phi_eps_derivatives(double xi_abs, const DispersionParams& params) {
  // phi_eps(x) = eps^{-2} phi(eps x)  =>  phi_eps'(x) = eps^{-1} phi'(eps x),
  // phi_eps''(x) = phi''(eps x).
  const PhiDerivatives d = phi_derivatives(params.eps * xi_abs, params.kappa);
  return {d.first / params.eps, d.second};
}

double hessian_det(double r, double kappa, int d) {
  if (!(r > 0.0)) throw std::invalid_argument("hessian_det: r must be > 0");
  if (d != 2 && d != 3) throw std::invalid_argument("hessian_det: d must be 2 or 3");
  const PhiDerivatives der = phi_derivatives(r, kappa);
  const double slope = der.first / r;
  return (d == 2 ? slope : slope * slope) * der.second;
}

double h_bound_ratio(double r, const DispersionParams& params, int d) {
  const double kappa = params.kappa;
  const double h = hessian_det(r, kappa, d);
  const double kr = kappa * r;
  const double weight_base = kr / std::sqrt(1.0 + kr * kr);
  const double weight =
      std::pow(kappa, -0.5 * d) * std::pow(weight_base, 0.5 * (d - 2));
  return 1.0 / (std::sqrt(h) * weight);
}

double bogoliubov_c(double p, const BogoliubovParams& bp) {
  if (p < 0.0) throw std::invalid_argument("bogoliubov_c: p must be >= 0");
  const double sound2 = bp.g * bp.n / bp.m;
  const double kinetic = p * p / (2.0 * bp.m);
  return std::sqrt(sound2 * p * p + kinetic * kinetic);
}

FrequencyRegime regime_classify(double xi_abs, const DispersionParams& params,
                                double lo, double hi) {
  if (xi_abs < 0.0) throw std::invalid_argument("regime_classify: xi_abs must be >= 0");
  const double u = params.eps * params.kappa * xi_abs;
  if (u <= lo) return FrequencyRegime::WaveLike;
  if (u >= hi) return FrequencyRegime::SchroedingerLike;
  return FrequencyRegime::Transition;
}

std::string_view regime_name(FrequencyRegime regime) {
  switch (regime) {
    case FrequencyRegime::WaveLike: return "wave";
    case FrequencyRegime::Transition: return "transition";
    case FrequencyRegime::SchroedingerLike: return "schroedinger";
  }
  return "unknown";
}

}  // namespace qdlab
