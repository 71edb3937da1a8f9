#pragma once

// Scalar functions of the radial frequency: the acoustic symbol phi and its
// rescaled form phi_eps, closed-form derivatives, the radial Hessian
// determinant with its bound ratio, the Bogoliubov group law c(p), and a
// coarse classification of the frequency regime.

#include <string_view>

namespace qdlab {

// Pair (eps, kappa) fixing the symbol phi_eps and every operator built on it.
// eps plays the role of a scaled healing length (equivalently a Mach number),
// kappa the capillarity coefficient. Both must be strictly positive: the
// kappa -> 0 limit degenerates to a pure wave symbol and is rejected at
// construction rather than silently producing a different model.
struct DispersionParams {
  double eps;
  double kappa;

  DispersionParams(double eps_, double kappa_);
};

// Parameters (g, n, m) of the Bogoliubov law for a weakly interacting
// condensate: interaction strength, particle density, particle mass.
struct BogoliubovParams {
  double g;
  double n;
  double m;

  BogoliubovParams(double g_, double n_, double m_);
};

// phi(r) = r * sqrt(1 + kappa^2 r^2); strictly increasing and strictly
// convex on (0, inf). Rejects r < 0.
double phi(double r, double kappa);

// phi_eps(|xi|) = eps^{-2} * phi(eps * |xi|) = (|xi|/eps) * sqrt(1 + (eps*kappa*|xi|)^2).
double phi_eps(double xi_abs, const DispersionParams& params);

struct PhiDerivatives {
  double first;   // phi'(r)  = (1 + 2 kappa^2 r^2) / sqrt(1 + kappa^2 r^2)
  double second;  // phi''(r) = kappa^2 r (3 + 2 kappa^2 r^2) / (1 + kappa^2 r^2)^{3/2}
};

// Closed-form first and second derivatives of phi; both strictly positive for
// r > 0. Rejects r <= 0 (phi''(0) = 0 sits outside the open half-line where
// the stationary-phase machinery applies).
PhiDerivatives phi_derivatives(double r, double kappa);

// Derivatives of the rescaled symbol: d/d|xi| and d^2/d|xi|^2 of phi_eps.
PhiDerivatives phi_eps_derivatives(double xi_abs, const DispersionParams& params);

// Radial Hessian determinant h(r) = (phi'(r)/r)^{d-1} * phi''(r), d in {2,3}.
double hessian_det(double r, double kappa, int d);

// h(r)^{-1/2} divided by the model weight kappa^{-d/2} * (kappa r / sqrt(1+(kappa r)^2))^{(d-2)/2}.
// Boundedness of this ratio over r is what makes the dispersive estimate
// uniform; it is swept by the bound-check experiment.
double h_bound_ratio(double r, const DispersionParams& params, int d);

// Bogoliubov dispersion law c(p) = sqrt( (g n / m) p^2 + (p^2 / (2m))^2 ):
// phonon-like (linear in p) for small momenta, free-particle-like (p^2/2m)
// for large momenta.
double bogoliubov_c(double p, const BogoliubovParams& bp);

enum class FrequencyRegime { WaveLike, Transition, SchroedingerLike };

// Classifies |xi| by the size of eps*kappa*|xi| against configurable
// thresholds (defaults 1/10 and 10): WaveLike below, SchroedingerLike above,
// Transition in between.
FrequencyRegime regime_classify(double xi_abs, const DispersionParams& params,
                                double lo = 0.1, double hi = 10.0);

std::string_view regime_name(FrequencyRegime regime);

}  // namespace qdlab
