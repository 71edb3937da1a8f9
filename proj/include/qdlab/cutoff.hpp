#pragma once

// Radial cutoff profiles for the Littlewood-Paley ladder and the
// oscillatory-integral localization: a C-infinity bump chi supported in
// [1/2, 2] with chi(1) = 1, built from the classical exp(-1/x) mollifier, its
// dyadic ladder, and a sharp (indicator) variant used by block norms.

#include <array>

namespace qdlab {

// C-infinity monotone step: 0 for x <= 0, 1 for x >= 1.
double smooth_step(double x);

// Ladder generator eta: 1 on (-inf, 1], 0 on [2, inf), smooth and
// decreasing in between; eta(u) = 1 - smooth_step(u - 1).
double ladder_eta(double u);

// chi(u) = eta(u) - eta(2u): supported in [1/2, 2] (exactly zero outside),
// chi(1) = 1, and the ladder {chi(2^-k u)}_k sums to 1 for u > 0.
double chi_profile(double u);

// Annular cutoff at scale `center` (R): evaluates the profile at r/R.
// The smooth variant carries derivative bounds |d^(k+1)/dr^(k+1)| <= C(k) R^-k
// for k <= 4, with C(k) = M(k+1)/R built from frozen suprema M of the unit
// profile's derivatives. The sharp variant is the indicator of
// [R/sqrt(2), R*sqrt(2)), whose dyadic family partitions (0, inf) exactly.
struct DyadicCutoff {
  double center;
  bool sharp;
  std::array<double, 5> derivative_constants;  // C(0)..C(4); zeros for sharp

  explicit DyadicCutoff(double center_, bool sharp_ = false);

  double operator()(double r) const;
};

// Suprema of |chi^(m)| for m = 1..5 on the unit-scale profile, measured once
// by high-order finite differences and frozen (rounded up).
const std::array<double, 5>& chi_derivative_suprema();

}  // namespace qdlab
