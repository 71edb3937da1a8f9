#pragma once
// Linear acoustic evolution. The first-order system couples a density
// fluctuation sigma to a current J; a symmetrizing change of variables
// turns it into a skew pair (sigma_tilde, j_tilde) that rotates mode by
// mode with angular speed phi_eps(|xi|).  All propagators here are exact
// per-mode multiplier exponentials; only the Duhamel forcing integral
// carries a quadrature error.
//
// Convention: fields with frequency content on a Nyquist axis lose that
// content under the symmetrizing multipliers (same policy as sqrt_op);
// supply band-limited data for exact round trips.

#include <cstddef>
#include <vector>

#include "qdlab/dispersion.hpp"
#include "qdlab/grid.hpp"

namespace qdlab {

// State in physical variables: scalar density fluctuation and vector current.
struct AcousticState {
  Field sigma;
  VectorField j;
  DispersionParams params;
  double time = 0.0;
};

// Symmetrized state: sigma_tilde = (1 - eps^2 kappa^2 Lap)^{1/2} sigma and
// j_tilde = (-Lap)^{-1/2} div J evolve by a pure rotation in each mode, so
// the quadratic energy |sigma_tilde|^2 + |j_tilde|^2 is conserved exactly.
struct SymAcousticState {
  Field sigma_tilde;
  Field j_tilde;
  DispersionParams params;
  double time = 0.0;
};

// Time samples of a vector forcing F on a uniform grid over [0, horizon],
// first sample at time 0, last at time horizon.
struct ForcingTerm {
  std::vector<VectorField> samples;
  double horizon = 0.0;

  // Requires at least two samples and a positive horizon.
  ForcingTerm(std::vector<VectorField> samples_in, double horizon_in);

  std::size_t sample_count() const { return samples.size(); }
  double sample_time(std::size_t i) const;
  // Scalar forcing seen by the symmetrized system: (-Lap)^{-1/2} div F
  // of sample i.  The zero mode vanishes by construction.
  Field f_tilde(std::size_t i) const;
};

// Change of variables into the rotating pair.  Only the gradient part of J
// contributes: a divergence-free current maps to j_tilde = 0.
SymAcousticState symmetrize(const AcousticState& state);

// Inverse change of variables; recovers sigma and the gradient part Q(J)
// of the current.  Throws std::domain_error if j_tilde carries zero-mode
// content, which has no preimage under (-Lap)^{-1/2} div.
AcousticState desymmetrize(const SymAcousticState& s);

// Advances the unforced symmetrized system by t: each Fourier mode rotates
// by angle t*phi_eps(|xi|), with d/dt sigma_tilde = -H j_tilde and
// d/dt j_tilde = +H sigma_tilde.  Exact in time.
SymAcousticState evolve_homogeneous(const SymAcousticState& s, double t);

// Scalar form of the same flow: multiplies each mode by e^{i t phi_eps(|xi|)}.
// Unitary on the lattice l2 norm; agrees with evolve_homogeneous applied to
// the complex combination sigma_tilde + i j_tilde.
Field semigroup_apply(const Field& f, double t, const DispersionParams& params);

// Forced evolution via the variation-of-constants formula: the forcing
// integral uses the midpoint rule on `substeps` panels, with the forcing
// value at each panel midpoint interpolated linearly between its two
// bracketing samples.  Error is O(substeps^-2) for smooth forcing.
// Requires forcing.sample_count() >= substeps + 1 and forcing.horizon >= t.
SymAcousticState duhamel(const SymAcousticState& s0, const ForcingTerm& forcing,
                         double t, int substeps);

// Second-order (wave-type) solve for the density fluctuation alone:
// per mode sigma(t) = cos(t phi_eps) sigma0 + sin(t phi_eps)/phi_eps * sigma_dot0,
// with the degenerate zero mode evolving as sigma0 + t * sigma_dot0.  Exact.
Field boussinesq_evolve(const Field& sigma0, const Field& sigma_dot0, double t,
                        const DispersionParams& params);

}  // namespace qdlab
