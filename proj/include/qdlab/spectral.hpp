#pragma once

// Fourier-multiplier operators on fields: generic radial multipliers, the
// Leray-Helmholtz projections Q (curl-free part) and P = Id - Q, smooth
// dyadic frequency blocks, gradient/divergence, and the square-root
// operators used by the symmetrization and the smoothing family U_eps.

#include <functional>

#include "qdlab/dispersion.hpp"
#include "qdlab/grid.hpp"

namespace qdlab {

// Multiplies f-hat pointwise by m(|xi|); the result keeps the input's domain
// tag (space input is transformed, multiplied, transformed back). Throws if
// m produces a NaN anywhere on the lattice.
Field apply_radial_multiplier(const Field& f, const std::function<double(double)>& m);

// Curl-free projection: per mode (xi xi^T / |xi|^2) v-hat; the zero mode maps
// to 0 (mean-free convention), and Nyquist bins do too (the unpaired bin at
// k = -n/2 has no lattice partner for the odd cross couplings). Result keeps
// the input's domain tag.
VectorField helmholtz_Q(const VectorField& v);

// Divergence-free projection P = Id - Q.
VectorField helmholtz_P(const VectorField& v);

// Per-axis i*xi_a multiplier; the differentiated axis's Nyquist bin is
// zeroed (an odd symbol has no symmetric representative there).
VectorField gradient(const Field& g);
Field divergence(const VectorField& v);

// Smooth annular restriction to |xi| ~ 2^k (support [2^{k-1}, 2^{k+1}],
// profile 1 at 2^k). With sharp = true uses the indicator of
// [2^k/sqrt(2), 2^k*sqrt(2)) instead. Blocks entirely outside the lattice's
// frequency range come back as zero fields; dyadic_block_on_lattice reports
// representability so callers can flag the truncation.
Field dyadic_project(const Field& f, int k, bool sharp = false);
bool dyadic_block_on_lattice(const Grid& g, int k);

// Smallest and largest k whose blocks intersect the lattice's nonzero
// frequency range; the Besov ladder runs over exactly these.
int dyadic_k_min(const Grid& g);
int dyadic_k_max(const Grid& g);

enum class SqrtOpKind {
  MinusLaplacian,                  // multiplier |xi|
  OnePlusEps2Kappa2MinusLaplacian, // multiplier sqrt(1 + eps^2 kappa^2 |xi|^2)
  UepsAlpha,                       // multiplier (eps|xi| / sqrt(1 + eps^2 |xi|^2))^alpha
};

// Fractional-power multipliers. Nyquist bins are zeroed (their asymmetric
// spectra would leak spurious imaginary parts); alpha = 0 for UepsAlpha is
// the identity, untouched bins included. alpha < 0 is rejected.
Field sqrt_op(const Field& f, SqrtOpKind kind, const DispersionParams& params,
              double alpha = 1.0);

}  // namespace qdlab
