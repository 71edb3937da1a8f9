#include "qdlab/spectral.hpp"

#include <cmath>
#include <stdexcept>

#include "qdlab/cutoff.hpp"
#include "qdlab/fft.hpp"
#include "qdlab/modes.hpp"

namespace qdlab {

namespace {

VectorField to_domain(const VectorField& v, Domain target) {
  VectorField out;
  out.components.reserve(v.components.size());
  for (const Field& c : v.components) out.components.push_back(qdlab::to_domain(c, target));
  return out;
}

}  // namespace

Field apply_radial_multiplier(const Field& f, const std::function<double(double)>& m) {
  const Domain original = f.domain;
  Field hat = to_domain(f, Domain::Frequency);
  for_each_mode(hat.grid, [&](const ModeInfo& mode) {
    const double value = m(std::sqrt(mode.xi_abs2));
    if (std::isnan(value))
      throw std::domain_error("apply_radial_multiplier: NaN on the frequency lattice");
    hat.values[mode.flat] *= value;
  });
  return qdlab::to_domain(hat, original);
}

VectorField helmholtz_Q(const VectorField& v) {
  const Domain original = v.domain();
  const Grid& g = v.grid();
  VectorField hat = to_domain(v, Domain::Frequency);
  VectorField out(g, Domain::Frequency);
  const int d = g.d;
  for_each_mode(g, [&](const ModeInfo& mode) {
    // Zero mode: mean-free convention. Nyquist bins: the bin at k = -n/2 has
    // no reflected partner on the lattice, so the odd off-diagonal couplings
    // xi_a xi_b / |xi|^2 would break Hermitian symmetry there; they are
    // out-of-band for the projection, like for every derivative operator.
    if (mode.xi_abs2 == 0.0 || mode.nyquist) return;
    std::complex<double> dot(0.0, 0.0);
    const double xi[3] = {mode.xi0, mode.xi1, mode.xi2};
    for (int a = 0; a < d; ++a) dot += xi[a] * hat.components[a].values[mode.flat];
    dot /= mode.xi_abs2;
    for (int a = 0; a < d; ++a) out.components[a].values[mode.flat] = xi[a] * dot;
  });
  return to_domain(out, original);
}

VectorField helmholtz_P(const VectorField& v) {
  const Domain original = v.domain();
  VectorField hat = to_domain(v, Domain::Frequency);
  VectorField q = helmholtz_Q(hat);
  for (int a = 0; a < v.dim(); ++a) {
    for (std::size_t i = 0; i < hat.components[a].values.size(); ++i) {
      hat.components[a].values[i] -= q.components[a].values[i];
    }
  }
  return to_domain(hat, original);
}

VectorField gradient(const Field& gfield) {
  const Domain original = gfield.domain;
  const Grid& g = gfield.grid;
  Field hat = to_domain(gfield, Domain::Frequency);
  VectorField out(g, Domain::Frequency);
  // The bin at k = -n/2 is the only one with this frequency value, and it is
  // computed by the same product as the mode values, so exact comparison is
  // reliable; the differentiated axis's Nyquist bin gets zero (odd symbol).
  const double nyq_xi = g.xi_axis(g.n / 2);
  for_each_mode(g, [&](const ModeInfo& mode) {
    const std::complex<double> v = hat.values[mode.flat];
    const double xi[3] = {mode.xi0, mode.xi1, mode.xi2};
    for (int a = 0; a < g.d; ++a) {
      out.components[a].values[mode.flat] =
          (xi[a] == nyq_xi) ? 0.0 : std::complex<double>(0.0, xi[a]) * v;
    }
  });
  return to_domain(out, original);
}

Field divergence(const VectorField& v) {
  const Domain original = v.domain();
  const Grid& g = v.grid();
  VectorField hat = to_domain(v, Domain::Frequency);
  Field out(g, Domain::Frequency);
  const double nyq_xi = g.xi_axis(g.n / 2);
  for_each_mode(g, [&](const ModeInfo& mode) {
    std::complex<double> sum(0.0, 0.0);
    const double xi[3] = {mode.xi0, mode.xi1, mode.xi2};
    for (int a = 0; a < g.d; ++a) {
      if (xi[a] != nyq_xi) {
        sum += std::complex<double>(0.0, xi[a]) * hat.components[a].values[mode.flat];
      }
    }
    out.values[mode.flat] = sum;
  });
  return to_domain(out, original);
}

bool dyadic_block_on_lattice(const Grid& g, int k) {
  const double scale = std::ldexp(1.0, k);  // 2^k
  const double lo = 0.5 * scale;
  const double hi = 2.0 * scale;
  const double lattice_min = g.two_pi_over_length;  // lowest nonzero |xi|
  const double lattice_max = g.xi_max_axis() * std::sqrt(static_cast<double>(g.d));
  return hi > lattice_min && lo < lattice_max;
}

int dyadic_k_min(const Grid& g) {
  int k = static_cast<int>(std::floor(std::log2(g.two_pi_over_length))) - 1;
  while (!dyadic_block_on_lattice(g, k)) ++k;
  return k;
}

int dyadic_k_max(const Grid& g) {
  const double lattice_max = g.xi_max_axis() * std::sqrt(static_cast<double>(g.d));
  int k = static_cast<int>(std::ceil(std::log2(lattice_max))) + 1;
  while (!dyadic_block_on_lattice(g, k)) --k;
  return k;
}

Field dyadic_project(const Field& f, int k, bool sharp) {
  const double scale = std::ldexp(1.0, k);
  const DyadicCutoff cutoff(scale, sharp);
  return apply_radial_multiplier(f, [&cutoff](double r) { return cutoff(r); });
}

Field sqrt_op(const Field& f, SqrtOpKind kind, const DispersionParams& params, double alpha) {
  if (kind == SqrtOpKind::UepsAlpha) {
    if (alpha < 0.0) throw std::invalid_argument("sqrt_op: alpha must be >= 0");
    if (alpha == 0.0) return f;  // U^0 is the identity, Nyquist bins included
  }
  const Domain original = f.domain;
  Field hat = to_domain(f, Domain::Frequency);
  const double eps = params.eps;
  const double ek = params.eps * params.kappa;
  for_each_mode(hat.grid, [&](const ModeInfo& mode) {
    if (mode.nyquist) {
      hat.values[mode.flat] = 0.0;
      return;
    }
    double m = 1.0;
    switch (kind) {
      case SqrtOpKind::MinusLaplacian:
        m = std::sqrt(mode.xi_abs2);
        break;
      case SqrtOpKind::OnePlusEps2Kappa2MinusLaplacian:
        m = std::sqrt(1.0 + ek * ek * mode.xi_abs2);
        break;
      case SqrtOpKind::UepsAlpha: {
        const double u2 = eps * eps * mode.xi_abs2;
        m = std::pow(std::sqrt(u2 / (1.0 + u2)), alpha);
        break;
      }
    }
    hat.values[mode.flat] *= m;
  });
  return to_domain(hat, original);
}

}  // namespace qdlab
