#include "qdlab/propagator.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>

#include "qdlab/fft.hpp"
#include "qdlab/modes.hpp"
#include "qdlab/spectral.hpp"

namespace qdlab {

namespace {

// (-Lap)^{-1/2} in frequency space.  The zero mode and Nyquist-axis bins are
// mapped to zero, matching the convention of the forward fractional powers.
Field inv_sqrt_minus_laplacian(const Field& f) {
  const Domain original = f.domain;
  Field hat = to_domain(f, Domain::Frequency);
  for_each_mode(hat.grid, [&](const ModeInfo& mode) {
    if (mode.nyquist || mode.xi_abs2 == 0.0)
      hat.values[mode.flat] = 0.0;
    else
      hat.values[mode.flat] /= std::sqrt(mode.xi_abs2);
  });
  return to_domain(hat, original);
}

// (1 + eps^2 kappa^2 |xi|^2)^{-1/2}, inverse of the symmetrizing multiplier
// on sigma.  Nyquist-axis bins are zeroed for symmetry with the forward map.
Field inv_sqrt_one_plus(const Field& f, const DispersionParams& params) {
  const double c2 = params.eps * params.eps * params.kappa * params.kappa;
  const Domain original = f.domain;
  Field hat = to_domain(f, Domain::Frequency);
  for_each_mode(hat.grid, [&](const ModeInfo& mode) {
    if (mode.nyquist)
      hat.values[mode.flat] = 0.0;
    else
      hat.values[mode.flat] /= std::sqrt(1.0 + c2 * mode.xi_abs2);
  });
  return to_domain(hat, original);
}

}  // namespace

ForcingTerm::ForcingTerm(std::vector<VectorField> samples_in, double horizon_in)
    : samples(std::move(samples_in)), horizon(horizon_in) {
  if (samples.size() < 2)
    throw std::invalid_argument("ForcingTerm: need at least two time samples");
  if (!(horizon > 0.0))
    throw std::invalid_argument("ForcingTerm: horizon must be positive");
  for (const VectorField& s : samples)
    if (!(s.grid() == samples.front().grid()))
      throw std::invalid_argument("ForcingTerm: samples on mismatched grids");
}

double ForcingTerm::sample_time(std::size_t i) const {
  if (i >= samples.size())
    throw std::out_of_range("ForcingTerm: sample index out of range");
  return horizon * static_cast<double>(i) / static_cast<double>(samples.size() - 1);
}

Field ForcingTerm::f_tilde(std::size_t i) const {
  if (i >= samples.size())
    throw std::out_of_range("ForcingTerm: sample index out of range");
  return inv_sqrt_minus_laplacian(divergence(samples[i]));
}

SymAcousticState symmetrize(const AcousticState& state) {
  if (!(state.sigma.grid == state.j.grid()))
    throw std::invalid_argument("symmetrize: sigma and j on mismatched grids");
  SymAcousticState out{
      sqrt_op(state.sigma, SqrtOpKind::OnePlusEps2Kappa2MinusLaplacian, state.params),
      inv_sqrt_minus_laplacian(divergence(state.j)),
      state.params,
      state.time,
  };
  return out;
}

AcousticState desymmetrize(const SymAcousticState& s) {
  Field jt_hat = to_domain(s.j_tilde, Domain::Frequency);
  const double scale = l2_norm(jt_hat);
  const double zero_mode = std::abs(jt_hat.values[0]);
  if (zero_mode > 1e-12 * std::max(scale, 1.0))
    throw std::domain_error("desymmetrize: zero-mode current content has no preimage");

  const Grid& g = jt_hat.grid;
  // Invert j_tilde = i xi . J / |xi| for the gradient part of the current:
  // J_hat = -i xi / |xi| * jt_hat per component.
  VectorField j_hat(g, Domain::Frequency);
  for_each_mode(g, [&](const ModeInfo& mode) {
    if (mode.nyquist || mode.xi_abs2 == 0.0) return;
    const std::complex<double> base =
        std::complex<double>(0.0, -1.0) * jt_hat.values[mode.flat] / std::sqrt(mode.xi_abs2);
    j_hat.components[0].values[mode.flat] = mode.xi0 * base;
    if (g.d >= 2) j_hat.components[1].values[mode.flat] = mode.xi1 * base;
    if (g.d >= 3) j_hat.components[2].values[mode.flat] = mode.xi2 * base;
  });

  const Domain original = s.sigma_tilde.domain;
  AcousticState out{
      inv_sqrt_one_plus(s.sigma_tilde, s.params),
      VectorField(g, original),
      s.params,
      s.time,
  };
  for (int a = 0; a < g.d; ++a)
    out.j.components[a] = to_domain(j_hat.components[a], original);
  return out;
}

SymAcousticState evolve_homogeneous(const SymAcousticState& s, double t) {
  if (!(s.sigma_tilde.grid == s.j_tilde.grid))
    throw std::invalid_argument("evolve_homogeneous: fields on mismatched grids");
  const Domain original = s.sigma_tilde.domain;
  Field sig = to_domain(s.sigma_tilde, Domain::Frequency);
  Field jt = to_domain(s.j_tilde, Domain::Frequency);
  for_each_mode(sig.grid, [&](const ModeInfo& mode) {
    const double angle = t * phi_eps(std::sqrt(mode.xi_abs2), s.params);
    const double c = std::cos(angle);
    const double sn = std::sin(angle);
    const std::complex<double> a = sig.values[mode.flat];
    const std::complex<double> b = jt.values[mode.flat];
    sig.values[mode.flat] = c * a - sn * b;
    jt.values[mode.flat] = sn * a + c * b;
  });
  return SymAcousticState{to_domain(sig, original), to_domain(jt, original), s.params,
                          s.time + t};
}

Field semigroup_apply(const Field& f, double t, const DispersionParams& params) {
  const Domain original = f.domain;
  Field hat = to_domain(f, Domain::Frequency);
  for_each_mode(hat.grid, [&](const ModeInfo& mode) {
    const double angle = t * phi_eps(std::sqrt(mode.xi_abs2), params);
    hat.values[mode.flat] *= std::complex<double>(std::cos(angle), std::sin(angle));
  });
  return to_domain(hat, original);
}

SymAcousticState duhamel(const SymAcousticState& s0, const ForcingTerm& forcing,
                         double t, int substeps) {
  if (substeps < 1) throw std::invalid_argument("duhamel: substeps must be positive");
  if (!(t >= 0.0)) throw std::invalid_argument("duhamel: t must be nonnegative");
  if (forcing.sample_count() < static_cast<std::size_t>(substeps) + 1)
    throw std::invalid_argument("duhamel: insufficient forcing samples for substeps");
  if (forcing.horizon < t)
    throw std::invalid_argument("duhamel: forcing samples do not cover [0, t]");
  if (!(forcing.samples.front().grid() == s0.sigma_tilde.grid))
    throw std::invalid_argument("duhamel: forcing grid does not match state grid");

  const Domain original = s0.sigma_tilde.domain;
  Field sig = to_domain(s0.sigma_tilde, Domain::Frequency);
  Field jt = to_domain(s0.j_tilde, Domain::Frequency);
  const Grid& g = sig.grid;

  // Homogeneous rotation of the initial data.
  for_each_mode(g, [&](const ModeInfo& mode) {
    const double angle = t * phi_eps(std::sqrt(mode.xi_abs2), s0.params);
    const double c = std::cos(angle);
    const double sn = std::sin(angle);
    const std::complex<double> a = sig.values[mode.flat];
    const std::complex<double> b = jt.values[mode.flat];
    sig.values[mode.flat] = c * a - sn * b;
    jt.values[mode.flat] = sn * a + c * b;
  });

  // Midpoint rule over the forcing window.  Panel midpoints sweep [0, t]
  // monotonically, so at most two bracketing f_tilde spectra are live at a
  // time; they are cached across panels.
  const double dt_sample =
      forcing.horizon / static_cast<double>(forcing.sample_count() - 1);
  const double w = t / substeps;
  std::ptrdiff_t cached_lo = -1, cached_hi = -1;
  Field ft_lo(g, Domain::Frequency), ft_hi(g, Domain::Frequency);
  for (int p = 0; p < substeps; ++p) {
    const double s_mid = (p + 0.5) * w;
    double pos = s_mid / dt_sample;
    std::size_t lo = static_cast<std::size_t>(pos);
    if (lo + 1 >= forcing.sample_count()) lo = forcing.sample_count() - 2;
    const double frac = pos - static_cast<double>(lo);
    if (static_cast<std::ptrdiff_t>(lo) != cached_lo) {
      if (static_cast<std::ptrdiff_t>(lo) == cached_hi)
        ft_lo = std::move(ft_hi);
      else
        ft_lo = to_domain(forcing.f_tilde(lo), Domain::Frequency);
      ft_hi = to_domain(forcing.f_tilde(lo + 1), Domain::Frequency);
      cached_lo = static_cast<std::ptrdiff_t>(lo);
      cached_hi = cached_lo + 1;
    }
    const double remaining = t - s_mid;
    for_each_mode(g, [&](const ModeInfo& mode) {
      const std::complex<double> fmid =
          (1.0 - frac) * ft_lo.values[mode.flat] + frac * ft_hi.values[mode.flat];
      const double angle = remaining * phi_eps(std::sqrt(mode.xi_abs2), s0.params);
      // Rotation applied to the forcing slot (0, fmid), weighted by the panel.
      sig.values[mode.flat] += w * (-std::sin(angle)) * fmid;
      jt.values[mode.flat] += w * std::cos(angle) * fmid;
    });
  }

  return SymAcousticState{to_domain(sig, original), to_domain(jt, original), s0.params,
                          s0.time + t};
}

Field boussinesq_evolve(const Field& sigma0, const Field& sigma_dot0, double t,
                        const DispersionParams& params) {
  if (!(sigma0.grid == sigma_dot0.grid))
    throw std::invalid_argument("boussinesq_evolve: fields on mismatched grids");
  if (sigma0.domain != sigma_dot0.domain)
    throw std::invalid_argument("boussinesq_evolve: fields in mismatched domains");
  const Domain original = sigma0.domain;
  Field sig = to_domain(sigma0, Domain::Frequency);
  Field dot = to_domain(sigma_dot0, Domain::Frequency);
  for_each_mode(sig.grid, [&](const ModeInfo& mode) {
    if (mode.xi_abs2 == 0.0) {
      sig.values[mode.flat] += t * dot.values[mode.flat];
      return;
    }
    const double freq = phi_eps(std::sqrt(mode.xi_abs2), params);
    const double angle = t * freq;
    sig.values[mode.flat] = std::cos(angle) * sig.values[mode.flat] +
                            std::sin(angle) / freq * dot.values[mode.flat];
  });
  return to_domain(sig, original);
}

}  // namespace qdlab
