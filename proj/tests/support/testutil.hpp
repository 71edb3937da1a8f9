#pragma once

// Shared helpers for the unit tests: deterministic random fields, single
// Fourier modes, and small comparison utilities.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

#include "qdlab/fft.hpp"
#include "qdlab/grid.hpp"
#include "qdlab/modes.hpp"
#include "qdlab/random_fields.hpp"

namespace qdlab::test {

// Complex space-domain field with uniform [-1,1] real and imaginary parts.
inline Field random_space_field(const Grid& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Field f(g, Domain::Space);
  for (std::complex<double>& v : f.values) {
    const double re = 2.0 * uniform01(rng) - 1.0;
    const double im = 2.0 * uniform01(rng) - 1.0;
    v = {re, im};
  }
  return f;
}

// Real-valued space-domain field with uniform [-1,1] values.
inline Field random_real_space_field(const Grid& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Field f(g, Domain::Space);
  for (std::complex<double>& v : f.values) v = {2.0 * uniform01(rng) - 1.0, 0.0};
  return f;
}

// Frequency-domain field with random complex values away from the zero mode
// and all Nyquist bins (so fractional-power multipliers act invertibly).
inline Field random_nyquist_free_spectrum(const Grid& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Field f(g, Domain::Frequency);
  for_each_mode(g, [&](const ModeInfo& mode) {
    const double re = 2.0 * uniform01(rng) - 1.0;
    const double im = 2.0 * uniform01(rng) - 1.0;
    if (mode.nyquist || mode.xi_abs2 == 0.0) return;
    f.values[mode.flat] = {re, im};
  });
  return f;
}

// Zeroes every bin with any axis on its Nyquist index; input and output in
// the frequency domain.
inline Field zero_nyquist(const Field& f) {
  Field out = f;
  for_each_mode(f.grid, [&](const ModeInfo& mode) {
    if (mode.nyquist) out.values[mode.flat] = 0.0;
  });
  return out;
}

// Real-valued space field with no Nyquist or zero-mode content: filter a
// random real field and drop the mean (Hermitian symmetry survives, so the
// result is real to rounding; the residual imaginary part is removed).
inline Field random_real_bandlimited_field(const Grid& g, std::uint64_t seed) {
  Field hat = zero_nyquist(fft(random_real_space_field(g, seed)));
  hat.values[0] = 0.0;
  Field out = ifft(hat);
  for (std::complex<double>& v : out.values) v = {v.real(), 0.0};
  return out;
}

// Space-domain plane wave exp(i k . x) for integer frequency multi-index k
// (units of 2 pi / L per axis).
inline Field plane_wave(const Grid& g, int k0, int k1 = 0, int k2 = 0) {
  Field f(g, Domain::Space);
  const double step = 2.0 * std::numbers::pi / g.n;  // k . x  with  x = (L/n) * j
  const int n = g.n;
  if (g.d == 1) {
    for (int i = 0; i < n; ++i) {
      const double ph = step * k0 * i;
      f.values[i] = {std::cos(ph), std::sin(ph)};
    }
  } else if (g.d == 2) {
    std::size_t flat = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j, ++flat) {
        const double ph = step * (k0 * i + k1 * j);
        f.values[flat] = {std::cos(ph), std::sin(ph)};
      }
    }
  } else {
    std::size_t flat = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int l = 0; l < n; ++l, ++flat) {
          const double ph = step * (k0 * i + k1 * j + k2 * l);
          f.values[flat] = {std::cos(ph), std::sin(ph)};
        }
      }
    }
  }
  return f;
}

// Flat index of the frequency bin holding integer mode (k0, k1, k2).
inline std::size_t mode_bin(const Grid& g, int k0, int k1 = 0, int k2 = 0) {
  const int n = g.n;
  auto wrap = [n](int k) { return k >= 0 ? k : k + n; };
  std::size_t flat = wrap(k0);
  if (g.d >= 2) flat = flat * n + wrap(k1);
  if (g.d >= 3) flat = flat * n + wrap(k2);
  return flat;
}

inline double max_abs(const Field& f) {
  double m = 0.0;
  for (const std::complex<double>& v : f.values) m = std::max(m, std::abs(v));
  return m;
}

inline double max_imag(const Field& f) {
  double m = 0.0;
  for (const std::complex<double>& v : f.values) m = std::max(m, std::abs(v.imag()));
  return m;
}

}  // namespace qdlab::test
