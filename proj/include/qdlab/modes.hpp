#pragma once

// Frequency-lattice iteration helper shared by every multiplier-style
// operation. Visits modes in FFTW's row-major storage order and hands the
// callback the flat index, the frequency vector components, |xi|^2, and
// whether any axis sits on its Nyquist bin.

#include <cstddef>
#include <vector>

#include "qdlab/grid.hpp"

namespace qdlab {

struct ModeInfo {
  std::size_t flat;
  double xi0, xi1, xi2;  // unused axes are 0
  double xi_abs2;
  bool nyquist;  // true if any axis index equals n/2
};

template <class F>
void for_each_mode(const Grid& g, F&& f) {
  const int n = g.n;
  std::vector<double> xi(n);
  for (int i = 0; i < n; ++i) xi[i] = g.xi_axis(i);
  const int nyq = n / 2;

  ModeInfo m{};
  switch (g.d) {
    case 1:
      for (int i = 0; i < n; ++i) {
        m.flat = static_cast<std::size_t>(i);
        m.xi0 = xi[i];
        m.xi1 = m.xi2 = 0.0;
        m.xi_abs2 = m.xi0 * m.xi0;
        m.nyquist = (i == nyq);
        f(m);
      }
      break;
    case 2: {
      std::size_t flat = 0;
      for (int i = 0; i < n; ++i) {
        const double a = xi[i];
        const double a2 = a * a;
        const bool inyq = (i == nyq);
        for (int j = 0; j < n; ++j, ++flat) {
          m.flat = flat;
          m.xi0 = a;
          m.xi1 = xi[j];
          m.xi2 = 0.0;
          m.xi_abs2 = a2 + m.xi1 * m.xi1;
          m.nyquist = inyq || (j == nyq);
          f(m);
        }
      }
      break;
    }
    case 3: {
      std::size_t flat = 0;
      for (int i = 0; i < n; ++i) {
        const double a = xi[i];
        const double a2 = a * a;
        const bool inyq = (i == nyq);
        for (int j = 0; j < n; ++j) {
          const double b = xi[j];
          const double ab2 = a2 + b * b;
          const bool ijnyq = inyq || (j == nyq);
          for (int k = 0; k < n; ++k, ++flat) {
            m.flat = flat;
            m.xi0 = a;
            m.xi1 = b;
            m.xi2 = xi[k];
            m.xi_abs2 = ab2 + m.xi2 * m.xi2;
            m.nyquist = ijnyq || (k == nyq);
            f(m);
          }
        }
      }
      break;
    }
  }
}

}  // namespace qdlab
