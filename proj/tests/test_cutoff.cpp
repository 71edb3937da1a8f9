#include "qdlab/cutoff.hpp"

#include <cmath>
#include <initializer_list>
#include <stdexcept>

#include "doctest.h"

using namespace qdlab;

TEST_CASE("smooth_step: clamps, symmetry, monotonicity") {
  CHECK(smooth_step(-1.0) == 0.0);
  CHECK(smooth_step(0.0) == 0.0);
  CHECK(smooth_step(1.0) == 1.0);
  CHECK(smooth_step(2.0) == 1.0);
  CHECK(smooth_step(0.5) == 0.5);
  double prev = -1.0;
  for (double x = -0.2; x <= 1.2; x += 0.01) {
    const double v = smooth_step(x);
    CHECK(v >= prev);
    prev = v;
  }
  // Point symmetry s(x) + s(1-x) = 1.
  for (double x : {0.1, 0.3, 0.47, 0.8}) {
    CHECK(smooth_step(x) + smooth_step(1.0 - x) == doctest::Approx(1.0).epsilon(1e-15));
  }
}

TEST_CASE("chi profile: support, center value, ladder partition") {
  CHECK(chi_profile(1.0) == 1.0);
  // Exactly zero outside [1/2, 2].
  CHECK(chi_profile(0.5) == 0.0);
  CHECK(chi_profile(0.49) == 0.0);
  CHECK(chi_profile(2.0) == 0.0);
  CHECK(chi_profile(2.5) == 0.0);
  CHECK(chi_profile(0.75) > 0.0);
  CHECK(chi_profile(1.5) > 0.0);

  // The dyadic ladder sums to 1 for every positive radius.
  for (double r : {0.013, 0.7, 1.0, 3.9, 11.0, 250.0}) {
    double sum = 0.0;
    for (int k = -16; k <= 16; ++k) sum += chi_profile(std::ldexp(r, -k));
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("DyadicCutoff: scaling, sharp variant, validation") {
  const DyadicCutoff c(4.0);
  CHECK(c(4.0) == 1.0);
  CHECK(c(1.9) == 0.0);
  CHECK(c(8.1) == 0.0);
  CHECK(c(3.0) == chi_profile(0.75));

  const DyadicCutoff s(4.0, true);
  CHECK(s(4.0) == 1.0);
  CHECK(s(4.0 / 1.4142135623730951 - 1e-9) == 0.0);
  CHECK(s(4.0 / 1.4142135623730951 + 1e-9) == 1.0);
  CHECK(s(4.0 * 1.4142135623730951 + 1e-9) == 0.0);

  // Sharp blocks tile (0, inf): each radius belongs to exactly one block.
  for (double r : {0.3, 1.0, 1.5, 5.7, 100.0}) {
    int hits = 0;
    for (int k = -12; k <= 12; ++k) {
      hits += DyadicCutoff(std::ldexp(1.0, k), true)(r) == 1.0 ? 1 : 0;
    }
    CHECK(hits == 1);
  }

  CHECK_THROWS_AS(DyadicCutoff(0.0), std::invalid_argument);
  CHECK_THROWS_AS(DyadicCutoff(-1.0), std::invalid_argument);
}

TEST_CASE("DyadicCutoff: derivative bounds hold with the frozen constants") {
  // |d^(k+1)/dr^(k+1) profile| <= C(k) R^-k, checked by central finite
  // differences on a fine grid across the support.
  for (double R : {1.0, 4.0}) {
    const DyadicCutoff cutoff(R);
    auto f = [&cutoff](double r) { return cutoff(r); };
    for (int k = 0; k <= 4; ++k) {
      const int m = k + 1;                      // derivative order under test
      const double h = (m <= 2 ? 1e-4 : 1e-3) * R;
      double sup = 0.0;
      for (double r = 0.45 * R; r <= 2.05 * R; r += 2e-4 * R) {
        double v = 0.0;
        switch (m) {
          case 1: v = (f(r + h) - f(r - h)) / (2 * h); break;
          case 2: v = (f(r + h) - 2 * f(r) + f(r - h)) / (h * h); break;
          case 3:
            v = (f(r + 2 * h) - 2 * f(r + h) + 2 * f(r - h) - f(r - 2 * h)) / (2 * h * h * h);
            break;
          case 4:
            v = (f(r + 2 * h) - 4 * f(r + h) + 6 * f(r) - 4 * f(r - h) + f(r - 2 * h)) /
                (h * h * h * h);
            break;
          case 5:
            v = (f(r + 3 * h) - 4 * f(r + 2 * h) + 5 * f(r + h) - 5 * f(r - h) +
                 4 * f(r - 2 * h) - f(r - 3 * h)) /
                (2 * h * h * h * h * h);
            break;
        }
        sup = std::max(sup, std::abs(v));
      }
      CHECK(sup <= cutoff.derivative_constants[k] * std::pow(R, -k));
    }
  }
}
