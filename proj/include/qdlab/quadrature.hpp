#pragma once

// Gauss-Legendre quadrature: single-panel nodes/weights on [-1, 1] and a
// flattened composite rule over [a, b]. The flattened form (plain node and
// weight arrays) is what the oscillatory-integral evaluator consumes, since
// it precomputes per-node amplitudes once per time sample.

#include <concepts>
#include <cstddef>
#include <vector>

namespace qdlab {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }
};

// n-point Gauss-Legendre rule on [-1, 1]; nodes ascending. Computed by
// Newton iteration on the Legendre recurrence, accurate to ~1e-15.
QuadratureRule gauss_legendre(int n);

// Composite rule: `panels` equal subintervals of [a, b], each carrying the
// mapped n-point Gauss-Legendre rule.
QuadratureRule composite_gauss_legendre(int points_per_panel, int panels, double a, double b);

template <std::invocable<double> F>
double integrate(const QuadratureRule& rule, F&& f) {
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i] * f(rule.nodes[i]);
  }
  return sum;
}

}  // namespace qdlab
