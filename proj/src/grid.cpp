#include "qdlab/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qdlab {

Grid::Grid(int d_, int n_, double box_length_) : d(d_), n(n_), box_length(box_length_) {
  if (d < 1 || d > 3) throw std::invalid_argument("Grid: d must be 1, 2, or 3");
  if (n < 2 || (n & (n - 1)) != 0) throw std::invalid_argument("Grid: n must be a power of two >= 2");
  if (!(box_length > 0.0)) throw std::invalid_argument("Grid: box_length must be > 0");
  spacing = box_length / n;
  two_pi_over_length = 2.0 * std::numbers::pi / box_length;
}

std::size_t Grid::size() const {
  std::size_t s = 1;
  for (int i = 0; i < d; ++i) s *= static_cast<std::size_t>(n);
  return s;
}

double l2_norm(const Field& f) {
  double sum = 0.0;
  for (const std::complex<double>& v : f.values) sum += std::norm(v);
  return std::sqrt(sum);
}

double max_abs_diff(const Field& f, const Field& g) {
  if (f.values.size() != g.values.size())
    throw std::invalid_argument("max_abs_diff: size mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    m = std::max(m, std::abs(f.values[i] - g.values[i]));
  }
  return m;
}

}  // namespace qdlab
