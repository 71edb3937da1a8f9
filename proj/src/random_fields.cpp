#include "qdlab/random_fields.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qdlab/modes.hpp"

namespace qdlab {

Field random_annulus_spectrum(const Grid& g, double lo, double hi, std::uint64_t seed) {
  if (!(lo >= 0.0) || !(hi > lo))
    throw std::invalid_argument("random_annulus_spectrum: need 0 <= lo < hi");
  std::mt19937_64 rng(seed);
  Field out(g, Domain::Frequency);
  for_each_mode(g, [&](const ModeInfo& mode) {
    const double u = uniform01(rng);  // one draw per site, annulus or not
    if (mode.nyquist || mode.xi_abs2 == 0.0) return;
    const double r = std::sqrt(mode.xi_abs2);
    if (r < lo || r > hi) return;
    const double phase = 2.0 * std::numbers::pi * u;
    out.values[mode.flat] = std::complex<double>(std::cos(phase), std::sin(phase));
  });
  return out;
}

}  // namespace qdlab
