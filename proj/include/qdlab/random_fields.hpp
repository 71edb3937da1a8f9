#pragma once

// Deterministic random test data: unit-modulus, random-phase spectra on a
// frequency annulus. Phases come from raw mt19937_64 draws mapped through a
// fixed bit pattern, so identical (grid, seed) inputs give bit-identical
// fields on any platform.

#include <cstdint>
#include <random>

#include "qdlab/grid.hpp"

namespace qdlab {

// [0, 1) from the top 53 bits of one raw draw.
inline double uniform01(std::mt19937_64& rng) { return (rng() >> 11) * 0x1.0p-53; }

// Frequency-domain field with |f-hat| = 1 and uniform random phase on modes
// with lo <= |xi| <= hi, zero elsewhere. The zero mode and all Nyquist bins
// stay empty. Every lattice site consumes exactly one draw in flat order, so
// widening the annulus preserves the phases of modes already inside it.
Field random_annulus_spectrum(const Grid& g, double lo, double hi, std::uint64_t seed);

}  // namespace qdlab
