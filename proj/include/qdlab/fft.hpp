#pragma once

// Unitary discrete Fourier transforms on Field values, backed by cached FFTW
// plans (one per grid shape and direction, planned once with FFTW_MEASURE on
// scratch buffers and reused via the new-array execute interface; all field
// storage shares FFTW alignment). Both directions carry the 1/sqrt(N)
// normalization, so each is an l2 isometry.

#include "qdlab/grid.hpp"

namespace qdlab {

// Space -> Frequency. Throws if the field is already in the frequency domain.
Field fft(const Field& f);

// Frequency -> Space. Throws if the field is already in the space domain.
Field ifft(const Field& f);

// Convenience: returns f transformed into `target` if needed, else a copy.
Field to_domain(const Field& f, Domain target);

}  // namespace qdlab
