#pragma once

// Small special-function kernels needed by the radial oscillatory-integral
// reduction: the Bessel function J0 and the unnormalized sinc.

namespace qdlab {

// Bessel function of the first kind, order zero. Power series for |z| < 8,
// optimally truncated Hankel asymptotic expansion beyond. Absolute accuracy
// is ~4e-13 on the series side and ~4e-9 near the split point, improving
// rapidly for larger |z|.
double bessel_j0(double z);

// sin(x)/x with the removable singularity filled in (Taylor polynomial for
// small |x|); equals the spherical Bessel function j0.
double sinc(double x);

}  // namespace qdlab
