#pragma once

// Special functions needed by the closed-form window transforms.
// All functions are pure and thread-safe.

namespace nnfft::special {

/// Modified Bessel function of the first kind, order 0.
/// Throws std::overflow_error once the result leaves the double range.
double bessel_i0(double x);

/// Modified Bessel function of the first kind, order 1 (odd in x).
/// Relative error below 1e-12 on [0, 700]. Throws std::overflow_error
/// when the result is not representable.
double bessel_i1(double x);

/// Bessel function of the first kind, order 1.
/// Absolute error below 1e-12 for |x| <= 1000.
double bessel_j1(double x);

/// Centered cardinal B-spline of even order `order`, supported on
/// [-order/2, order/2]. Throws ParameterError for odd or non-positive orders.
double cardinal_bspline(int order, double x);

/// sin(y)/y with the removable singularity at 0.
double sinc(double y);

}  // namespace nnfft::special
