#pragma once

#include <cstddef>
#include <functional>

namespace nnfft::quadrature {

/// Adaptive Gauss-Legendre integration of f over [a, b].
///
/// Each panel is integrated with a 10-point rule and compared against the
/// sum over its two halves; panels are bisected until the difference drops
/// below the panel's share of `abs_tol`, or until `max_evals` integrand
/// evaluations have been spent (the best estimate so far is returned).
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-12, std::size_t max_evals = std::size_t{1} << 16);

}  // namespace nnfft::quadrature
