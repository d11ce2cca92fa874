#pragma once

#include <span>
#include <vector>

#include "nnfft/fft.hpp"

// Exact O(input x output) reference evaluations. Every fast transform in
// the library is tested against these. Summation runs in ascending input
// index so results are bit-reproducible.

namespace nnfft::direct {

struct Options {
  /// Neumaier-compensated accumulation of real and imaginary parts.
  bool compensated = false;
};

/// f(x_j) = Σ_k f_k e^{-2πi N v_k x_j}.
std::vector<Complex> nndft(std::span<const Complex> coeffs, std::span<const double> freqs,
                           std::span<const double> nodes, double bandwidth, Options options = {});

/// p(x_j) = Σ_{k ∈ I_N} c_k e^{2πikx_j}, with c indexed from k = -N/2.
std::vector<Complex> ndft(std::span<const Complex> coeffs, std::span<const double> nodes,
                          Options options = {});

/// ĥ_k = Σ_j y_j e^{-2πikx_j} for k ∈ I_N (the adjoint of ndft).
std::vector<Complex> ndft_adjoint(std::span<const Complex> values, std::span<const double> nodes,
                                  int degree, Options options = {});

/// h(b_ℓ) = Σ_k c_k sinc(Nπ(b_ℓ - a_k)).
std::vector<Complex> sinc_transform(std::span<const Complex> coeffs,
                                    std::span<const double> sources,
                                    std::span<const double> targets, double bandwidth,
                                    Options options = {});

}  // namespace nnfft::direct
