#pragma once

#include <span>
#include <vector>

#include "nnfft/fft.hpp"
#include "nnfft/windows.hpp"

namespace nnfft {

/// One precomputed (grid index, window value) pair.
struct SpreadEntry {
  int index;      ///< grid index, already reduced modulo the grid length
  double weight;  ///< window value at (node - grid point)
};

/// Classical NFFT: evaluates p(x) = Σ_{k ∈ I_N} c_k e^{2πikx} at nonequispaced
/// nodes x_j ∈ [-1/2, 1/2], and its adjoint ĥ_k = Σ_j y_j e^{-2πikx_j}.
///
/// The forward transform is deconvolve → inverse FFT of length σN → gather;
/// the adjoint is the exact transpose: scatter → forward FFT → deconvolve.
/// Grid indices wrap modulo σN, which realises the 1-periodic window.
class NfftPlan {
 public:
  /// Requires N even, σN an even integer, 2m <= σN/2 and |x_j| <= 1/2.
  /// Throws ParameterError naming the violated condition, NumericError if
  /// φ̂(k) is not positive on I_N.
  NfftPlan(int degree, double sigma, WindowKind kind, int m, std::span<const double> nodes);

  int degree() const { return degree_; }
  int oversampled() const { return n_over_; }
  const WindowSpec& window() const { return window_; }
  std::span<const double> nodes() const { return nodes_; }
  /// Exactly 2m entries per node: grid points floor(σN x_j) - m + 1 .. floor(σN x_j) + m.
  std::span<const SpreadEntry> spread_row(std::size_t node) const;
  /// φ̂(k) for k ∈ I_N, stored from k = -N/2.
  std::span<const double> hat_table() const { return hat_; }

  std::vector<Complex> trafo(std::span<const Complex> coeffs) const;
  std::vector<Complex> adjoint(std::span<const Complex> values) const;

 private:
  int degree_;
  int n_over_;
  WindowSpec window_;
  std::vector<double> nodes_;
  std::vector<SpreadEntry> spread_;
  std::vector<double> hat_;
  FftPlan fft_;
};

}  // namespace nnfft
