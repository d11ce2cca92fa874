#pragma once

#include <span>
#include <vector>

#include "nnfft/fft.hpp"
#include "nnfft/windows.hpp"

namespace nnfft {

/// Validated parameter set of the NNFFT.
///
/// N1 = σ₁N and N2 = σ₂(N1 + 2m₁) are even integers, a = 1 + 2m₁/N1.
/// sigma1 and sigma2 hold the effective factors N1/N and N2/(N1 + 2m₁).
struct NnfftGeometry {
  int N = 0;
  int M1 = 0;
  int M2 = 0;
  double sigma1 = 0.0;
  double sigma2 = 0.0;
  int m1 = 0;
  int m2 = 0;
  int N1 = 0;
  int N2 = 0;
  double a = 0.0;

  /// Requires σ₁N and σ₂(N1 + 2m₁) to be even integers, 2m₁ <= N1/2 and
  /// 2m₂ <= (1 - 1/σ₁)N2. Throws ParameterError naming the failed condition.
  static NnfftGeometry make(int N, int M1, int M2, double sigma1, double sigma2, int m1, int m2);

  /// Like make(), but rounds σ₁N and σ₂(N1 + 2m₁) up to the next even
  /// integer first; the effective oversampling factors are stored.
  static NnfftGeometry make_rounded(int N, int M1, int M2, double sigma1, double sigma2, int m1,
                                    int m2);

  /// Largest admissible |v_k|, 1/(2a).
  double max_frequency() const { return 0.5 / a; }
  /// Length of the step-1 index set I_{N1+2m1}.
  int spread_length() const { return N1 + 2 * m1; }
};

struct RescaledFrequencies {
  int n_star = 0;
  std::vector<double> v_star;
};

/// N* = N + ⌈2m₁/σ₁⌉ and v* = (N/N*)·v, so that N*·v* = N·v and
/// |v*| <= 1/(2a) for the geometry built from N*. Requires |v_k| <= 1/2.
RescaledFrequencies rescale_frequencies(int N, std::span<const double> v, double sigma1, int m1);

/// Index and window value of one nonzero table entry.
struct TableEntry {
  int index;
  double weight;
};

/// Fast evaluation of f(x_j) = Σ_k f_k e^{-2πiNv_k x_j} with nonequispaced
/// v_k ∈ [-1/(2a), 1/(2a)] and x_j ∈ [-1/2, 1/2].
///
/// Steps: spread f onto I_{N1+2m1} with φ₁, deconvolve by φ̂₂(ℓ), FFT of
/// length N2, gather with φ₂ at x_j/σ₁, divide by φ̂₁(Nx_j).
class NnfftPlan {
 public:
  NnfftPlan(const NnfftGeometry& geometry, std::span<const double> freqs,
            std::span<const double> nodes, WindowKind kind1 = WindowKind::SinhType,
            WindowKind kind2 = WindowKind::SinhType);

  const NnfftGeometry& geometry() const { return geometry_; }
  const WindowSpec& window1() const { return window1_; }
  const WindowSpec& window2() const { return window2_; }
  std::span<const double> freqs() const { return freqs_; }
  std::span<const double> nodes() const { return nodes_; }

  /// φ̂₁(Nx_j) per node.
  std::span<const double> hat1_at_nodes() const { return hat1_; }
  /// φ̂₂(ℓ) for ℓ ∈ I_{N1+2m1}, stored from ℓ = -(N1/2 + m1).
  std::span<const double> hat2_at_freqs() const { return hat2_; }
  /// Entries (ℓ, φ₁(ℓ/N1 - v_k)) with |ℓ - N1 v_k| < m₁; ℓ is the signed index.
  std::span<const TableEntry> spread_row(std::size_t k) const;
  /// Entries (s, φ₂(x_j/σ₁ - s/N2)) with |s - N2 x_j/σ₁| < m₂; s is the signed index.
  std::span<const TableEntry> gather_row(std::size_t j) const;

  /// Steps 1-2: ĝ_ℓ = g_ℓ/φ̂₂(ℓ) for ℓ ∈ I_{N1+2m1}, indexed from -(N1/2 + m1).
  std::vector<Complex> deconvolved_grid(std::span<const Complex> coeffs) const;
  /// Steps 1-3: h_s for s ∈ I_{N2}, indexed from -N2/2.
  std::vector<Complex> grid_coefficients(std::span<const Complex> coeffs) const;
  /// All steps; returns approximations of f(x_j).
  std::vector<Complex> trafo(std::span<const Complex> coeffs) const;

 private:
  std::vector<Complex> fft_grid(std::span<const Complex> coeffs) const;

  NnfftGeometry geometry_;
  WindowSpec window1_;
  WindowSpec window2_;
  std::vector<double> freqs_;
  std::vector<double> nodes_;
  std::vector<double> hat1_;
  std::vector<double> hat2_;
  std::vector<TableEntry> spread_;
  std::vector<std::size_t> spread_offsets_;
  std::vector<TableEntry> gather_;
  std::vector<std::size_t> gather_offsets_;
  FftPlan fft_;
};

}  // namespace nnfft
