#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nnfft/bounds.hpp"
#include "nnfft/fft.hpp"
#include "nnfft/nfft.hpp"
#include "nnfft/nnfft.hpp"
#include "nnfft/sinc_approx.hpp"
#include "nnfft/windows.hpp"

namespace nnfft {

/// Window parameters shared by both inner transforms.
struct NnfftParams {
  double sigma1 = 2.0;
  double sigma2 = 2.0;
  int m1 = 6;
  int m2 = 6;
  WindowKind kind1 = WindowKind::SinhType;
  WindowKind kind2 = WindowKind::SinhType;
};

enum class SincMode { GeneralGeneral, EquispacedSources, EquispacedTargets, EquispacedBoth };
std::string to_string(SincMode mode);

struct SincOptions {
  /// Quadrature size; 0 selects from epsilon, or 4N when epsilon is 0 too.
  int n = 0;
  /// Target accuracy of the sinc approximation, used when n == 0.
  double epsilon = 0.0;
  NnfftParams params;
  /// Replace an inner NNFFT by an NFFT (or adjoint NFFT) when the node set
  /// is a_k = k/L₁ or b_ℓ = ℓ/N (tolerance 1e-12).
  bool detect_equispaced = true;
};

/// Fast evaluation of h(b_ℓ) = Σ_k c_k sinc(Nπ(b_ℓ - a_k)) for
/// a_k, b_ℓ ∈ [-1/2, 1/2].
///
/// The sinc kernel is replaced by Σ_j w_j e^{-πiNz_j(·)}, giving
///   g_j = Σ_k c_k e^{-πiNz_j a_k}    (NNFFT, or NFFT for equispaced a)
///   α_j = w_j g_j
///   h_ℓ = Σ_j α_j e^{πiNz_j b_ℓ}     (NNFFT, or adjoint NFFT for equispaced b)
/// The NNFFT frequencies ±z_j/2 and a_k are rescaled to the bandwidth
/// N* = N + ⌈2m₁/σ₁⌉.
class SincPlan {
 public:
  SincPlan(int N, std::span<const double> sources, std::span<const double> targets,
           const SincOptions& options = {});

  int bandwidth() const { return N_; }
  /// Rescaled bandwidth N* used by the inner NNFFTs.
  int bandwidth_star() const { return n_star_; }
  int quadrature_size() const { return quad_.n; }
  const CcQuadrature& quadrature() const { return quad_; }
  SincMode mode() const { return mode_; }
  const NnfftParams& params() const { return params_; }
  std::size_t source_count() const { return L1_; }
  std::size_t target_count() const { return L2_; }

  std::vector<Complex> transform(std::span<const Complex> coeffs) const;

  /// Sinh-window constants for the N* geometry with ε = bound_cc_sinc(N, n/N).
  bounds::BoundReport bound_report() const;

 private:
  std::vector<Complex> step1(std::span<const Complex> coeffs) const;
  std::vector<Complex> step3(std::span<const Complex> alpha) const;

  int N_;
  int n_star_;
  std::size_t L1_;
  std::size_t L2_;
  NnfftParams params_;
  CcQuadrature quad_;
  SincMode mode_ = SincMode::GeneralGeneral;
  std::optional<NfftPlan> source_nfft_;
  std::optional<NnfftPlan> source_nnfft_;
  std::optional<NfftPlan> target_nfft_;
  std::optional<NnfftPlan> target_nnfft_;
};

}  // namespace nnfft
