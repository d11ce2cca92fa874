#pragma once

// Closed-form error constants. Every function returns the factor that
// multiplies Σ|f_k| (or Σ|c_k|); callers scale by the ℓ¹ norm themselves.

namespace nnfft::bounds {

/// C = π(e² - 1)/(2e) = π·sinh(1).
inline constexpr double kCcConstant = 3.692003436441323;

/// E_σ(φ) <= (1/ω̂(m/(2σ)))·[2c₁ + 2c₂/((μ-1)m^μ)·(1 - 1/(2σ))^{1-μ}]
/// for windows satisfying the decay condition with constants c₁, c₂, μ.
/// omega_hat_at is ω̂(m/(2σ)). Throws ParameterError for μ <= 1.
double bound_general_window(double c1, double c2, double mu, int m, double sigma,
                            double omega_hat_at);

/// (24 m^{3/2} + 10)·e^{-2πm√(1 - 1/σ)} for the sinh-type window, σ ∈ [5/4, 2].
double bound_sinh_E(int m, double sigma);

/// φ̂_sinh(N/2) for the window on the grid N1 = σN.
double hat_phi_sinh_at_half(int N, double sigma, int m);

/// Combined NNFFT constant for sinh windows in both steps; requires m2 >= m1
/// and σ₁, σ₂ ∈ [5/4, 2].
double bound_nnfft_sinh(int N, double sigma1, double sigma2, int m1, int m2);

/// The component form E₁ + a·E₂/φ̂₁(N/2), with a = 1 + 2m₁/(σ₁N).
double nnfft_components_sinh(int N, double sigma1, double sigma2, int m1, int m2);

/// 36(1 + e^{-2CN})/(35(e² - 1))·e^{-N(ν - C)}.
double bound_cc_sinc(int N, double nu);

enum class NShape { PowerOfTwo, MultipleOfN };

/// Smallest n of the given shape with bound_cc_sinc(N, n/N) < epsilon.
/// PowerOfTwo searches n = 2^t >= 2, MultipleOfN searches n = νN, ν = 1, 2, ...
int choose_n(int N, double epsilon, NShape shape = NShape::PowerOfTwo);

/// ε + 2B + B² (full) or ε + 3B (simplified) with B = e1 + a·e2/hat_phi1_half.
/// The simplified form requires B <= 1 and throws ParameterError otherwise.
double bound_fast_sinc(double epsilon, double e1, double e2, double a, double hat_phi1_half,
                       bool simplified);

struct BoundReport {
  double e1 = 0.0;
  double e2 = 0.0;
  double hat_phi1_half = 0.0;
  double a = 0.0;
  double nnfft_bound = 0.0;
  double cc_bound = 0.0;
  double fast_sinc_bound_full = 0.0;
  /// ε + 3B, evaluated even when simplified_valid is false.
  double fast_sinc_bound_simplified = 0.0;
  /// B = E₁ + a·E₂/φ̂₁(N/2) <= 1.
  bool simplified_valid = false;
};

/// Evaluates all sinh-window constants for the tuple; cc_bound is the
/// quadrature accuracy ε fed into the fast-sinc bounds.
BoundReport make_bound_report(int N, double sigma1, double sigma2, int m1, int m2,
                              double cc_bound);

}  // namespace nnfft::bounds
