#pragma once

#include <string>
#include <string_view>

namespace nnfft {

enum class WindowKind { SinhType, BSpline, Algebraic, KaiserBessel };

/// Parses "sinh", "bspline", "algebraic" or "kaiser-bessel".
WindowKind parse_window_kind(std::string_view name);
std::string to_string(WindowKind kind);

/// A window ω supported on [-1, 1] together with its scaled version
/// φ(t) = ω(n_grid·t/m) on the oversampled grid of size n_grid.
///
/// Shape parameters:
///   SinhType      ω(x) = sinh(β√(1-x²)) / sinh β,           β = 2πm(1 - 1/(2σ)), σ ∈ [5/4, 2]
///   KaiserBessel  ω(x) = (I₀(β√(1-x²)) - 1) / (I₀(β) - 1),  β = 2πm(1 - 1/(2σ))
///   Algebraic     ω(x) = (1 - x²)^(β - 1/2),                 β = 3m, σ > π/3
///   BSpline       ω(x) = B_{2m}(m x) / B_{2m}(0)
///
/// The Kaiser-Bessel variant subtracts 1 so that it is continuous at ±1.
/// Instances are immutable; evaluation is thread-safe.
class WindowSpec {
 public:
  WindowSpec(WindowKind kind, int m, double sigma, int n_grid);

  WindowKind kind() const { return kind_; }
  int m() const { return m_; }
  double sigma() const { return sigma_; }
  int n_grid() const { return n_grid_; }
  /// Shape parameter; 0 for the B-spline.
  double beta() const { return beta_; }

  /// ω(x); zero for |x| >= 1.
  double omega(double x) const;
  /// ω̂(v) = 2∫₀¹ ω(x) cos(2πvx) dx. Closed form for sinh, B-spline and
  /// Kaiser-Bessel; adaptive quadrature for the algebraic window.
  double omega_hat(double v) const;
  /// ω̂(v) by adaptive quadrature of the defining integral, for any kind.
  double omega_hat_numeric(double v) const;

  /// φ(t) = ω(n_grid·t/m), supported on [-m/n_grid, m/n_grid].
  double phi(double t) const;
  /// φ̂(v) = (m/n_grid)·ω̂(m·v/n_grid).
  double phi_hat(double v) const;

 private:
  WindowKind kind_;
  int m_;
  double sigma_;
  int n_grid_;
  double beta_ = 0.0;
  double norm_ = 1.0;  // sinh β, B_{2m}(0), or I₀(β) - 1
};

}  // namespace nnfft
