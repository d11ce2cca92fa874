#include "nnfft/windows.hpp"

#include <cmath>
#include <numbers>

#include "nnfft/errors.hpp"
#include "nnfft/quadrature.hpp"
#include "nnfft/special.hpp"

namespace nnfft {
namespace {

constexpr double kPi = std::numbers::pi;

// sinh and I₀ of the shape parameter must stay representable.
constexpr double kMaxBeta = 700.0;

}  // namespace

WindowKind parse_window_kind(std::string_view name) {
  if (name == "sinh") return WindowKind::SinhType;
  if (name == "bspline") return WindowKind::BSpline;
  if (name == "algebraic") return WindowKind::Algebraic;
  if (name == "kaiser-bessel") return WindowKind::KaiserBessel;
  throw ParameterError("unknown window kind '" + std::string(name) +
                       "' (expected sinh, bspline, algebraic or kaiser-bessel)");
}

std::string to_string(WindowKind kind) {
  switch (kind) {
    case WindowKind::SinhType: return "sinh";
    case WindowKind::BSpline: return "bspline";
    case WindowKind::Algebraic: return "algebraic";
    case WindowKind::KaiserBessel: return "kaiser-bessel";
  }
  return "unknown";
}

WindowSpec::WindowSpec(WindowKind kind, int m, double sigma, int n_grid)
    : kind_(kind), m_(m), sigma_(sigma), n_grid_(n_grid) {
  if (m < 2) throw ParameterError("window: m >= 2 required, got m = " + std::to_string(m));
  if (!(sigma > 1.0)) throw ParameterError("window: sigma > 1 required");
  if (n_grid <= 0 || n_grid % 2 != 0) {
    throw ParameterError("window: n_grid must be a positive even integer, got " +
                         std::to_string(n_grid));
  }
  if (2 * m > n_grid) {
    throw ParameterError("window: 2m <= n_grid violated (m = " + std::to_string(m) +
                         ", n_grid = " + std::to_string(n_grid) + ")");
  }
  switch (kind) {
    case WindowKind::SinhType:
      if (sigma < 1.25 - 1e-12 || sigma > 2.0 + 1e-12) {
        throw ParameterError("sinh window: sigma in [5/4, 2] required, got " +
                             std::to_string(sigma));
      }
      beta_ = 2.0 * kPi * m * (1.0 - 0.5 / sigma);
      if (beta_ > kMaxBeta) throw ParameterError("sinh window: shape parameter too large");
      norm_ = std::sinh(beta_);
      break;
    case WindowKind::KaiserBessel:
      beta_ = 2.0 * kPi * m * (1.0 - 0.5 / sigma);
      if (beta_ > kMaxBeta) throw ParameterError("kaiser-bessel window: shape parameter too large");
      norm_ = special::bessel_i0(beta_) - 1.0;
      break;
    case WindowKind::Algebraic:
      if (!(sigma > kPi / 3.0)) {
        throw ParameterError("algebraic window: sigma > pi/3 required");
      }
      beta_ = 3.0 * m;
      break;
    case WindowKind::BSpline:
      norm_ = special::cardinal_bspline(2 * m, 0.0);
      break;
  }
}

double WindowSpec::omega(double x) const {
  const double ax = std::abs(x);
  if (ax >= 1.0) return 0.0;
  switch (kind_) {
    case WindowKind::SinhType:
      return std::sinh(beta_ * std::sqrt((1.0 - ax) * (1.0 + ax))) / norm_;
    case WindowKind::KaiserBessel:
      return (special::bessel_i0(beta_ * std::sqrt((1.0 - ax) * (1.0 + ax))) - 1.0) / norm_;
    case WindowKind::Algebraic:
      return std::pow((1.0 - ax) * (1.0 + ax), beta_ - 0.5);
    case WindowKind::BSpline:
      return special::cardinal_bspline(2 * m_, m_ * ax) / norm_;
  }
  return 0.0;
}

double WindowSpec::omega_hat_numeric(double v) const {
  const auto integrand = [this, v](double x) {
    return omega(x) * std::cos(2.0 * kPi * v * x);
  };
  return 2.0 * quadrature::integrate(integrand, 0.0, 1.0, 0.5e-12);
}

double WindowSpec::omega_hat(double v) const {
  const double av = std::abs(v);
  switch (kind_) {
    case WindowKind::SinhType: {
      const double scale = kPi * beta_ / norm_;
      const double edge = beta_ / (2.0 * kPi);  // m(1 - 1/(2σ))
      const double tv = 2.0 * kPi * av;
      if (av < edge) {
        const double w = std::sqrt((beta_ - tv) * (beta_ + tv));
        const double ratio = w < 1e-8 ? 0.5 : special::bessel_i1(w) / w;
        return scale * ratio;
      }
      if (av == edge) return 0.5 * scale;
      const double w = std::sqrt((tv - beta_) * (tv + beta_));
      const double ratio = w < 1e-8 ? 0.5 : special::bessel_j1(w) / w;
      return scale * ratio;
    }
    case WindowKind::BSpline: {
      const double s = special::sinc(kPi * av / m_);
      return std::pow(s, 2 * m_) / (m_ * norm_);
    }
    case WindowKind::KaiserBessel: {
      // 2/(I₀(β)-1) · [sinh(w)/w - sin(2πv)/(2πv)], w = √(β² - 4π²v²),
      // with sinh(w)/w continued by sin(|w|)/|w| past the cut-off.
      const double tv = 2.0 * kPi * av;
      double shape;
      if (tv < beta_) {
        const double w = std::sqrt((beta_ - tv) * (beta_ + tv));
        shape = w < 1e-8 ? 1.0 : std::sinh(w) / w;
      } else {
        const double w = std::sqrt((tv - beta_) * (tv + beta_));
        shape = special::sinc(w);
      }
      return 2.0 * (shape - special::sinc(tv)) / norm_;
    }
    case WindowKind::Algebraic:
      return omega_hat_numeric(v);
  }
  return 0.0;
}

double WindowSpec::phi(double t) const {
  return omega(n_grid_ * t / m_);
}

double WindowSpec::phi_hat(double v) const {
  const double scale = static_cast<double>(m_) / n_grid_;
  return scale * omega_hat(scale * v);
}

}  // namespace nnfft
