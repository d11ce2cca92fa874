#include "nnfft/quadrature.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace nnfft::quadrature {
namespace {

constexpr int kOrder = 10;

struct GaussLegendreRule {
  std::array<double, kOrder> nodes{};
  std::array<double, kOrder> weights{};
};

// Newton iteration on P_n from the Chebyshev-like initial guesses.
GaussLegendreRule make_rule() {
  GaussLegendreRule rule;
  for (int i = 0; i < kOrder; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (kOrder + 0.5));
    double derivative = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int n = 2; n <= kOrder; ++n) {
        const double p2 = ((2.0 * n - 1.0) * x * p1 - (n - 1.0) * p0) / n;
        p0 = p1;
        p1 = p2;
      }
      derivative = kOrder * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / derivative;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[static_cast<std::size_t>(i)] = x;
    rule.weights[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * derivative * derivative);
  }
  return rule;
}

const GaussLegendreRule& rule() {
  static const GaussLegendreRule r = make_rule();
  return r;
}

class Integrator {
 public:
  Integrator(const std::function<double(double)>& f, std::size_t max_evals)
      : f_(f), max_evals_(max_evals) {}

  double panel(double a, double b) {
    const auto& gl = rule();
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double sum = 0.0;
    for (int i = 0; i < kOrder; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      sum += gl.weights[ui] * f_(mid + half * gl.nodes[ui]);
    }
    evals_ += kOrder;
    return half * sum;
  }

  double refine(double a, double b, double whole, double tol, int depth) {
    const double mid = 0.5 * (a + b);
    const double left = panel(a, mid);
    const double right = panel(mid, b);
    const double both = left + right;
    if (std::abs(both - whole) <= tol || evals_ >= max_evals_ || depth >= 60) {
      return both;
    }
    return refine(a, mid, left, 0.5 * tol, depth + 1) +
           refine(mid, b, right, 0.5 * tol, depth + 1);
  }

 private:
  const std::function<double(double)>& f_;
  std::size_t max_evals_;
  std::size_t evals_ = 0;
};

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b, double abs_tol,
                 std::size_t max_evals) {
  if (a == b) return 0.0;
  Integrator integrator(f, max_evals);
  const double whole = integrator.panel(a, b);
  return integrator.refine(a, b, whole, abs_tol, 0);
}

}  // namespace nnfft::quadrature
