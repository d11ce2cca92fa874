#include "nnfft/fast_sinc.hpp"

#include <cmath>

#include "nnfft/errors.hpp"

namespace nnfft {
namespace {

constexpr double kEquispacedTol = 1e-12;
constexpr double kNodeSlack = 1e-12;

int ceil_even(double value) {
  auto n = static_cast<long>(std::ceil(value - 1e-9));
  if (n % 2 != 0) ++n;
  return static_cast<int>(n);
}

// Oversampling factor with σL rounded up to an even integer.
double nfft_sigma(double sigma, int length) {
  return static_cast<double>(ceil_even(sigma * length)) / length;
}

bool nfft_feasible(int length, const NnfftParams& p) {
  return length >= 2 && length % 2 == 0 && ceil_even(p.sigma1 * length) >= 4 * p.m1;
}

// x_i == (i - L/2)/divisor for all i.
bool is_centered_grid(std::span<const double> x, int divisor) {
  const long half = static_cast<long>(x.size()) / 2;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double expected = static_cast<double>(static_cast<long>(i) - half) / divisor;
    if (std::abs(x[i] - expected) > kEquispacedTol) return false;
  }
  return true;
}

double wrap_unit(double x) {
  double r = x - std::nearbyint(x);
  if (r > 0.5) r -= 1.0;
  if (r < -0.5) r += 1.0;
  return r;
}

}  // namespace

std::string to_string(SincMode mode) {
  switch (mode) {
    case SincMode::GeneralGeneral: return "general-general";
    case SincMode::EquispacedSources: return "equispaced-sources";
    case SincMode::EquispacedTargets: return "equispaced-targets";
    case SincMode::EquispacedBoth: return "equispaced-both";
  }
  return "unknown";
}

SincPlan::SincPlan(int N, std::span<const double> sources, std::span<const double> targets,
                   const SincOptions& options)
    : N_(N), n_star_(0), L1_(sources.size()), L2_(targets.size()), params_(options.params) {
  if (N <= 0) throw ParameterError("sinc_plan: N must be positive");
  if (sources.empty() || targets.empty()) throw ParameterError("sinc_plan: node sets must be nonempty");
  for (double x : sources) {
    if (!(std::abs(x) <= 0.5 + kNodeSlack)) throw ParameterError("sinc_plan: |a_k| <= 1/2 violated");
  }
  for (double x : targets) {
    if (!(std::abs(x) <= 0.5 + kNodeSlack)) throw ParameterError("sinc_plan: |b_l| <= 1/2 violated");
  }

  int n = options.n;
  if (n == 0) {
    n = options.epsilon > 0.0 ? bounds::choose_n(N, options.epsilon) : 4 * N;
  }
  quad_ = make_cc_quadrature(n);
  const int nodes = n + 1;
  const auto& p = params_;
  n_star_ = N + static_cast<int>(std::ceil(2.0 * p.m1 / p.sigma1 - 1e-9));

  const int l1 = static_cast<int>(L1_);
  const bool eq_sources = options.detect_equispaced && nfft_feasible(l1, p) &&
                          is_centered_grid(sources, l1);
  const bool eq_targets = options.detect_equispaced && L2_ == static_cast<std::size_t>(N) &&
                          nfft_feasible(N, p) && is_centered_grid(targets, N);
  mode_ = eq_sources ? (eq_targets ? SincMode::EquispacedBoth : SincMode::EquispacedSources)
                     : (eq_targets ? SincMode::EquispacedTargets : SincMode::GeneralGeneral);

  std::vector<double> half_z(quad_.z.size());
  for (std::size_t j = 0; j < half_z.size(); ++j) half_z[j] = 0.5 * quad_.z[j];

  if (eq_sources) {
    // e^{-πiNz_j k/L₁} = e^{2πik·x_j} with x_j = -N z_j/(2L₁) taken modulo 1.
    std::vector<double> x(quad_.z.size());
    for (std::size_t j = 0; j < x.size(); ++j) x[j] = wrap_unit(-N * quad_.z[j] / (2.0 * l1));
    source_nfft_.emplace(l1, nfft_sigma(p.sigma1, l1), p.kind1, p.m1, x);
  } else {
    const auto scaled = rescale_frequencies(N, sources, p.sigma1, p.m1);
    const auto geo = NnfftGeometry::make_rounded(scaled.n_star, l1, nodes, p.sigma1, p.sigma2,
                                                 p.m1, p.m2);
    source_nnfft_.emplace(geo, scaled.v_star, half_z, p.kind1, p.kind2);
  }

  if (eq_targets) {
    std::vector<double> y(half_z.size());
    for (std::size_t j = 0; j < y.size(); ++j) y[j] = -half_z[j];
    target_nfft_.emplace(N, nfft_sigma(p.sigma1, N), p.kind1, p.m1, y);
  } else {
    std::vector<double> neg(half_z.size());
    for (std::size_t j = 0; j < neg.size(); ++j) neg[j] = -half_z[j];
    const auto scaled = rescale_frequencies(N, neg, p.sigma1, p.m1);
    const auto geo = NnfftGeometry::make_rounded(scaled.n_star, nodes, static_cast<int>(L2_),
                                                 p.sigma1, p.sigma2, p.m1, p.m2);
    target_nnfft_.emplace(geo, scaled.v_star, targets, p.kind1, p.kind2);
  }
}

std::vector<Complex> SincPlan::step1(std::span<const Complex> coeffs) const {
  if (source_nfft_) return source_nfft_->trafo(coeffs);
  return source_nnfft_->trafo(coeffs);
}

std::vector<Complex> SincPlan::step3(std::span<const Complex> alpha) const {
  if (target_nfft_) return target_nfft_->adjoint(alpha);
  return target_nnfft_->trafo(alpha);
}

std::vector<Complex> SincPlan::transform(std::span<const Complex> coeffs) const {
  if (coeffs.size() != L1_) {
    throw ParameterError("fast_sinc_transform: expected " + std::to_string(L1_) + " coefficients");
  }
  std::vector<Complex> g = step1(coeffs);
  for (std::size_t j = 0; j < g.size(); ++j) g[j] *= quad_.w[j];
  return step3(g);
}

bounds::BoundReport SincPlan::bound_report() const {
  const auto geo = NnfftGeometry::make_rounded(n_star_, 1, 1, params_.sigma1, params_.sigma2,
                                               params_.m1, params_.m2);
  const double eps = bounds::bound_cc_sinc(N_, static_cast<double>(quad_.n) / N_);
  return bounds::make_bound_report(n_star_, geo.sigma1, geo.sigma2, params_.m1, params_.m2, eps);
}

}  // namespace nnfft
