#include "nnfft/bounds.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "nnfft/errors.hpp"
#include "nnfft/special.hpp"

namespace nnfft::bounds {
namespace {

void check_sinh_sigma(double sigma) {
  if (!(sigma >= 1.25 - 1e-12 && sigma <= 2.0 + 1e-12)) {
    throw ParameterError("sinh-type window bound needs sigma in [5/4, 2], got " +
                         std::to_string(sigma));
  }
}

void check_m(int m) {
  if (m < 2) throw ParameterError("bound: m must be >= 2, got " + std::to_string(m));
}

}  // namespace

double bound_general_window(double c1, double c2, double mu, int m, double sigma,
                            double omega_hat_at) {
  if (!(mu > 1.0)) throw ParameterError("bound_general_window: mu must be > 1");
  if (!(sigma > 1.0) || m < 1) throw ParameterError("bound_general_window: need sigma > 1, m >= 1");
  if (!(omega_hat_at > 0.0)) throw ParameterError("bound_general_window: omega_hat must be > 0");
  const double tail = 2.0 * c2 / ((mu - 1.0) * std::pow(m, mu)) *
                      std::pow(1.0 - 1.0 / (2.0 * sigma), 1.0 - mu);
  return (2.0 * c1 + tail) / omega_hat_at;
}

double bound_sinh_E(int m, double sigma) {
  check_m(m);
  check_sinh_sigma(sigma);
  return (24.0 * std::pow(m, 1.5) + 10.0) *
         std::exp(-2.0 * std::numbers::pi * m * std::sqrt(1.0 - 1.0 / sigma));
}

double hat_phi_sinh_at_half(int N, double sigma, int m) {
  check_m(m);
  if (N <= 0 || !(sigma > 1.0)) throw ParameterError("hat_phi_sinh_at_half: need N > 0, sigma > 1");
  const double pi = std::numbers::pi;
  const double n1 = sigma * N;
  const double beta = 2.0 * pi * m * (1.0 - 1.0 / (2.0 * sigma));
  const double root = std::sqrt(1.0 - 1.0 / sigma);
  return m * pi / (n1 * std::sinh(beta)) * (1.0 - 1.0 / (2.0 * sigma)) / root *
         special::bessel_i1(2.0 * pi * m * root);
}

double bound_nnfft_sinh(int N, double sigma1, double sigma2, int m1, int m2) {
  check_m(m1);
  check_m(m2);
  check_sinh_sigma(sigma1);
  check_sinh_sigma(sigma2);
  if (N <= 0) throw ParameterError("bound_nnfft_sinh: N must be positive");
  if (m2 < m1) {
    throw ParameterError("bound_nnfft_sinh: hypothesis m2 >= m1 violated (m1 = " +
                         std::to_string(m1) + ", m2 = " + std::to_string(m2) + ")");
  }
  const double pi = std::numbers::pi;
  const double n1 = sigma1 * N;
  const double root1 = std::sqrt(1.0 - 1.0 / sigma1);
  const double root2 = std::sqrt(1.0 - 1.0 / sigma2);
  const double first = (24.0 * std::pow(m1, 1.5) + 10.0) * std::exp(-2.0 * pi * m1 * root1);
  const double second = (24.0 * std::pow(m2, 1.5) + 10.0) * (2.0 * n1 + 4.0 * m1) /
                         std::sqrt(2.0 * m1 * pi) *
                         std::exp(2.0 * pi * m1 * (1.0 - root1 - 1.0 / (2.0 * sigma1)) -
                                  2.0 * pi * m2 * root2);
  return first + second;
}

double nnfft_components_sinh(int N, double sigma1, double sigma2, int m1, int m2) {
  const double a = 1.0 + 2.0 * m1 / (sigma1 * N);
  return bound_sinh_E(m1, sigma1) +
         a * bound_sinh_E(m2, sigma2) / hat_phi_sinh_at_half(N, sigma1, m1);
}

double bound_cc_sinc(int N, double nu) {
  if (N <= 0 || !(nu > 0.0)) throw ParameterError("bound_cc_sinc: need N > 0, nu > 0");
  const double e2m1 = std::expm1(2.0);
  return 36.0 * (1.0 + std::exp(-2.0 * kCcConstant * N)) / (35.0 * e2m1) *
         std::exp(-N * (nu - kCcConstant));
}

int choose_n(int N, double epsilon, NShape shape) {
  if (N <= 0) throw ParameterError("choose_n: N must be positive");
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw ParameterError("choose_n: epsilon must lie in (0, 1)");
  constexpr long kLimit = 1L << 30;
  if (shape == NShape::PowerOfTwo) {
    for (long n = 2; n <= kLimit; n *= 2) {
      if (bound_cc_sinc(N, static_cast<double>(n) / N) < epsilon) return static_cast<int>(n);
    }
  } else {
    for (long nu = 1; nu * N <= kLimit; ++nu) {
      if (bound_cc_sinc(N, static_cast<double>(nu)) < epsilon) return static_cast<int>(nu * N);
    }
  }
  throw NumericError("choose_n: no admissible n below 2^30");
}

double bound_fast_sinc(double epsilon, double e1, double e2, double a, double hat_phi1_half,
                       bool simplified) {
  if (epsilon < 0.0 || e1 < 0.0 || e2 < 0.0 || !(a > 0.0) || !(hat_phi1_half > 0.0)) {
    throw ParameterError("bound_fast_sinc: inputs must be nonnegative, a and hat_phi1_half positive");
  }
  const double b = e1 + a * e2 / hat_phi1_half;
  if (!simplified) return epsilon + 2.0 * b + b * b;
  if (b > 1.0) {
    throw ParameterError("bound_fast_sinc: simplified form needs E1 + a*E2/hat_phi1(N/2) <= 1, got " +
                         std::to_string(b));
  }
  return epsilon + 3.0 * b;
}

BoundReport make_bound_report(int N, double sigma1, double sigma2, int m1, int m2,
                              double cc_bound) {
  BoundReport r;
  r.e1 = bound_sinh_E(m1, sigma1);
  r.e2 = bound_sinh_E(m2, sigma2);
  r.hat_phi1_half = hat_phi_sinh_at_half(N, sigma1, m1);
  r.a = 1.0 + 2.0 * m1 / (sigma1 * N);
  r.nnfft_bound = bound_nnfft_sinh(N, sigma1, sigma2, m1, m2);
  r.cc_bound = cc_bound;
  const double b = r.e1 + r.a * r.e2 / r.hat_phi1_half;
  r.simplified_valid = b <= 1.0;
  r.fast_sinc_bound_full = bound_fast_sinc(cc_bound, r.e1, r.e2, r.a, r.hat_phi1_half, false);
  r.fast_sinc_bound_simplified = cc_bound + 3.0 * b;
  return r;
}

}  // namespace nnfft::bounds
