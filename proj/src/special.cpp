#include "nnfft/special.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "nnfft/errors.hpp"

namespace nnfft::special {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Above this argument the large-x expansion of I_nu is accurate to
// machine precision (the smallest term is about e^{-2x}).
constexpr double kBesselISeriesLimit = 30.0;

// J1 regimes: power series below 8, Miller recurrence up to 40, Hankel
// expansion beyond.
constexpr double kBesselJSeriesLimit = 8.0;
constexpr double kBesselJAsymptoticLimit = 40.0;

void require_finite(double x, const char* name) {
  if (!std::isfinite(x)) {
    throw std::domain_error(std::string(name) + ": argument is not finite");
  }
}

// Sum of (x/2)^{2k+nu} / (k! (k+nu)!) for nu in {0, 1}.
double bessel_i_series(int nu, double x) {
  const double q = 0.25 * x * x;
  double term = nu == 0 ? 1.0 : 0.5 * x;
  double sum = term;
  for (int k = 1; k < 500; ++k) {
    term *= q / (static_cast<double>(k) * static_cast<double>(k + nu));
    sum += term;
    if (term < kEps * sum * 0.25) break;
  }
  return sum;
}

// e^x / sqrt(2 pi x) * sum_k (-1)^k a_k(nu) / x^k, evaluated as
// e^{x/2} * (e^{x/2} * ...) so that the prefactor itself does not overflow
// before the result does.
double bessel_i_asymptotic(int nu, double x) {
  const double mu = 4.0 * nu * nu;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 200; ++k) {
    const double odd = 2.0 * k - 1.0;
    const double next = -term * (mu - odd * odd) / (k * 8.0 * x);
    if (std::abs(next) >= std::abs(term)) break;
    term = next;
    sum += term;
    if (std::abs(term) < kEps * std::abs(sum) * 0.25) break;
  }
  const double half = std::exp(0.5 * x);
  const double value = half * (half * sum / std::sqrt(2.0 * std::numbers::pi * x));
  if (!std::isfinite(value)) {
    throw std::overflow_error("bessel_i: result overflows double range");
  }
  return value;
}

double bessel_i(int nu, double x) {
  const double ax = std::abs(x);
  double value = ax < kBesselISeriesLimit ? bessel_i_series(nu, ax)
                                          : bessel_i_asymptotic(nu, ax);
  return (nu == 1 && x < 0.0) ? -value : value;
}

double bessel_j1_series(double x) {
  const double q = 0.25 * x * x;
  double term = 0.5 * x;
  double sum = term;
  for (int k = 1; k < 200; ++k) {
    term *= -q / (static_cast<double>(k) * static_cast<double>(k + 1));
    sum += term;
    if (std::abs(term) < kEps * 1e-3) break;
  }
  return sum;
}

// Miller's backward recurrence normalised by J0 + 2 sum J_{2k} = 1.
double bessel_j1_miller(double x) {
  int start = static_cast<int>(x) + 50;
  if (start % 2 != 0) ++start;
  double next = 0.0;   // J_{k+1}
  double cur = 1e-30;  // J_k, k = start
  double norm = 2.0 * cur;
  double j1 = 0.0;
  for (int k = start; k > 0; --k) {
    const double prev = (2.0 * k / x) * cur - next;  // J_{k-1}
    next = cur;
    cur = prev;
    const int index = k - 1;
    if (index == 1) j1 = cur;
    if (index > 0 && index % 2 == 0) norm += 2.0 * cur;
    if (std::abs(cur) > 1e250) {
      cur *= 1e-250;
      next *= 1e-250;
      norm *= 1e-250;
      j1 *= 1e-250;
    }
  }
  norm += cur;  // J_0
  return j1 / norm;
}

double bessel_j1_asymptotic(double x) {
  // Hankel expansion with mu = 4; chi = x - 3 pi / 4 expanded through the
  // addition theorem to avoid losing digits in the argument.
  const double mu = 4.0;
  double p = 1.0;
  double q = 0.0;
  double term = 1.0;
  for (int k = 1; k < 200; ++k) {
    const double odd = 2.0 * k - 1.0;
    const double next = term * (mu - odd * odd) / (k * 8.0 * x);
    if (std::abs(next) >= std::abs(term) && k > 2) break;
    term = next;
    // term = a_k / x^k; a_k contributes to P for even k, Q for odd k
    // with alternating signs (-1)^{floor(k/2)}.
    const double signed_term = ((k / 2) % 2 == 0) ? term : -term;
    if (k % 2 == 0) {
      p += signed_term;
    } else {
      q += signed_term;
    }
    if (std::abs(term) < kEps * 1e-3) break;
  }
  const double s = std::sin(x);
  const double c = std::cos(x);
  const double cos_chi = (s - c) * std::numbers::sqrt2 * 0.5;
  const double sin_chi = -(s + c) * std::numbers::sqrt2 * 0.5;
  return std::sqrt(2.0 / (std::numbers::pi * x)) * (p * cos_chi - q * sin_chi);
}

}  // namespace

double bessel_i0(double x) {
  require_finite(x, "bessel_i0");
  return bessel_i(0, x);
}

double bessel_i1(double x) {
  require_finite(x, "bessel_i1");
  return bessel_i(1, x);
}

double bessel_j1(double x) {
  require_finite(x, "bessel_j1");
  const double ax = std::abs(x);
  double value;
  if (ax < kBesselJSeriesLimit) {
    value = bessel_j1_series(ax);
  } else if (ax < kBesselJAsymptoticLimit) {
    value = bessel_j1_miller(ax);
  } else {
    value = bessel_j1_asymptotic(ax);
  }
  return x < 0.0 ? -value : value;
}

double cardinal_bspline(int order, double x) {
  if (order < 2 || order % 2 != 0) {
    throw ParameterError("cardinal_bspline: order must be even and >= 2, got " +
                         std::to_string(order));
  }
  // Shift to the uncentered spline M_order supported on [0, order].
  const double y = x + 0.5 * order;
  if (!(y > 0.0 && y < order)) return 0.0;

  // values[i] holds M_r(y - i); start with the indicator of [0, 1).
  std::vector<double> values(static_cast<std::size_t>(order), 0.0);
  for (int i = 0; i < order; ++i) {
    const double t = y - i;
    values[static_cast<std::size_t>(i)] = (t >= 0.0 && t < 1.0) ? 1.0 : 0.0;
  }
  for (int r = 2; r <= order; ++r) {
    for (int i = 0; i + r <= order; ++i) {
      const double t = y - i;
      const auto ui = static_cast<std::size_t>(i);
      values[ui] = (t * values[ui] + (r - t) * values[ui + 1]) / (r - 1);
    }
  }
  return values[0];
}

double sinc(double y) {
  if (y == 0.0) return 1.0;
  return std::sin(y) / y;
}

}  // namespace nnfft::special
