#include "nnfft/sinc_approx.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <string>

#include "nnfft/errors.hpp"
#include "nnfft/nfft.hpp"

namespace nnfft {
namespace {

double eps_edge(int k, int n) { return (k == 0 || k == n) ? std::numbers::sqrt2 / 2.0 : 1.0; }

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

// Smallest even integer >= n whose prime factors are 2, 3 and 5.
int next_smooth_even(int n) {
  for (int c = std::max(n + (n % 2), 2);; c += 2) {
    int r = c;
    for (int p : {2, 3, 5}) {
      while (r % p == 0) r /= p;
    }
    if (r == 1) return c;
  }
}

}  // namespace

std::vector<double> cc_weights_direct(int n) {
  if (n < 2) throw ParameterError("cc_weights_direct: n must be >= 2, got " + std::to_string(n));
  // cos(2jkπ/n) = cos(πq/n) with q = 2jk mod 2n, so one table of 2n cosines suffices.
  std::vector<double> cosines(2 * static_cast<std::size_t>(n));
  for (int q = 0; q < 2 * n; ++q) cosines[static_cast<std::size_t>(q)] = std::cos(std::numbers::pi * q / n);

  const int upper = n / 2;
  std::vector<double> w(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    double sum = 0.0;
    for (int j = 0; j <= upper; ++j) {
      const double e = eps_edge(2 * j, n);
      const double term = 2.0 / (1.0 - 4.0 * j * static_cast<double>(j));
      const long q = (2L * j * k) % (2L * n);
      sum += e * e * term * cosines[static_cast<std::size_t>(q)];
    }
    const double ek = eps_edge(k, n);
    w[static_cast<std::size_t>(k)] = ek * ek * sum / n;
  }
  return w;
}

std::vector<double> cc_dct_input(int n) {
  if (n < 2 || n % 2 != 0) throw ParameterError("cc_dct_input: n must be even and >= 2");
  std::vector<double> a(static_cast<std::size_t>(n) + 1, 0.0);
  for (int j = 0; 2 * j <= n; ++j) {
    a[static_cast<std::size_t>(2 * j)] =
        eps_edge(2 * j, n) * 2.0 / (1.0 - 4.0 * j * static_cast<double>(j));
  }
  return a;
}

std::vector<double> cc_weights_fast(int n) {
  if (n < 4 || !is_power_of_two(n)) {
    throw ParameterError("cc_weights_fast: n must be a power of two >= 4, got " +
                         std::to_string(n) + " (use cc_weights_direct)");
  }
  const std::vector<double> ahat = dct1(cc_dct_input(n));
  const double scale = 1.0 / std::sqrt(2.0 * n);
  std::vector<double> w(ahat.size());
  for (int k = 0; k <= n; ++k) {
    w[static_cast<std::size_t>(k)] = scale * eps_edge(k, n) * ahat[static_cast<std::size_t>(k)];
  }
  return w;
}

CcQuadrature make_cc_quadrature(int n) {
  CcQuadrature quad;
  quad.n = n;
  quad.w = (n >= 4 && is_power_of_two(n)) ? cc_weights_fast(n) : cc_weights_direct(n);
  quad.z.resize(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    // sin form keeps z_k = -z_{n-k} exact.
    quad.z[static_cast<std::size_t>(k)] = std::sin(std::numbers::pi * (n - 2 * k) / (2.0 * n));
  }
  return quad;
}

std::vector<Complex> sinc_expsum_eval(const CcQuadrature& quad, int N, std::span<const double> x) {
  if (N <= 0) throw ParameterError("sinc_expsum_eval: N must be positive");
  std::vector<Complex> out(x.size());
  for (std::size_t r = 0; r < x.size(); ++r) {
    Complex sum{};
    for (std::size_t k = 0; k < quad.w.size(); ++k) {
      // e^{-πiNz_k x}, phase reduced modulo 2π
      double t = 0.5 * N * quad.z[k] * x[r];
      t -= std::nearbyint(t);
      const double angle = -2.0 * std::numbers::pi * t;
      sum += quad.w[k] * Complex(std::cos(angle), std::sin(angle));
    }
    out[r] = sum;
  }
  return out;
}

std::vector<Complex> sinc_expsum_grid(const CcQuadrature& quad, int N, int R) {
  if (N <= 0) throw ParameterError("sinc_expsum_grid: N must be positive");
  if (R < 4 * N || R % 2 != 0) {
    throw ParameterError("sinc_expsum_grid: R must be even and >= 4N");
  }
  // Σ_k w_k e^{-2πi r y_k} with y_k = N z_k / R is an adjoint NFFT of degree D
  // restricted to r ∈ I_R ⊂ I_D.
  const int degree = next_smooth_even(std::max(R, 20));
  std::vector<double> nodes(quad.z.size());
  for (std::size_t k = 0; k < nodes.size(); ++k) nodes[k] = N * quad.z[k] / R;
  const NfftPlan plan(degree, 2.0, WindowKind::SinhType, 10, nodes);
  std::vector<Complex> values(quad.w.begin(), quad.w.end());
  const std::vector<Complex> hat = plan.adjoint(values);
  std::vector<Complex> out(static_cast<std::size_t>(R));
  for (int r = -R / 2; r < R / 2; ++r) {
    out[static_cast<std::size_t>(r + R / 2)] = hat[static_cast<std::size_t>(r + degree / 2)];
  }
  return out;
}

void write_cc_csv(std::ostream& os, const CcQuadrature& quad) {
  os << "k,z_k,w_k\n";
  char line[96];
  for (std::size_t k = 0; k < quad.w.size(); ++k) {
    std::snprintf(line, sizeof line, "%zu,%.17g,%.17g\n", k, quad.z[k], quad.w[k]);
    os << line;
  }
}

}  // namespace nnfft
