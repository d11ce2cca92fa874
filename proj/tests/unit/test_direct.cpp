#include <doctest.h>

#include <random>

#include "nnfft/direct.hpp"
#include "nnfft/errors.hpp"
#include "nnfft/fft.hpp"
#include "nnfft/special.hpp"
#include "oracles.hpp"

using nnfft::Complex;
namespace direct = nnfft::direct;

TEST_SUITE("direct") {
  TEST_CASE("nndft single terms") {
    const std::vector<Complex> one{1.0};
    const std::vector<double> zero{0.0};
    const std::vector<double> x{-0.5, -0.1, 0.2, 0.5};
    for (const auto& value : direct::nndft(one, zero, x, 17)) CHECK(std::abs(value - 1.0) <= 1e-15);
    const std::vector<double> quarter{0.25};
    const std::vector<double> half{0.5};
    const auto r = direct::nndft(one, quarter, half, 2);
    CHECK(std::abs(r[0] - Complex(0, -1)) <= 1e-15);
  }

  TEST_CASE("nndft against reversed-order long-double summation") {
    std::mt19937_64 rng(5);
    const auto f = oracle::random_complex(rng, 8);
    const auto v = oracle::random_real(rng, 8, -0.5, 0.5);
    const auto x = oracle::random_real(rng, 8, -0.5, 0.5);
    const double N = 37;
    const auto fast = direct::nndft(f, v, x, N);
    for (std::size_t j = 0; j < x.size(); ++j) {
      std::complex<long double> sum = 0;
      for (std::size_t k = f.size(); k-- > 0;) {
        const long double angle = -2 * oracle::kPiL * N * v[k] * x[j];
        sum += std::complex<long double>(f[k].real(), f[k].imag()) *
               std::complex<long double>(std::cos(angle), std::sin(angle));
      }
      CHECK(std::abs(fast[j] - Complex(static_cast<double>(sum.real()), static_cast<double>(sum.imag()))) <= 1e-13);
    }
    direct::Options comp{true};
    CHECK(oracle::max_diff(direct::nndft(f, v, x, N, comp), fast) <= 1e-13);
  }

  TEST_CASE("nndft linearity and length checks") {
    std::mt19937_64 rng(6);
    const auto f = oracle::random_complex(rng, 20);
    const auto g = oracle::random_complex(rng, 20);
    const auto v = oracle::random_real(rng, 20, -0.5, 0.5);
    const auto x = oracle::random_real(rng, 15, -0.5, 0.5);
    const Complex alpha(0.3, -1.2), beta(-2.0, 0.5);
    std::vector<Complex> h(20);
    for (int i = 0; i < 20; ++i) h[i] = alpha * f[i] + beta * g[i];
    const auto lhs = direct::nndft(h, v, x, 64);
    const auto rf = direct::nndft(f, v, x, 64);
    const auto rg = direct::nndft(g, v, x, 64);
    std::vector<Complex> rhs(15);
    for (int j = 0; j < 15; ++j) rhs[j] = alpha * rf[j] + beta * rg[j];
    CHECK(oracle::max_diff(lhs, rhs) <= 1e-13 * oracle::l1(h));
    const std::vector<double> short_v(3, 0.0);
    CHECK_THROWS_AS(direct::nndft(f, short_v, x, 64), nnfft::ParameterError);
  }

  TEST_CASE("ndft examples and FFT agreement") {
    std::vector<Complex> delta(8, 0.0);
    delta[4] = 1.0;  // k = 0
    const std::vector<double> x{-0.5, 0.1, 0.37};
    for (const auto& v : direct::ndft(delta, x)) CHECK(std::abs(v - 1.0) <= 1e-15);
    std::fill(delta.begin(), delta.end(), 0.0);
    delta[5] = 1.0;  // k = 1
    const std::vector<double> half{0.5};
    CHECK(std::abs(direct::ndft(delta, half)[0] + 1.0) <= 1e-15);

    std::mt19937_64 rng(7);
    const auto c = oracle::random_complex(rng, 8);
    std::vector<double> grid(8);
    for (int j = 0; j < 8; ++j) grid[j] = j / 8.0;
    const auto p = direct::ndft(c, grid);
    // p(j/8) = Σ_k c_k e^{2πikj/8}: place c_k at k mod 8 and inverse-FFT.
    std::vector<Complex> buf(8);
    for (int i = 0; i < 8; ++i) buf[(i - 4 + 8) % 8] = c[i];
    const auto ref = nnfft::fft(buf, nnfft::Direction::Inverse);
    CHECK(oracle::max_diff(p, ref) <= 1e-12);
  }

  TEST_CASE("ndft_adjoint is the adjoint of ndft") {
    std::mt19937_64 rng(8);
    const auto c = oracle::random_complex(rng, 16);
    const auto y = oracle::random_complex(rng, 11);
    const auto x = oracle::random_real(rng, 11, -0.5, 0.5);
    const Complex lhs = oracle::dot(y, direct::ndft(c, x));
    const Complex rhs = oracle::dot(direct::ndft_adjoint(y, x, 16), c);
    CHECK(std::abs(lhs - rhs) <= 1e-13 * oracle::l2(c) * oracle::l2(y));
  }

  TEST_CASE("sinc transform examples") {
    const std::vector<Complex> one{1.0};
    const std::vector<double> zero{0.0};
    CHECK(std::abs(direct::sinc_transform(one, zero, zero, 16)[0] - 1.0) <= 1e-15);
    const std::vector<double> b{1.0 / 16};
    CHECK(std::abs(direct::sinc_transform(one, zero, b, 16)[0]) <= 1e-15);
  }

  TEST_CASE("sinc transform matrix with equal node sets is symmetric") {
    std::mt19937_64 rng(9);
    const auto a = oracle::random_real(rng, 9, -0.5, 0.5);
    const int N = 20;
    std::vector<std::vector<Complex>> columns;
    for (std::size_t k = 0; k < a.size(); ++k) {
      std::vector<Complex> e(a.size(), 0.0);
      e[k] = 1.0;
      columns.push_back(direct::sinc_transform(e, a, a, N));
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t k = 0; k < a.size(); ++k) CHECK(std::abs(columns[k][i] - std::conj(columns[i][k])) <= 1e-15);
      CHECK(std::abs(columns[i][i] - 1.0) <= 1e-15);
    }
  }

  TEST_CASE("sinc transform approaches the identity on a common fine grid") {
    const int L = 33;
    std::vector<double> a(L);
    for (int i = 0; i < L; ++i) a[i] = (i - L / 2) / 40.0;
    std::mt19937_64 rng(10);
    const auto c = oracle::random_complex(rng, L);
    const auto h = direct::sinc_transform(c, a, a, 40);
    // sinc(40π·(i-k)/40) vanishes for i != k
    CHECK(oracle::max_diff(h, c) <= 1e-14 * L);
  }
}
