#include <doctest.h>

#include <random>

#include "nnfft/bounds.hpp"
#include "nnfft/direct.hpp"
#include "nnfft/errors.hpp"
#include "nnfft/fft.hpp"
#include "nnfft/nfft.hpp"
#include "oracles.hpp"

using nnfft::Complex;
using nnfft::NfftPlan;
using nnfft::WindowKind;

TEST_SUITE("nfft") {
  TEST_CASE("equispaced nodes give full spreading rows") {
    std::vector<double> x(16);
    for (int j = 0; j < 16; ++j) x[j] = (j - 8) / 16.0;
    const NfftPlan plan(16, 2.0, WindowKind::SinhType, 4, x);
    CHECK(plan.oversampled() == 32);
    for (std::size_t j = 0; j < x.size(); ++j) CHECK(plan.spread_row(j).size() == 8);
  }

  TEST_CASE("node at the origin wraps around the grid") {
    const std::vector<double> x{0.0, 0.5};
    const NfftPlan plan(16, 2.0, WindowKind::SinhType, 4, x);
    bool low = false, high = false;
    for (const auto& e : plan.spread_row(0)) {
      CHECK(e.index >= 0);
      CHECK(e.index < 32);
      low = low || e.index < 4;
      high = high || e.index > 28;
    }
    CHECK(low);
    CHECK(high);
    for (const auto& e : plan.spread_row(1)) {
      CHECK(e.index >= 13);
      CHECK(e.index <= 20);
    }
  }

  TEST_CASE("validation") {
    const std::vector<double> x{0.0};
    CHECK_THROWS_AS(NfftPlan(16, 2.0, WindowKind::SinhType, 9, x), nnfft::ParameterError);
    CHECK_THROWS_AS(NfftPlan(15, 2.0, WindowKind::SinhType, 2, x), nnfft::ParameterError);
    CHECK_THROWS_AS(NfftPlan(16, 1.3, WindowKind::SinhType, 2, x), nnfft::ParameterError);
    const std::vector<double> outside{0.6};
    CHECK_THROWS_AS(NfftPlan(16, 2.0, WindowKind::SinhType, 2, outside), nnfft::ParameterError);
    const std::vector<double> barely{0.5 + 1e-13};
    CHECK_NOTHROW(NfftPlan(16, 2.0, WindowKind::SinhType, 2, barely));
  }

  TEST_CASE("zero coefficients give zero") {
    std::mt19937_64 rng(1);
    const auto x = oracle::random_real(rng, 10, -0.5, 0.5);
    const NfftPlan plan(16, 2.0, WindowKind::SinhType, 6, x);
    for (const auto& v : plan.trafo(std::vector<Complex>(16))) CHECK(v == Complex(0.0));
  }

  TEST_CASE("forward transform within the window bound") {
    std::mt19937_64 rng(2);
    for (int m : {2, 4, 6, 8}) {
      for (double sigma : {1.25, 1.5, 2.0}) {
        const int N = 16;
        const auto x = oracle::random_real(rng, 50, -0.5, 0.5);
        const auto c = oracle::random_complex(rng, N);
        const int n_over = static_cast<int>(sigma * N);
        if (n_over % 2 != 0 || 4 * m > n_over) continue;
        const NfftPlan plan(N, sigma, WindowKind::SinhType, m, x);
        const double err = oracle::max_diff(plan.trafo(c), nnfft::direct::ndft(c, x));
        CAPTURE(m);
        CAPTURE(sigma);
        CHECK(err <= nnfft::bounds::bound_sinh_E(m, sigma) * oracle::l1(c));
      }
    }
  }

  TEST_CASE("equispaced nodes against the FFT") {
    std::mt19937_64 rng(3);
    const int N = 32;
    std::vector<double> x(N);
    for (int j = 0; j < N; ++j) x[j] = (j - N / 2) / static_cast<double>(N);
    const auto c = oracle::random_complex(rng, N);
    std::vector<Complex> buf(N);
    for (int i = 0; i < N; ++i) buf[(i - N / 2 + N) % N] = c[i];
    const auto grid = nnfft::fft(buf, nnfft::Direction::Inverse);
    std::vector<Complex> ref(N);
    for (int j = 0; j < N; ++j) ref[j] = grid[(j - N / 2 + N) % N];
    const NfftPlan plan(N, 2.0, WindowKind::SinhType, 6, x);
    CHECK(oracle::max_diff(plan.trafo(c), ref) <= nnfft::bounds::bound_sinh_E(6, 2.0) * oracle::l1(c));
  }

  TEST_CASE("adjoint against direct sums") {
    std::mt19937_64 rng(4);
    const int N = 24;
    const auto x = oracle::random_real(rng, 30, -0.5, 0.5);
    const NfftPlan plan(N, 2.0, WindowKind::SinhType, 6, x);
    const double bound = nnfft::bounds::bound_sinh_E(6, 2.0);
    const auto y = oracle::random_complex(rng, 30);
    CHECK(oracle::max_diff(plan.adjoint(y), nnfft::direct::ndft_adjoint(y, x, N)) <= bound * oracle::l1(y));
    std::vector<Complex> delta(30, 0.0);
    delta[7] = 1.0;
    CHECK(oracle::max_diff(plan.adjoint(delta), nnfft::direct::ndft_adjoint(delta, x, N)) <= bound);

    const std::vector<double> origin{0.0};
    const NfftPlan single(N, 2.0, WindowKind::SinhType, 6, origin);
    const std::vector<Complex> one{1.0};
    for (const auto& v : single.adjoint(one)) CHECK(std::abs(v - 1.0) <= bound);
  }

  TEST_CASE("adjoint identity holds for every window") {
    std::mt19937_64 rng(5);
    for (auto kind : {WindowKind::SinhType, WindowKind::BSpline, WindowKind::Algebraic, WindowKind::KaiserBessel}) {
      const auto x = oracle::random_real(rng, 40, -0.5, 0.5);
      const NfftPlan plan(32, 2.0, kind, 5, x);
      const auto c = oracle::random_complex(rng, 32);
      const auto y = oracle::random_complex(rng, 40);
      const Complex lhs = oracle::dot(y, plan.trafo(c));
      const Complex rhs = oracle::dot(plan.adjoint(y), c);
      CHECK(std::abs(lhs - rhs) <= 1e-12 * oracle::l2(c) * oracle::l2(y));
    }
  }

  TEST_CASE("linearity") {
    std::mt19937_64 rng(6);
    const auto x = oracle::random_real(rng, 20, -0.5, 0.5);
    const NfftPlan plan(16, 2.0, WindowKind::KaiserBessel, 4, x);
    const auto c = oracle::random_complex(rng, 16);
    const auto d = oracle::random_complex(rng, 16);
    const Complex alpha(1.5, -0.5);
    std::vector<Complex> e(16);
    for (int i = 0; i < 16; ++i) e[i] = c[i] + alpha * d[i];
    const auto pc = plan.trafo(c), pd = plan.trafo(d), pe = plan.trafo(e);
    std::vector<Complex> sum(pc.size());
    for (std::size_t j = 0; j < sum.size(); ++j) sum[j] = pc[j] + alpha * pd[j];
    CHECK(oracle::max_diff(pe, sum) <= 1e-12 * oracle::l1(e));
  }

  TEST_CASE("other windows converge too") {
    std::mt19937_64 rng(7);
    const auto x = oracle::random_real(rng, 40, -0.5, 0.5);
    const auto c = oracle::random_complex(rng, 32);
    const auto ref = nnfft::direct::ndft(c, x);
    for (auto kind : {WindowKind::BSpline, WindowKind::Algebraic, WindowKind::KaiserBessel}) {
      const NfftPlan plan(32, 2.0, kind, 8, x);
      CAPTURE(nnfft::to_string(kind));
      CHECK(oracle::max_diff(plan.trafo(c), ref) <= 1e-4 * oracle::l1(c));
    }
  }
}
