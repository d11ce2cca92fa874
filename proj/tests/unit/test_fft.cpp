#include <doctest.h>

#include <random>

#include "nnfft/errors.hpp"
#include "nnfft/fft.hpp"
#include "oracles.hpp"

using nnfft::Complex;
using nnfft::Direction;

TEST_SUITE("fft") {
  TEST_CASE("matches the DFT for many lengths") {
    std::mt19937_64 rng(1);
    std::vector<std::size_t> lengths;
    for (std::size_t n = 1; n <= 72; ++n) lengths.push_back(n);
    for (std::size_t n : {97, 128, 130, 256, 360, 1009, 1024, 2 * 67 * 3}) lengths.push_back(n);
    for (std::size_t n : lengths) {
      const auto x = oracle::random_complex(rng, n);
      for (int sign : {-1, 1}) {
        const auto fast = nnfft::fft(x, sign < 0 ? Direction::Forward : Direction::Inverse);
        const auto ref = oracle::dft(x, sign);
        CAPTURE(n);
        CHECK(oracle::max_diff(fast, ref) <= 1e-13 * std::sqrt(static_cast<double>(n)) * oracle::l2(x));
      }
    }
  }

  TEST_CASE("Bluestein is used only for large prime factors") {
    CHECK_FALSE(nnfft::FftPlan(64 * 3 * 5 * 7).uses_bluestein());
    CHECK_FALSE(nnfft::FftPlan(61).uses_bluestein());
    CHECK(nnfft::FftPlan(67).uses_bluestein());
    CHECK(nnfft::FftPlan(2 * 150001).uses_bluestein());
  }

  TEST_CASE("round trip") {
    std::mt19937_64 rng(2);
    for (std::size_t n : {5, 64, 600, 1031}) {
      const auto x = oracle::random_complex(rng, n);
      auto y = nnfft::fft(nnfft::fft(x, Direction::Forward), Direction::Inverse);
      for (auto& v : y) v /= static_cast<double>(n);
      CHECK(oracle::max_diff(x, y) <= 1e-14 * std::sqrt(static_cast<double>(n)));
    }
  }

  TEST_CASE("empty input rejected") {
    std::vector<Complex> empty;
    CHECK_THROWS_AS(nnfft::fft(empty, Direction::Forward), nnfft::ParameterError);
  }

  TEST_CASE("dct1 matches the matrix definition and is an involution") {
    std::mt19937_64 rng(3);
    for (std::size_t n : {2, 3, 4, 7, 16, 33}) {
      const auto x = oracle::random_real(rng, n + 1, -1, 1);
      const auto y = nnfft::dct1(x);
      for (std::size_t j = 0; j <= n; ++j) {
        long double sum = 0;
        for (std::size_t k = 0; k <= n; ++k) {
          const long double ej = (j == 0 || j == n) ? std::sqrt(0.5L) : 1.0L;
          const long double ek = (k == 0 || k == n) ? std::sqrt(0.5L) : 1.0L;
          sum += std::sqrt(2.0L / n) * ej * ek * std::cos(oracle::kPiL * j * k / n) * x[k];
        }
        CHECK(std::abs(y[j] - static_cast<double>(sum)) <= 1e-14);
      }
      const auto z = nnfft::dct1(y);
      for (std::size_t j = 0; j <= n; ++j) CHECK(std::abs(z[j] - x[j]) <= 1e-14);
    }
    std::vector<double> tiny(2, 1.0);
    CHECK_THROWS_AS(nnfft::dct1(tiny), nnfft::ParameterError);
  }
}
