#include <doctest.h>

#include <cmath>
#include <numbers>

#include "nnfft/quadrature.hpp"

TEST_SUITE("quadrature") {
  TEST_CASE("smooth integrands") {
    using nnfft::quadrature::integrate;
    CHECK(std::abs(integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi) - 2.0) <= 1e-13);
    CHECK(std::abs(integrate([](double x) { return std::exp(x); }, 0.0, 1.0) - (std::exp(1.0) - 1.0)) <= 1e-13);
    CHECK(std::abs(integrate([](double x) { return std::sqrt(1.0 - x * x); }, -1.0, 1.0) - std::numbers::pi / 2) <= 1e-9);
  }

  TEST_CASE("oscillatory integrand") {
    const double v = 40.5;
    const double value = nnfft::quadrature::integrate(
        [v](double x) { return std::cos(2 * std::numbers::pi * v * x); }, 0.0, 1.0);
    CHECK(std::abs(value - std::sin(2 * std::numbers::pi * v) / (2 * std::numbers::pi * v)) <= 1e-12);
  }
}
