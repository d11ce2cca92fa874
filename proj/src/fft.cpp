#include "nnfft/fft.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>

#include "nnfft/errors.hpp"

namespace nnfft {
namespace {

constexpr std::size_t kMaxDirectRadix = 64;

std::vector<std::size_t> factorize(std::size_t n) {
  std::vector<std::size_t> factors;
  while (n % 4 == 0) {
    factors.push_back(4);
    n /= 4;
  }
  if (n % 2 == 0) {
    factors.push_back(2);
    n /= 2;
  }
  for (std::size_t p = 3; p * p <= n; p += 2) {
    while (n % p == 0) {
      factors.push_back(p);
      n /= p;
    }
  }
  if (n > 1) factors.push_back(n);
  return factors;
}

std::size_t next_power_of_two(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace

FftPlan::FftPlan(std::size_t length) : n_(length) {
  if (length == 0) throw ParameterError("fft: length must be >= 1");
  factors_ = factorize(n_);
  bool needs_bluestein = false;
  for (auto p : factors_) needs_bluestein = needs_bluestein || p > kMaxDirectRadix;

  if (!needs_bluestein) {
    twiddle_.resize(n_);
    for (std::size_t j = 0; j < n_; ++j) {
      const double angle = -2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n_);
      twiddle_[j] = Complex(std::cos(angle), std::sin(angle));
    }
    return;
  }

  auto b = std::make_unique<Bluestein>();
  b->padded = next_power_of_two(2 * n_ - 1);
  b->inner = std::make_shared<const FftPlan>(b->padded);
  b->chirp.resize(n_);
  const std::uint64_t period = 2 * static_cast<std::uint64_t>(n_);
  for (std::size_t j = 0; j < n_; ++j) {
    // j² mod 2n keeps the chirp angle small and exact.
    const std::uint64_t jj = (static_cast<std::uint64_t>(j) * j) % period;
    const double angle = -std::numbers::pi * static_cast<double>(jj) / static_cast<double>(n_);
    b->chirp[j] = Complex(std::cos(angle), std::sin(angle));
  }
  b->kernel_hat.assign(b->padded, Complex{});
  b->kernel_hat[0] = std::conj(b->chirp[0]);
  for (std::size_t j = 1; j < n_; ++j) {
    b->kernel_hat[j] = std::conj(b->chirp[j]);
    b->kernel_hat[b->padded - j] = std::conj(b->chirp[j]);
  }
  b->inner->execute(b->kernel_hat, Direction::Forward);
  bluestein_ = std::move(b);
}

void FftPlan::execute(std::span<Complex> data, Direction direction) const {
  if (data.size() != n_) {
    throw ParameterError("fft: buffer length " + std::to_string(data.size()) +
                         " does not match plan length " + std::to_string(n_));
  }
  const bool inverse = direction == Direction::Inverse;
  if (bluestein_) {
    execute_bluestein(data, inverse);
    return;
  }
  if (n_ == 1) return;
  std::vector<Complex> input(data.begin(), data.end());
  recurse(input.data(), 1, data.data(), n_, 0, inverse);
}

void FftPlan::recurse(const Complex* in, std::size_t stride, Complex* out, std::size_t n,
                      std::size_t factor_index, bool inverse) const {
  if (n == 1) {
    out[0] = in[0];
    return;
  }
  const std::size_t p = factors_[factor_index];
  const std::size_t m = n / p;
  for (std::size_t q = 0; q < p; ++q) {
    recurse(in + q * stride, stride * p, out + q * m, m, factor_index + 1, inverse);
  }

  const std::size_t step = n_ / n;  // e^{-2πi/n} = twiddle_[step]
  auto w = [&](std::size_t index) {
    const Complex t = twiddle_[(index * step) % n_];
    return inverse ? std::conj(t) : t;
  };

  if (p == 2) {
    for (std::size_t k = 0; k < m; ++k) {
      const Complex a = out[k];
      const Complex b = out[k + m] * w(k);
      out[k] = a + b;
      out[k + m] = a - b;
    }
    return;
  }
  if (p == 4) {
    // Multiplication by -i (forward) or +i (inverse).
    const auto rot = [inverse](Complex z) {
      return inverse ? Complex(-z.imag(), z.real()) : Complex(z.imag(), -z.real());
    };
    for (std::size_t k = 0; k < m; ++k) {
      const Complex a0 = out[k];
      const Complex a1 = out[k + m] * w(k);
      const Complex a2 = out[k + 2 * m] * w(2 * k);
      const Complex a3 = out[k + 3 * m] * w(3 * k);
      const Complex s02 = a0 + a2;
      const Complex d02 = a0 - a2;
      const Complex s13 = a1 + a3;
      const Complex d13 = rot(a1 - a3);
      out[k] = s02 + s13;
      out[k + m] = d02 + d13;
      out[k + 2 * m] = s02 - s13;
      out[k + 3 * m] = d02 - d13;
    }
    return;
  }

  std::vector<Complex> t(p);
  const std::size_t root_step = n / p;  // e^{-2πi/p} = w(root_step)
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t q = 0; q < p; ++q) t[q] = out[q * m + k] * w(q * k);
    for (std::size_t r = 0; r < p; ++r) {
      Complex sum = t[0];
      for (std::size_t q = 1; q < p; ++q) sum += t[q] * w(root_step * ((q * r) % p));
      out[k + r * m] = sum;
    }
  }
}

void FftPlan::execute_bluestein(std::span<Complex> data, bool inverse) const {
  const Bluestein& b = *bluestein_;
  // The inverse transform is conj(forward(conj(x))).
  std::vector<Complex> work(b.padded, Complex{});
  for (std::size_t j = 0; j < n_; ++j) {
    const Complex x = inverse ? std::conj(data[j]) : data[j];
    work[j] = x * b.chirp[j];
  }
  b.inner->execute(work, Direction::Forward);
  for (std::size_t j = 0; j < b.padded; ++j) work[j] *= b.kernel_hat[j];
  b.inner->execute(work, Direction::Inverse);
  const double scale = 1.0 / static_cast<double>(b.padded);
  for (std::size_t k = 0; k < n_; ++k) {
    const Complex y = work[k] * scale * b.chirp[k];
    data[k] = inverse ? std::conj(y) : y;
  }
}

std::vector<Complex> fft(std::span<const Complex> values, Direction direction) {
  if (values.empty()) throw ParameterError("fft: empty input");
  std::vector<Complex> out(values.begin(), values.end());
  FftPlan(values.size()).execute(out, direction);
  return out;
}

std::vector<double> dct1(std::span<const double> values) {
  if (values.size() < 3) throw ParameterError("dct1: n >= 2 required (input length n+1)");
  const std::size_t n = values.size() - 1;
  const double edge = std::numbers::sqrt2 / 2.0;

  // Even extension of ε·x to length 2n with doubled end points; its DFT is
  // 2 Σ_j ε_j x_j cos(jkπ/n).
  std::vector<Complex> ext(2 * n);
  for (std::size_t j = 0; j <= n; ++j) {
    const double eps = (j == 0 || j == n) ? 2.0 * edge : 1.0;
    ext[j] = eps * values[j];
  }
  for (std::size_t j = 1; j < n; ++j) ext[2 * n - j] = ext[j];
  FftPlan(2 * n).execute(ext, Direction::Forward);

  std::vector<double> out(n + 1);
  const double scale = std::sqrt(2.0 / static_cast<double>(n)) * 0.5;
  for (std::size_t k = 0; k <= n; ++k) {
    const double eps = (k == 0 || k == n) ? edge : 1.0;
    out[k] = scale * eps * ext[k].real();
  }
  return out;
}

}  // namespace nnfft
