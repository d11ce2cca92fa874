#include "nnfft/nfft.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nnfft/errors.hpp"

namespace nnfft {
namespace {

constexpr double kNodeSlack = 1e-12;

int oversampled_length(int degree, double sigma) {
  if (degree <= 0 || degree % 2 != 0) {
    throw ParameterError("nfft: N must be a positive even integer, got " + std::to_string(degree));
  }
  const double product = sigma * degree;
  const double rounded = std::round(product);
  if (std::abs(product - rounded) > 1e-9 || static_cast<long>(rounded) % 2 != 0) {
    throw ParameterError("nfft: sigma*N must be an even integer, got " + std::to_string(product));
  }
  return static_cast<int>(rounded);
}

int checked_grid(int degree, double sigma, int m) {
  const int n_over = oversampled_length(degree, sigma);
  if (4 * m > n_over) {
    throw ParameterError("nfft: 2m <= sigma*N/2 violated (m = " + std::to_string(m) +
                         ", sigma*N = " + std::to_string(n_over) + ")");
  }
  return n_over;
}

int wrap(long index, int length) {
  long r = index % length;
  if (r < 0) r += length;
  return static_cast<int>(r);
}

}  // namespace

NfftPlan::NfftPlan(int degree, double sigma, WindowKind kind, int m,
                   std::span<const double> nodes)
    : degree_(degree),
      n_over_(checked_grid(degree, sigma, m)),
      window_(kind, m, static_cast<double>(n_over_) / degree, n_over_),
      nodes_(nodes.begin(), nodes.end()),
      fft_(static_cast<std::size_t>(n_over_)) {
  for (auto& x : nodes_) {
    if (!(std::abs(x) <= 0.5 + kNodeSlack)) {
      throw ParameterError("nfft: nodes must satisfy |x_j| <= 1/2, got " + std::to_string(x));
    }
    x = std::clamp(x, -0.5, 0.5);
  }

  spread_.reserve(nodes_.size() * 2 * static_cast<std::size_t>(m));
  for (double x : nodes_) {
    const double pos = n_over_ * x;
    const long base = static_cast<long>(std::floor(pos));
    for (long l = base - m + 1; l <= base + m; ++l) {
      spread_.push_back({wrap(l, n_over_), window_.omega((pos - l) / m)});
    }
  }

  hat_.resize(static_cast<std::size_t>(degree_));
  for (int i = 0; i < degree_; ++i) {
    const int k = i - degree_ / 2;
    const double value = window_.phi_hat(k);
    if (!(value > 0.0)) {
      throw NumericError("nfft: window Fourier transform not positive at k = " +
                         std::to_string(k));
    }
    hat_[static_cast<std::size_t>(i)] = value;
  }
}

std::span<const SpreadEntry> NfftPlan::spread_row(std::size_t node) const {
  const std::size_t width = 2 * static_cast<std::size_t>(window_.m());
  return std::span<const SpreadEntry>(spread_).subspan(node * width, width);
}

std::vector<Complex> NfftPlan::trafo(std::span<const Complex> coeffs) const {
  if (coeffs.size() != static_cast<std::size_t>(degree_)) {
    throw ParameterError("nfft_trafo: expected " + std::to_string(degree_) + " coefficients");
  }
  std::vector<Complex> grid(static_cast<std::size_t>(n_over_));
  const double scale = 1.0 / n_over_;
  for (int i = 0; i < degree_; ++i) {
    const int k = i - degree_ / 2;
    grid[static_cast<std::size_t>(wrap(k, n_over_))] =
        coeffs[static_cast<std::size_t>(i)] * (scale / hat_[static_cast<std::size_t>(i)]);
  }
  fft_.execute(grid, Direction::Inverse);

  std::vector<Complex> out(nodes_.size());
  for (std::size_t j = 0; j < nodes_.size(); ++j) {
    Complex sum{};
    for (const auto& e : spread_row(j)) sum += grid[static_cast<std::size_t>(e.index)] * e.weight;
    out[j] = sum;
  }
  return out;
}

std::vector<Complex> NfftPlan::adjoint(std::span<const Complex> values) const {
  if (values.size() != nodes_.size()) {
    throw ParameterError("nfft_adjoint: expected " + std::to_string(nodes_.size()) + " values");
  }
  std::vector<Complex> grid(static_cast<std::size_t>(n_over_));
  for (std::size_t j = 0; j < nodes_.size(); ++j) {
    for (const auto& e : spread_row(j)) grid[static_cast<std::size_t>(e.index)] += values[j] * e.weight;
  }
  fft_.execute(grid, Direction::Forward);

  std::vector<Complex> out(static_cast<std::size_t>(degree_));
  const double scale = 1.0 / n_over_;
  for (int i = 0; i < degree_; ++i) {
    const int k = i - degree_ / 2;
    out[static_cast<std::size_t>(i)] =
        grid[static_cast<std::size_t>(wrap(k, n_over_))] * (scale / hat_[static_cast<std::size_t>(i)]);
  }
  return out;
}

}  // namespace nnfft
