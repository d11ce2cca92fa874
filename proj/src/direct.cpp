#include "nnfft/direct.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "nnfft/errors.hpp"
#include "nnfft/special.hpp"

namespace nnfft::direct {
namespace {

// e^{-2πi·phase}, with the phase reduced to [-1/2, 1/2] first.
Complex unit_root(double phase) {
  const double r = phase - std::nearbyint(phase);
  const double angle = -2.0 * std::numbers::pi * r;
  return {std::cos(angle), std::sin(angle)};
}

class Accumulator {
 public:
  explicit Accumulator(bool compensated) : compensated_(compensated) {}

  void add(Complex z) {
    if (!compensated_) {
      sum_ += z;
      return;
    }
    add_component(re_, re_c_, z.real());
    add_component(im_, im_c_, z.imag());
  }

  Complex value() const {
    return compensated_ ? Complex(re_ + re_c_, im_ + im_c_) : sum_;
  }

 private:
  static void add_component(double& sum, double& carry, double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      carry += (sum - t) + x;
    } else {
      carry += (x - t) + sum;
    }
    sum = t;
  }

  bool compensated_;
  Complex sum_{};
  double re_ = 0.0, re_c_ = 0.0, im_ = 0.0, im_c_ = 0.0;
};

void require_same_length(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw ParameterError(std::string(what) + ": length mismatch (" + std::to_string(a) +
                         " vs " + std::to_string(b) + ")");
  }
}

}  // namespace

std::vector<Complex> nndft(std::span<const Complex> coeffs, std::span<const double> freqs,
                           std::span<const double> nodes, double bandwidth, Options options) {
  require_same_length(coeffs.size(), freqs.size(), "nndft: coefficients and frequencies");
  std::vector<Complex> out(nodes.size());
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    Accumulator acc(options.compensated);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      acc.add(coeffs[k] * unit_root(bandwidth * freqs[k] * nodes[j]));
    }
    out[j] = acc.value();
  }
  return out;
}

std::vector<Complex> ndft(std::span<const Complex> coeffs, std::span<const double> nodes,
                          Options options) {
  const auto half = static_cast<long>(coeffs.size() / 2);
  std::vector<Complex> out(nodes.size());
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    Accumulator acc(options.compensated);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      const double k = static_cast<double>(static_cast<long>(i) - half);
      acc.add(coeffs[i] * unit_root(-k * nodes[j]));
    }
    out[j] = acc.value();
  }
  return out;
}

std::vector<Complex> ndft_adjoint(std::span<const Complex> values, std::span<const double> nodes,
                                  int degree, Options options) {
  require_same_length(values.size(), nodes.size(), "ndft_adjoint: values and nodes");
  if (degree < 1) throw ParameterError("ndft_adjoint: degree >= 1 required");
  const long half = degree / 2;
  std::vector<Complex> out(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) {
    const double k = static_cast<double>(i - half);
    Accumulator acc(options.compensated);
    for (std::size_t j = 0; j < nodes.size(); ++j) acc.add(values[j] * unit_root(k * nodes[j]));
    out[static_cast<std::size_t>(i)] = acc.value();
  }
  return out;
}

std::vector<Complex> sinc_transform(std::span<const Complex> coeffs,
                                    std::span<const double> sources,
                                    std::span<const double> targets, double bandwidth,
                                    Options options) {
  require_same_length(coeffs.size(), sources.size(), "sinc_transform: coefficients and sources");
  std::vector<Complex> out(targets.size());
  for (std::size_t l = 0; l < targets.size(); ++l) {
    Accumulator acc(options.compensated);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      acc.add(coeffs[k] * special::sinc(std::numbers::pi * bandwidth * (targets[l] - sources[k])));
    }
    out[l] = acc.value();
  }
  return out;
}

}  // namespace nnfft::direct
