#include "nnfft/nnfft.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nnfft/errors.hpp"

namespace nnfft {
namespace {

constexpr double kNodeSlack = 1e-12;
constexpr double kIntegerSlack = 1e-9;

int exact_even(double value, const char* what) {
  const double rounded = std::round(value);
  if (std::abs(value - rounded) > kIntegerSlack || static_cast<long>(rounded) % 2 != 0 ||
      rounded <= 0) {
    throw ParameterError(std::string("nnfft: ") + what + " must be a positive even integer, got " +
                         std::to_string(value));
  }
  return static_cast<int>(rounded);
}

int ceil_even(double value) {
  auto n = static_cast<long>(std::ceil(value - kIntegerSlack));
  if (n % 2 != 0) ++n;
  return static_cast<int>(std::max(n, 2L));
}

void check_scalars(int N, int M1, int M2, double sigma1, double sigma2, int m1, int m2) {
  if (N <= 0) throw ParameterError("nnfft: N must be positive");
  if (M1 <= 0 || M2 <= 0) throw ParameterError("nnfft: node counts M1, M2 must be positive");
  if (!(sigma1 > 1.0) || !(sigma2 > 1.0)) throw ParameterError("nnfft: sigma1, sigma2 must be > 1");
  if (m1 < 2 || m2 < 2) throw ParameterError("nnfft: m1, m2 must be >= 2");
}

NnfftGeometry finish(int N, int M1, int M2, int N1, int N2, int m1, int m2) {
  NnfftGeometry g;
  g.N = N;
  g.M1 = M1;
  g.M2 = M2;
  g.m1 = m1;
  g.m2 = m2;
  g.N1 = N1;
  g.N2 = N2;
  g.sigma1 = static_cast<double>(N1) / N;
  g.sigma2 = static_cast<double>(N2) / (N1 + 2 * m1);
  g.a = 1.0 + 2.0 * m1 / N1;
  if (4 * m1 > N1) {
    throw ParameterError("nnfft: 2m1 <= N1/2 violated (m1 = " + std::to_string(m1) +
                         ", N1 = " + std::to_string(N1) + ")");
  }
  if (2.0 * m2 > (1.0 - 1.0 / g.sigma1) * N2 + kIntegerSlack) {
    throw ParameterError("nnfft: 2m2 <= (1 - 1/sigma1)*N2 violated (m2 = " + std::to_string(m2) +
                         ", N2 = " + std::to_string(N2) + ")");
  }
  return g;
}

long wrap(long index, long length) {
  long r = index % length;
  if (r < 0) r += length;
  return r;
}

}  // namespace

NnfftGeometry NnfftGeometry::make(int N, int M1, int M2, double sigma1, double sigma2, int m1,
                                  int m2) {
  check_scalars(N, M1, M2, sigma1, sigma2, m1, m2);
  const int N1 = exact_even(sigma1 * N, "N1 = sigma1*N");
  const int N2 = exact_even(sigma2 * (N1 + 2 * m1), "N2 = sigma2*(N1 + 2m1)");
  return finish(N, M1, M2, N1, N2, m1, m2);
}

NnfftGeometry NnfftGeometry::make_rounded(int N, int M1, int M2, double sigma1, double sigma2,
                                          int m1, int m2) {
  check_scalars(N, M1, M2, sigma1, sigma2, m1, m2);
  const int N1 = ceil_even(sigma1 * N);
  const int N2 = ceil_even(sigma2 * (N1 + 2 * m1));
  return finish(N, M1, M2, N1, N2, m1, m2);
}

RescaledFrequencies rescale_frequencies(int N, std::span<const double> v, double sigma1, int m1) {
  if (N <= 0) throw ParameterError("rescale_frequencies: N must be positive");
  if (!(sigma1 > 1.0) || m1 < 1) throw ParameterError("rescale_frequencies: need sigma1 > 1, m1 >= 1");
  RescaledFrequencies out;
  out.n_star = N + static_cast<int>(std::ceil(2.0 * m1 / sigma1 - kIntegerSlack));
  const double ratio = static_cast<double>(N) / out.n_star;
  out.v_star.reserve(v.size());
  for (double value : v) {
    if (!(std::abs(value) <= 0.5 + kNodeSlack)) {
      throw ParameterError("rescale_frequencies: |v_k| <= 1/2 violated, got " +
                           std::to_string(value));
    }
    out.v_star.push_back(ratio * value);
  }
  return out;
}

NnfftPlan::NnfftPlan(const NnfftGeometry& geometry, std::span<const double> freqs,
                     std::span<const double> nodes, WindowKind kind1, WindowKind kind2)
    : geometry_(geometry),
      window1_(kind1, geometry.m1, geometry.sigma1, geometry.N1),
      window2_(kind2, geometry.m2, geometry.sigma2, geometry.N2),
      freqs_(freqs.begin(), freqs.end()),
      nodes_(nodes.begin(), nodes.end()),
      fft_(static_cast<std::size_t>(geometry.N2)) {
  const auto& g = geometry_;
  if (freqs_.size() != static_cast<std::size_t>(g.M1)) {
    throw ParameterError("nnfft: expected M1 = " + std::to_string(g.M1) + " frequency nodes");
  }
  if (nodes_.size() != static_cast<std::size_t>(g.M2)) {
    throw ParameterError("nnfft: expected M2 = " + std::to_string(g.M2) + " spatial nodes");
  }
  const double vmax = g.max_frequency();
  for (auto& v : freqs_) {
    if (!(std::abs(v) <= vmax + kNodeSlack)) {
      throw ParameterError("nnfft: |v_k| <= 1/(2a) = " + std::to_string(vmax) +
                           " violated by v = " + std::to_string(v) +
                           "; apply rescale_frequencies first");
    }
    v = std::clamp(v, -vmax, vmax);
  }
  for (auto& x : nodes_) {
    if (!(std::abs(x) <= 0.5 + kNodeSlack)) {
      throw ParameterError("nnfft: |x_j| <= 1/2 violated by x = " + std::to_string(x));
    }
    x = std::clamp(x, -0.5, 0.5);
  }

  hat1_.reserve(nodes_.size());
  for (double x : nodes_) {
    const double value = window1_.phi_hat(g.N * x);
    if (!(value > 0.0)) {
      throw NumericError("nnfft: phi1_hat(N x_j) <= 0 at x_j = " + std::to_string(x));
    }
    hat1_.push_back(value);
  }

  const int half1 = g.spread_length() / 2;
  hat2_.resize(static_cast<std::size_t>(g.spread_length()));
  for (int i = 0; i < g.spread_length(); ++i) {
    const double value = window2_.phi_hat(i - half1);
    if (!(value > 0.0)) {
      throw NumericError("nnfft: phi2_hat(l) <= 0 at l = " + std::to_string(i - half1));
    }
    hat2_[static_cast<std::size_t>(i)] = value;
  }

  spread_offsets_.reserve(freqs_.size() + 1);
  spread_offsets_.push_back(0);
  for (double v : freqs_) {
    const double pos = g.N1 * v;
    const long base = static_cast<long>(std::floor(pos));
    for (long l = base - g.m1 + 1; l <= base + g.m1; ++l) {
      const double u = (l - pos) / g.m1;
      if (std::abs(u) >= 1.0 || l < -half1 || l >= half1) continue;
      spread_.push_back({static_cast<int>(l), window1_.omega(u)});
    }
    spread_offsets_.push_back(spread_.size());
  }

  const int half2 = g.N2 / 2;
  gather_offsets_.reserve(nodes_.size() + 1);
  gather_offsets_.push_back(0);
  for (double x : nodes_) {
    const double pos = g.N2 * x / g.sigma1;
    const long base = static_cast<long>(std::floor(pos));
    for (long s = base - g.m2 + 1; s <= base + g.m2; ++s) {
      const double u = (pos - s) / g.m2;
      if (std::abs(u) >= 1.0 || s < -half2 || s >= half2) continue;
      gather_.push_back({static_cast<int>(s), window2_.omega(u)});
    }
    gather_offsets_.push_back(gather_.size());
  }
}

std::span<const TableEntry> NnfftPlan::spread_row(std::size_t k) const {
  return std::span<const TableEntry>(spread_).subspan(
      spread_offsets_.at(k), spread_offsets_.at(k + 1) - spread_offsets_[k]);
}

std::span<const TableEntry> NnfftPlan::gather_row(std::size_t j) const {
  return std::span<const TableEntry>(gather_).subspan(
      gather_offsets_.at(j), gather_offsets_.at(j + 1) - gather_offsets_[j]);
}

std::vector<Complex> NnfftPlan::deconvolved_grid(std::span<const Complex> coeffs) const {
  if (coeffs.size() != freqs_.size()) {
    throw ParameterError("nnfft_trafo: expected " + std::to_string(freqs_.size()) +
                         " coefficients");
  }
  const int half1 = geometry_.spread_length() / 2;
  std::vector<Complex> g(static_cast<std::size_t>(geometry_.spread_length()));
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const Complex f = coeffs[k];
    for (const auto& e : spread_row(k)) g[static_cast<std::size_t>(e.index + half1)] += f * e.weight;
  }
  const double scale = 1.0 / geometry_.N1;
  for (std::size_t i = 0; i < g.size(); ++i) g[i] *= scale / hat2_[i];
  return g;
}

std::vector<Complex> NnfftPlan::fft_grid(std::span<const Complex> coeffs) const {
  const std::vector<Complex> ghat = deconvolved_grid(coeffs);
  const long n2 = geometry_.N2;
  const long half1 = geometry_.spread_length() / 2;
  std::vector<Complex> buffer(static_cast<std::size_t>(n2));
  for (std::size_t i = 0; i < ghat.size(); ++i) {
    buffer[static_cast<std::size_t>(wrap(static_cast<long>(i) - half1, n2))] += ghat[i];
  }
  fft_.execute(buffer, Direction::Forward);
  const double scale = 1.0 / n2;
  for (auto& value : buffer) value *= scale;
  return buffer;
}

std::vector<Complex> NnfftPlan::grid_coefficients(std::span<const Complex> coeffs) const {
  const std::vector<Complex> buffer = fft_grid(coeffs);
  const long n2 = geometry_.N2;
  std::vector<Complex> h(static_cast<std::size_t>(n2));
  for (long s = -n2 / 2; s < n2 / 2; ++s) {
    h[static_cast<std::size_t>(s + n2 / 2)] = buffer[static_cast<std::size_t>(wrap(s, n2))];
  }
  return h;
}

std::vector<Complex> NnfftPlan::trafo(std::span<const Complex> coeffs) const {
  const std::vector<Complex> buffer = fft_grid(coeffs);
  const long n2 = geometry_.N2;
  std::vector<Complex> out(nodes_.size());
  for (std::size_t j = 0; j < nodes_.size(); ++j) {
    Complex sum{};
    for (const auto& e : gather_row(j)) sum += buffer[static_cast<std::size_t>(wrap(e.index, n2))] * e.weight;
    out[j] = sum / hat1_[j];
  }
  return out;
}

}  // namespace nnfft
