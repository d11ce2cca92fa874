#include "nnfft/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "nnfft/bounds.hpp"
#include "nnfft/direct.hpp"
#include "nnfft/errors.hpp"
#include "nnfft/fast_sinc.hpp"
#include "nnfft/nnfft.hpp"
#include "nnfft/sinc_approx.hpp"
#include "nnfft/special.hpp"

namespace nnfft::experiments {
namespace {

using Clock = std::chrono::steady_clock;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

template <typename T>
T paired(const std::vector<T>& list, std::size_t i, T fallback, const char* name) {
  if (list.empty()) return fallback;
  if (list.size() == 1) return list.front();
  if (i >= list.size()) {
    throw ParameterError(std::string(name) + " list must be empty, a single value, or match its partner");
  }
  return list[i];
}

template <typename T>
void check_pairing(const std::vector<T>& list, std::size_t partner, const char* name) {
  if (list.size() > 1 && list.size() != partner) {
    throw ParameterError(std::string(name) + " list must be empty, a single value, or match its partner");
  }
}

void check_reps(int reps) {
  if (reps < 1) throw ParameterError("reps must be >= 1");
}

std::string fmt_int(long value) { return std::to_string(value); }

std::vector<Complex> random_coeffs(Stream& s, std::size_t count) {
  std::vector<Complex> c(count);
  for (auto& value : c) {
    const double re = s.uniform(-1.0, 1.0);
    const double im = s.uniform(-1.0, 1.0);
    value = Complex(re, im);
  }
  return c;
}

std::vector<double> random_nodes(Stream& s, std::size_t count, double half_width) {
  std::vector<double> x(count);
  for (auto& value : x) value = s.uniform(-half_width, half_width);
  return x;
}

double l1_norm(std::span<const Complex> c) {
  double sum = 0.0;
  for (const auto& value : c) sum += std::abs(value);
  return sum;
}

double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool sinh_bound_applies(double sigma1, double sigma2, int m1, int m2) {
  auto in_range = [](double s) { return s >= 1.25 - 1e-12 && s <= 2.0 + 1e-12; };
  return m2 >= m1 && in_range(sigma1) && in_range(sigma2);
}

}  // namespace

std::size_t Table::column(const std::string& name) const {
  const auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) throw std::out_of_range("no column " + name);
  return static_cast<std::size_t>(it - header.begin());
}

double Table::number(std::size_t row, const std::string& name) const {
  return std::stod(rows.at(row).at(column(name)));
}

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_csv(std::ostream& os, const Table& table) {
  auto line = [&os](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) os << ',';
      os << cells[i];
    }
    os << '\n';
  };
  os << "# schema=1\n";
  line(table.header);
  for (const auto& row : table.rows) line(row);
}

Stream::Stream(std::uint64_t seed, std::uint64_t tuple, std::uint64_t rep)
    : engine_(splitmix64(splitmix64(splitmix64(seed) ^ tuple) ^ rep)) {}

double Stream::uniform(double lo, double hi) {
  const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * unit;
}

NnfftErrorConfig NnfftErrorConfig::paper() {
  NnfftErrorConfig c;
  c.N = {1200};
  c.M1 = 2400;
  c.M2 = 1600;
  c.m1 = {2, 3, 4, 5, 6, 7, 8};
  c.sigma1 = {1.25, 1.5, 2.0};
  c.reps = 100;
  return c;
}

SincApproxConfig SincApproxConfig::paper() {
  SincApproxConfig c;
  c.R = 300000;
  return c;
}

SincTransformConfig SincTransformConfig::paper() {
  SincTransformConfig c;
  c.N.clear();
  for (int k = 5; k <= 13; ++k) c.N.push_back(1 << k);
  c.reps = 100;
  return c;
}

BoundsConfig BoundsConfig::paper() {
  BoundsConfig c;
  c.N = {1200};
  c.sigma1 = {1.25, 1.5, 2.0};
  return c;
}

Table run_nnfft_error(const NnfftErrorConfig& config) {
  check_reps(config.reps);
  check_pairing(config.m2, config.m1.size(), "m2");
  check_pairing(config.sigma2, config.sigma1.size(), "sigma2");
  Table table;
  table.header = {"N",  "M1", "M2", "m1", "m2", "sigma1", "sigma2", "N1", "N2", "window1",
                  "window2", "reps", "measured", "bound"};
  if (config.time) table.header.push_back("time_s");

  std::uint64_t tuple = 0;
  for (int N : config.N) {
    for (std::size_t si = 0; si < config.sigma1.size(); ++si) {
      const double s1 = config.sigma1[si];
      const double s2 = paired(config.sigma2, si, s1, "sigma2");
      for (std::size_t mi = 0; mi < config.m1.size(); ++mi, ++tuple) {
        const int m1 = config.m1[mi];
        const int m2 = paired(config.m2, mi, m1, "m2");
        const auto geo = NnfftGeometry::make_rounded(N, config.M1, config.M2, s1, s2, m1, m2);
        double worst = 0.0;
        double elapsed = 0.0;
        for (int rep = 0; rep < config.reps; ++rep) {
          Stream s(config.seed, tuple, static_cast<std::uint64_t>(rep));
          const auto x = random_nodes(s, static_cast<std::size_t>(config.M2), 0.5);
          const auto v = random_nodes(s, static_cast<std::size_t>(config.M1), geo.max_frequency());
          const auto f = random_coeffs(s, static_cast<std::size_t>(config.M1));
          const auto start = Clock::now();
          const NnfftPlan plan(geo, v, x, config.window1, config.window2);
          const auto fast = plan.trafo(f);
          elapsed += seconds_since(start);
          const auto exact = direct::nndft(f, v, x, N);
          worst = std::max(worst, max_abs_diff(fast, exact) / l1_norm(f));
        }
        const double bound = sinh_bound_applies(geo.sigma1, geo.sigma2, m1, m2)
                                 ? bounds::bound_nnfft_sinh(N, geo.sigma1, geo.sigma2, m1, m2)
                                 : kNaN;
        std::vector<std::string> row = {fmt_int(N),
                                        fmt_int(config.M1),
                                        fmt_int(config.M2),
                                        fmt_int(m1),
                                        fmt_int(m2),
                                        format_number(geo.sigma1),
                                        format_number(geo.sigma2),
                                        fmt_int(geo.N1),
                                        fmt_int(geo.N2),
                                        to_string(config.window1),
                                        to_string(config.window2),
                                        fmt_int(config.reps),
                                        format_number(worst),
                                        format_number(bound)};
        if (config.time) row.push_back(format_number(elapsed));
        table.rows.push_back(std::move(row));
      }
    }
  }
  return table;
}

Table run_sinc_approx(const SincApproxConfig& config) {
  Table table;
  table.header = {"N", "nu", "n", "R", "measured", "bound"};
  if (config.time) table.header.push_back("time_s");
  for (int N : config.N) {
    for (double nu : config.nu) {
      const int n = static_cast<int>(std::lround(nu * N));
      const auto start = Clock::now();
      const CcQuadrature quad = make_cc_quadrature(n);
      const auto values = sinc_expsum_grid(quad, N, config.R);
      const double elapsed = seconds_since(start);
      double worst = 0.0;
      for (int r = -config.R / 2; r < config.R / 2; ++r) {
        const double t = 2.0 * N * r / config.R;
        const double exact = special::sinc(std::numbers::pi * t);
        worst = std::max(worst, std::abs(values[static_cast<std::size_t>(r + config.R / 2)] - exact));
      }
      std::vector<std::string> row = {fmt_int(N), format_number(nu), fmt_int(n), fmt_int(config.R),
                                      format_number(worst),
                                      format_number(bounds::bound_cc_sinc(N, static_cast<double>(n) / N))};
      if (config.time) row.push_back(format_number(elapsed));
      table.rows.push_back(std::move(row));
    }
  }
  return table;
}

Table run_sinc_transform(const SincTransformConfig& config) {
  check_reps(config.reps);
  Table table;
  table.header = {"N",      "nu",     "n",    "L1",       "L2",           "m1",
                  "m2",     "sigma1", "sigma2", "mode",   "reps",         "measured",
                  "measured_abs", "cc_bound", "bound_full", "bound_simplified", "assump_ok"};
  if (config.time) table.header.push_back("time_s");

  SincOptions options;
  options.params.m1 = config.m1;
  options.params.m2 = config.m2;
  options.params.sigma1 = config.sigma1;
  options.params.sigma2 = config.sigma2;
  options.params.kind1 = config.window1;
  options.params.kind2 = config.window2;

  std::uint64_t tuple = 0;
  for (int N : config.N) {
    if (N < 2 || N % 2 != 0) throw ParameterError("sinc-transform: N must be even and >= 2");
    const int L1 = N / 2;
    std::vector<double> b(static_cast<std::size_t>(N));
    for (int l = 0; l < N; ++l) b[static_cast<std::size_t>(l)] = static_cast<double>(l - N / 2) / N;
    for (double nu : config.nu) {
      options.n = static_cast<int>(std::lround(nu * N));
      const bool measure = N <= config.max_direct_N;
      double worst = measure ? 0.0 : kNaN;
      double worst_abs = measure ? 0.0 : kNaN;
      double elapsed = 0.0;
      std::string mode;
      bounds::BoundReport report;
      for (int rep = 0; rep < config.reps; ++rep) {
        Stream s(config.seed, tuple, static_cast<std::uint64_t>(rep));
        const auto a = random_nodes(s, static_cast<std::size_t>(L1), 0.5);
        const auto c = random_coeffs(s, static_cast<std::size_t>(L1));
        const auto start = Clock::now();
        const SincPlan plan(N, a, b, options);
        const auto fast = plan.transform(c);
        elapsed += seconds_since(start);
        if (rep == 0) {
          mode = to_string(plan.mode());
          report = plan.bound_report();
        }
        if (measure) {
          const auto exact = direct::sinc_transform(c, a, b, N);
          const double err = max_abs_diff(fast, exact);
          worst_abs = std::max(worst_abs, err);
          worst = std::max(worst, err / l1_norm(c));
        }
      }
      std::vector<std::string> row = {fmt_int(N),
                                      format_number(nu),
                                      fmt_int(options.n),
                                      fmt_int(L1),
                                      fmt_int(N),
                                      fmt_int(config.m1),
                                      fmt_int(config.m2),
                                      format_number(config.sigma1),
                                      format_number(config.sigma2),
                                      mode,
                                      fmt_int(config.reps),
                                      format_number(worst),
                                      format_number(worst_abs),
                                      format_number(report.cc_bound),
                                      format_number(report.fast_sinc_bound_full),
                                      format_number(report.fast_sinc_bound_simplified),
                                      report.simplified_valid ? "1" : "0"};
      if (config.time) row.push_back(format_number(elapsed));
      table.rows.push_back(std::move(row));
      ++tuple;
    }
  }
  return table;
}

Table run_bounds(const BoundsConfig& config) {
  check_pairing(config.m2, config.m1.size(), "m2");
  check_pairing(config.sigma2, config.sigma1.size(), "sigma2");
  if (config.nu.empty()) throw ParameterError("bounds: nu list must not be empty");
  Table table;
  table.header = {"N", "m1", "m2", "sigma1", "sigma2", "E1", "E2", "hat_phi1_half", "nnfft_bound"};
  for (double nu : config.nu) {
    char name[48];
    std::snprintf(name, sizeof name, "cc_bound_nu%g", nu);
    table.header.emplace_back(name);
  }
  for (const char* name : {"fast_sinc_full", "fast_sinc_simplified", "assump_ok"}) {
    table.header.emplace_back(name);
  }

  for (int N : config.N) {
    for (std::size_t si = 0; si < config.sigma1.size(); ++si) {
      const double s1 = config.sigma1[si];
      const double s2 = paired(config.sigma2, si, s1, "sigma2");
      for (std::size_t mi = 0; mi < config.m1.size(); ++mi) {
        const int m1 = config.m1[mi];
        const int m2 = paired(config.m2, mi, m1, "m2");
        const auto r = bounds::make_bound_report(N, s1, s2, m1, m2,
                                                 bounds::bound_cc_sinc(N, config.nu.front()));
        std::vector<std::string> row = {fmt_int(N),          fmt_int(m1),
                                        fmt_int(m2),         format_number(s1),
                                        format_number(s2),   format_number(r.e1),
                                        format_number(r.e2), format_number(r.hat_phi1_half),
                                        format_number(r.nnfft_bound)};
        for (double nu : config.nu) row.push_back(format_number(bounds::bound_cc_sinc(N, nu)));
        row.push_back(format_number(r.fast_sinc_bound_full));
        row.push_back(format_number(r.fast_sinc_bound_simplified));
        row.emplace_back(r.simplified_valid ? "1" : "0");
        table.rows.push_back(std::move(row));
      }
    }
  }
  return table;
}

}  // namespace nnfft::experiments
