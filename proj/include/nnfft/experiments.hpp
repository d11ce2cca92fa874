#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "nnfft/windows.hpp"

// Seeded experiment drivers. Each returns a table; write_csv() renders it
// with a "# schema=1" comment line, one header row and %.17g numbers.

namespace nnfft::experiments {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Index of a header column; throws std::out_of_range if absent.
  std::size_t column(const std::string& name) const;
  double number(std::size_t row, const std::string& name) const;
};

void write_csv(std::ostream& os, const Table& table);
std::string format_number(double value);

/// Uniform doubles from std::mt19937_64, one independent stream per
/// (seed, tuple, rep). A value is the top 53 bits of a draw times 2^-53,
/// so streams are identical on every platform.
class Stream {
 public:
  Stream(std::uint64_t seed, std::uint64_t tuple, std::uint64_t rep);
  /// Uniform on [lo, hi).
  double uniform(double lo, double hi);

 private:
  std::mt19937_64 engine_;
};

struct NnfftErrorConfig {
  std::vector<int> N{128};
  int M1 = 64;
  int M2 = 48;
  std::vector<int> m1{2, 3, 4, 5, 6};
  /// Empty: m2 = m1. One value: used for every tuple. Otherwise zipped with m1.
  std::vector<int> m2;
  std::vector<double> sigma1{2.0};
  /// Same pairing rule as m2.
  std::vector<double> sigma2;
  WindowKind window1 = WindowKind::SinhType;
  WindowKind window2 = WindowKind::SinhType;
  int reps = 100;
  std::uint64_t seed = 0;
  bool time = false;

  static NnfftErrorConfig paper();
};

struct SincApproxConfig {
  std::vector<int> N{8, 16, 32, 64, 128};
  std::vector<double> nu{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  int R = 10000;
  bool time = false;

  static SincApproxConfig paper();
};

struct SincTransformConfig {
  std::vector<int> N{32, 64, 128, 256, 512};
  std::vector<double> nu{4, 6, 8};
  int m1 = 6;
  int m2 = 6;
  double sigma1 = 2.0;
  double sigma2 = 2.0;
  WindowKind window1 = WindowKind::SinhType;
  WindowKind window2 = WindowKind::SinhType;
  int reps = 100;
  std::uint64_t seed = 0;
  /// Rows with N above this value report measured = nan.
  int max_direct_N = 2048;
  bool time = false;

  static SincTransformConfig paper();
};

struct BoundsConfig {
  std::vector<int> N{128};
  std::vector<int> m1{2, 3, 4, 5, 6, 7, 8};
  std::vector<int> m2;
  std::vector<double> sigma1{2.0};
  std::vector<double> sigma2;
  /// Each ν adds a cc_bound column; the fast-sinc columns use the first ν.
  std::vector<double> nu{4};

  static BoundsConfig paper();
};

/// Relative NNFFT error max_j |f(x_j) - approx_j| / Σ|f_k|, maximised over
/// reps, next to the sinh-window bound for the effective geometry.
Table run_nnfft_error(const NnfftErrorConfig& config);
/// Max error of the exponential-sum sinc approximation on x_r = 2r/R.
Table run_sinc_approx(const SincApproxConfig& config);
/// Fast sinc transform with equispaced targets b_ℓ = ℓ/N and L₁ = N/2 random sources.
Table run_sinc_transform(const SincTransformConfig& config);
Table run_bounds(const BoundsConfig& config);

}  // namespace nnfft::experiments
