// Experiment harness: nnfft nnfft-error|sinc-approx|sinc-transform|bounds [options]

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "nnfft/errors.hpp"
#include "nnfft/experiments.hpp"
#include "nnfft/windows.hpp"

namespace {

namespace ex = nnfft::experiments;

constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

struct Flags {
  std::vector<int> N;
  std::vector<int> m1;
  std::vector<int> m2;
  std::vector<double> sigma1;
  std::vector<double> sigma2;
  std::vector<double> nu;
  std::string window1 = "sinh";
  std::string window2 = "sinh";
  std::optional<int> M1;
  std::optional<int> M2;
  std::optional<int> R;
  std::optional<int> reps;
  std::optional<int> max_direct_N;
  std::uint64_t seed = 0;
  bool paper = false;
  bool time = false;
  std::string out;
};

template <typename T>
void override_if_set(std::vector<T>& target, const std::vector<T>& value) {
  if (!value.empty()) target = value;
}

template <typename T>
T single(const std::vector<T>& list, T fallback, const char* name) {
  if (list.empty()) return fallback;
  if (list.size() != 1) throw nnfft::ParameterError(std::string("--") + name + " takes one value here");
  return list.front();
}

ex::Table run(const std::string& command, const Flags& f) {
  if (command == "nnfft-error") {
    auto c = f.paper ? ex::NnfftErrorConfig::paper() : ex::NnfftErrorConfig{};
    override_if_set(c.N, f.N);
    override_if_set(c.m1, f.m1);
    override_if_set(c.m2, f.m2);
    override_if_set(c.sigma1, f.sigma1);
    override_if_set(c.sigma2, f.sigma2);
    if (f.M1) c.M1 = *f.M1;
    if (f.M2) c.M2 = *f.M2;
    if (f.reps) c.reps = *f.reps;
    c.window1 = nnfft::parse_window_kind(f.window1);
    c.window2 = nnfft::parse_window_kind(f.window2);
    c.seed = f.seed;
    c.time = f.time;
    return ex::run_nnfft_error(c);
  }
  if (command == "sinc-approx") {
    auto c = f.paper ? ex::SincApproxConfig::paper() : ex::SincApproxConfig{};
    override_if_set(c.N, f.N);
    override_if_set(c.nu, f.nu);
    if (f.R) c.R = *f.R;
    c.time = f.time;
    return ex::run_sinc_approx(c);
  }
  if (command == "sinc-transform") {
    auto c = f.paper ? ex::SincTransformConfig::paper() : ex::SincTransformConfig{};
    override_if_set(c.N, f.N);
    override_if_set(c.nu, f.nu);
    c.m1 = single(f.m1, c.m1, "m1");
    c.m2 = single(f.m2, c.m1, "m2");
    c.sigma1 = single(f.sigma1, c.sigma1, "sigma1");
    c.sigma2 = single(f.sigma2, c.sigma1, "sigma2");
    c.window1 = nnfft::parse_window_kind(f.window1);
    c.window2 = nnfft::parse_window_kind(f.window2);
    if (f.reps) c.reps = *f.reps;
    if (f.max_direct_N) c.max_direct_N = *f.max_direct_N;
    c.seed = f.seed;
    c.time = f.time;
    return ex::run_sinc_transform(c);
  }
  auto c = f.paper ? ex::BoundsConfig::paper() : ex::BoundsConfig{};
  override_if_set(c.N, f.N);
  override_if_set(c.m1, f.m1);
  override_if_set(c.m2, f.m2);
  override_if_set(c.sigma1, f.sigma1);
  override_if_set(c.sigma2, f.sigma2);
  override_if_set(c.nu, f.nu);
  return ex::run_bounds(c);
}

void add_common(CLI::App* sub, Flags& f) {
  sub->add_option("--N", f.N, "Bandwidth(s)");
  sub->add_option("--m1", f.m1, "Truncation parameter(s) of window 1");
  sub->add_option("--m2", f.m2, "Truncation parameter(s) of window 2 (default: m1)");
  sub->add_option("--sigma1", f.sigma1, "Oversampling factor(s) of window 1");
  sub->add_option("--sigma2", f.sigma2, "Oversampling factor(s) of window 2 (default: sigma1)");
  sub->add_flag("--paper", f.paper, "Use the paper-scale preset");
  sub->add_option("--out", f.out, "Output CSV file (default: stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"NNFFT, sinc approximation and fast sinc transform experiments"};
  app.require_subcommand(1);
  Flags f;
  const std::vector<std::string> windows = {"sinh", "bspline", "algebraic", "kaiser-bessel"};

  auto* nnfft_error = app.add_subcommand("nnfft-error", "Relative NNFFT error against the direct sum");
  add_common(nnfft_error, f);
  nnfft_error->add_option("--M1", f.M1, "Number of frequency nodes");
  nnfft_error->add_option("--M2", f.M2, "Number of spatial nodes");
  nnfft_error->add_option("--window1", f.window1)->check(CLI::IsMember(windows));
  nnfft_error->add_option("--window2", f.window2)->check(CLI::IsMember(windows));
  nnfft_error->add_option("--reps", f.reps)->check(CLI::PositiveNumber);
  nnfft_error->add_option("--seed", f.seed);
  nnfft_error->add_flag("--time", f.time, "Add a wall-time column");

  auto* sinc_approx = app.add_subcommand("sinc-approx", "Exponential-sum sinc approximation error");
  sinc_approx->add_option("--N", f.N, "Bandwidth(s)");
  sinc_approx->add_option("--nu", f.nu, "Oversampling n/N");
  sinc_approx->add_option("--R", f.R, "Grid size (even)");
  sinc_approx->add_flag("--paper", f.paper, "Use the paper-scale preset");
  sinc_approx->add_flag("--time", f.time, "Add a wall-time column");
  sinc_approx->add_option("--out", f.out, "Output CSV file (default: stdout)");

  auto* sinc_transform = app.add_subcommand("sinc-transform", "Fast sinc transform error");
  add_common(sinc_transform, f);
  sinc_transform->add_option("--nu", f.nu, "Quadrature oversampling n/N");
  sinc_transform->add_option("--window1", f.window1)->check(CLI::IsMember(windows));
  sinc_transform->add_option("--window2", f.window2)->check(CLI::IsMember(windows));
  sinc_transform->add_option("--reps", f.reps)->check(CLI::PositiveNumber);
  sinc_transform->add_option("--seed", f.seed);
  sinc_transform->add_option("--max-direct-N", f.max_direct_N, "Largest N checked against the direct sum");
  sinc_transform->add_flag("--time", f.time, "Add a wall-time column");

  auto* bounds = app.add_subcommand("bounds", "Error-bound parameter sweep");
  add_common(bounds, f);
  bounds->add_option("--nu", f.nu, "Quadrature oversampling values for the cc_bound columns");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    const std::string command = app.get_subcommands().front()->get_name();
    const ex::Table table = run(command, f);
    if (f.out.empty()) {
      ex::write_csv(std::cout, table);
    } else {
      std::ofstream file(f.out, std::ios::binary);
      if (!file) {
        std::cerr << "error: cannot open " << f.out << "\n";
        return kExitUsage;
      }
      ex::write_csv(file, table);
    }
  } catch (const nnfft::NumericError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return kExitNumeric;
  }
  return 0;
}
