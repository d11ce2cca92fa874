#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace nnfft {

using Complex = std::complex<double>;

enum class Direction {
  Forward,  ///< X_s = Σ x_ℓ e^{-2πiℓs/L}
  Inverse,  ///< X_s = Σ x_ℓ e^{+2πiℓs/L}, unnormalised
};

/// Complex FFT of arbitrary length L >= 1.
///
/// Lengths whose prime factors are all <= 64 run through a recursive
/// mixed-radix decimation in time (radix 4 and 2 specialised, other
/// factors by a direct small DFT). Any larger prime factor switches the
/// whole transform to Bluestein's chirp-z algorithm on a power-of-two grid.
/// Plans are immutable; execute() may be called concurrently.
class FftPlan {
 public:
  explicit FftPlan(std::size_t length);

  std::size_t size() const { return n_; }
  bool uses_bluestein() const { return bluestein_ != nullptr; }

  /// In-place transform of data.size() == size() values.
  void execute(std::span<Complex> data, Direction direction) const;

 private:
  struct Bluestein {
    std::size_t padded = 0;
    std::shared_ptr<const FftPlan> inner;
    std::vector<Complex> chirp;      // e^{-πi j²/n}
    std::vector<Complex> kernel_hat; // FFT of the conjugate chirp filter
  };

  void recurse(const Complex* in, std::size_t stride, Complex* out, std::size_t n,
               std::size_t factor_index, bool inverse) const;
  void execute_bluestein(std::span<Complex> data, bool inverse) const;

  std::size_t n_;
  std::vector<std::size_t> factors_;
  std::vector<Complex> twiddle_;  // e^{-2πij/n}, j < n
  std::unique_ptr<Bluestein> bluestein_;
};

/// One-shot FFT. Throws ParameterError on empty input.
std::vector<Complex> fft(std::span<const Complex> values, Direction direction);

/// Orthogonal DCT-I: y = C x with C_{jk} = √(2/n)·ε(j)ε(k)·cos(jkπ/n),
/// j, k = 0..n, ε(0) = ε(n) = √2/2 and ε = 1 otherwise. Input length n+1
/// with n >= 2. C is symmetric and orthogonal, so dct1(dct1(x)) == x.
std::vector<double> dct1(std::span<const double> values);

}  // namespace nnfft
