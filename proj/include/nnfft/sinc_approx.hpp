#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "nnfft/fft.hpp"

namespace nnfft {

/// Clenshaw-Curtis rule on [-1, 1] normalised to total weight 1:
/// points z_k = cos(kπ/n), k = 0..n, positive weights w_k.
///
/// sinc(Nπx) ≈ Σ_k w_k e^{-πiNz_k x} for |x| <= 1.
struct CcQuadrature {
  int n = 0;
  std::vector<double> z;
  std::vector<double> w;
};

/// O(n²) evaluation of the weight formula, any n >= 2.
std::vector<double> cc_weights_direct(int n);
/// O(n log n) weights through one DCT-I; n must be a power of two, n >= 4.
std::vector<double> cc_weights_fast(int n);
/// The step-1 vector a of the fast path (length n+1, odd entries zero).
std::vector<double> cc_dct_input(int n);

/// Builds points and weights; uses the fast path when n is a power of two
/// (n >= 4) and the direct formula otherwise.
CcQuadrature make_cc_quadrature(int n);

/// Σ_k w_k e^{-πiNz_k x} at arbitrary x, by direct summation.
std::vector<Complex> sinc_expsum_eval(const CcQuadrature& quad, int N, std::span<const double> x);

/// The same sum on the grid x_r = 2r/R, r ∈ I_R (R even, R >= 4N),
/// computed by one adjoint NFFT. Returns R values ordered by r.
std::vector<Complex> sinc_expsum_grid(const CcQuadrature& quad, int N, int R);

/// Writes "k,z_k,w_k" rows with 17 significant digits.
void write_cc_csv(std::ostream& os, const CcQuadrature& quad);

}  // namespace nnfft
