// Copyright 2026 The mafrft Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MAFRFT_MULTIANGLE_HPP_
#define MAFRFT_MULTIANGLE_HPP_

// Multiangle fractional Fourier transform.
//
// X[n, r] holds sample n of the transform of order 4r/R, so each row of X is
// the length-R DFT of the matching row of Z[n, k] = V[n, k] (V^T x)[k].
// For the standard transform at even N the last eigenvector carries the
// exponent N instead of N-1, which breaks that DFT relation; folding column
// N-1 of Z into column 0 (Zhat) restores it.
//
// Rows related by the reversal operator satisfy
//   X[mirror(n), (r + R/2) mod R] = X[n, r]
// whenever R is even, so only the rows with mirror(n) >= n need an FFT:
// N/2 for centered even N, N/2 + 1 for standard even N. Odd N gets an even R
// by appending a zero column to Z (R = N + 1), which moves the order grid.

#include <optional>
#include <span>
#include <vector>

#include "mafrft/eigenbasis.hpp"
#include "mafrft/foundation.hpp"
#include "mafrft/types.hpp"

namespace mafrft {

enum class MultianglePath { Naive, Full, Half };

const char* to_string(MultianglePath p);

enum class OddLength { Reject, ZeroPad };

struct MultiangleResult {
  ComplexMatrix x;              // N x R, rows = samples, columns = orders
  std::vector<double> orders;   // orders[r] = 4 r / R
  Variant variant = Variant::Standard;
  MultianglePath path = MultianglePath::Full;
};

struct ZMatrix {
  ComplexMatrix z;
  /// Present for the standard variant at even N only.
  std::optional<ComplexMatrix> zhat;
};

/// {4 r / R : r = 0..R-1}.
std::vector<double> order_grid(std::size_t r_count);

/// V^T x by direct product. Counts N^2 multiplies.
ComplexSignal change_of_basis(const EigenBasis& basis, std::span<const Complex> x,
                              OpCounter* counter = nullptr);

/// V^T x using the reversal symmetry of the columns: the even part of x only
/// meets even-symmetric columns and the odd part only odd-symmetric ones, and
/// each product runs over one representative per mirror pair. About half the
/// multiplies of change_of_basis. Assumes the basis satisfies its symmetry
/// invariant.
ComplexSignal change_of_basis_fast(const EigenBasis& basis,
                                   std::span<const Complex> x,
                                   OpCounter* counter = nullptr);

ZMatrix z_matrix(const EigenBasis& basis, std::span<const Complex> x,
                 OpCounter* counter = nullptr);

/// One FFT per row, R = N.
MultiangleResult ma_frft_full(const EigenBasis& basis, std::span<const Complex> x,
                              OpCounter* counter = nullptr);

/// FFTs only on rows with mirror(n) >= n; the rest are copied through the
/// mirror relation. Odd N throws OddWithoutPad unless `odd` is ZeroPad, in
/// which case R = N + 1.
MultiangleResult ma_frft_half(const EigenBasis& basis, std::span<const Complex> x,
                              OddLength odd, OpCounter* counter = nullptr);

/// Column r = frft_apply(basis, 4r/N, x). O(N^3) reference.
MultiangleResult ma_frft_naive(const EigenBasis& basis, std::span<const Complex> x);

MultiangleResult ma_frft(const EigenBasis& basis, std::span<const Complex> x,
                         MultianglePath path, OddLength odd,
                         OpCounter* counter = nullptr);

/// profile[r] = max_n |X[n,r]| / ||X[:,r]||_2. Throws ZeroSignal when a
/// column has zero energy.
std::vector<double> concentration_profile(const MultiangleResult& result);

}  // namespace mafrft

#endif  // MAFRFT_MULTIANGLE_HPP_
