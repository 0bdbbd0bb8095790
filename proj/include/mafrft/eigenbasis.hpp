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

#ifndef MAFRFT_EIGENBASIS_HPP_
#define MAFRFT_EIGENBASIS_HPP_

#include <array>
#include <cstddef>
#include <vector>

#include "mafrft/types.hpp"

namespace mafrft {

/// Counts per DFT eigenvalue, ordered (1, -j, -1, j).
using Multiplicities = std::array<std::size_t, 4>;

/// Real orthonormal DFT eigenvectors (columns of V) together with the
/// exponent vector l: column k has DFT eigenvalue (-j)^l[k].
///
/// Immutable once constructed. The constructor only checks shapes; use
/// validate_eigenbasis() for the numerical invariants.
class EigenBasis {
 public:
  EigenBasis(Variant variant, RealMatrix vectors, std::vector<int> exponents);

  Variant variant() const noexcept { return variant_; }
  std::size_t size() const noexcept { return exponents_.size(); }
  const RealMatrix& vectors() const noexcept { return vectors_; }
  const std::vector<int>& exponents() const noexcept { return exponents_; }

 private:
  Variant variant_;
  RealMatrix vectors_;
  std::vector<int> exponents_;
};

/// Eigenvalue exponents in column order:
///   (0, 1, ..., N-1) for centered or odd N,
///   (0, 1, ..., N-2, N) for standard with even N.
std::vector<int> index_vector(std::size_t n, Variant variant);

/// Expected eigenvalue multiplicities of the (centered) DFT for n = 4m + r.
Multiplicities expected_multiplicities(std::size_t n, Variant variant);

/// Real symmetric tridiagonal-plus-corners matrix commuting with the DFT.
/// Diagonal 2 cos(2 pi (k - c) / N) - 4 with c = 0 (standard) or (N-1)/2
/// (centered), unit off-diagonals, and corner entries +1 except -1 for the
/// centered variant at even N.
///
/// Throws InvalidArgument for n < 4 and EigenMismatch if the commutation
/// residual exceeds 1e-8.
RealMatrix commuting_matrix(std::size_t n, Variant variant);

/// Hermite-Gaussian-like eigenbasis from the commuting matrix.
///
/// The commuting matrix is reduced onto the even and odd subspaces of the
/// reversal operator and each block is diagonalized separately. Within each
/// class the eigenvectors are ordered by descending eigenvalue (ties broken
/// by zero-crossing count) and interleaved so that even-symmetric vectors
/// take the even exponents of index_vector() and odd-symmetric vectors take
/// the odd ones. Columns are then symmetrized, re-orthonormalized within each
/// eigenvalue class, and signed so their first largest-magnitude entry is
/// positive.
///
/// Throws InvalidArgument for n < 4, DegenerateBasis if orthonormality fails
/// (> 1e-8) and EigenMismatch if any column misses its DFT eigenvalue by more
/// than 1e-8 (scaled by n/64 above n = 64).
EigenBasis build_eigenbasis(std::size_t n, Variant variant);

struct ValidationReport {
  double orthonormality_residual = 0.0;  // max |V^T V - I|
  double eigen_residual = 0.0;           // max |W V - V diag((-j)^l)|
  double symmetry_residual = 0.0;        // max |P V - V diag((-1)^l)|
  Multiplicities multiplicities{};       // from l mod 4
  Multiplicities expected{};

  bool orthonormality_ok() const;
  bool eigen_ok() const;
  bool symmetry_ok() const;
  bool multiplicities_ok() const { return multiplicities == expected; }
  bool pass() const;

  /// Tolerances applied by the *_ok() predicates; scaled by n/64 above 64.
  double tolerance_scale = 1.0;
};

ValidationReport validate_eigenbasis(const EigenBasis& basis);

/// Tolerance multiplier for accumulated roundoff: max(1, n / 64).
double tolerance_scale(std::size_t n);

}  // namespace mafrft

#endif  // MAFRFT_EIGENBASIS_HPP_
