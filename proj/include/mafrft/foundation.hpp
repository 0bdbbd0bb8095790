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

#ifndef MAFRFT_FOUNDATION_HPP_
#define MAFRFT_FOUNDATION_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "mafrft/types.hpp"

namespace mafrft {

/// Work counters threaded through the transform paths. Callers own the
/// instance; passing nullptr disables counting.
struct OpCounter {
  std::size_t fft_calls = 0;
  /// Real-by-complex scalar multiplies spent in change-of-basis products.
  std::size_t multiplies = 0;
};

/// Unitary N x N DFT matrix.
///   standard: (1/sqrt N) w^{nk}
///   centered: (1/sqrt N) w^{(n-(N-1)/2)(k-(N-1)/2)}
/// with w = exp(-j 2 pi / N).
ComplexMatrix dft_matrix(std::size_t n, Variant variant);

/// W^2 for the given convention. Centered: anti-identity. Standard: ones at
/// (0,0) and wherever row + col == N.
ComplexMatrix reversal_matrix(std::size_t n, Variant variant);

/// Index that `i` maps to under the reversal operator.
inline std::size_t mirror_index(std::size_t i, std::size_t n, Variant variant) {
  if (variant == Variant::Centered) return n - 1 - i;
  return i == 0 ? 0 : n - i;
}

/// Applies the reversal operator without forming the matrix.
ComplexSignal reverse(std::span<const Complex> x, Variant variant);

bool is_power_of_two(std::size_t n);

/// Unitary DFT (dft_matrix(N, variant) * x) computed through an FFT plan.
ComplexSignal apply_dft(std::span<const Complex> x, Variant variant);

/// Precomputed forward/inverse unnormalized DFT of fixed length.
///
/// Power-of-two lengths run an iterative radix-2 decimation-in-time FFT.
/// Other lengths fall back to an O(N^2) direct sum over a table of roots.
/// forward(): y[r] = sum_k x[k] exp(-j 2 pi r k / N), i.e. sqrt(N) * W_s.
/// inverse(): y[k] = sum_r x[r] exp(+j 2 pi r k / N), no 1/N factor.
class FftPlan {
 public:
  explicit FftPlan(std::size_t n);

  std::size_t size() const noexcept { return n_; }

  void forward(std::span<const Complex> in, std::span<Complex> out,
               OpCounter* counter = nullptr) const;
  void inverse(std::span<const Complex> in, std::span<Complex> out,
               OpCounter* counter = nullptr) const;

 private:
  void transform(std::span<const Complex> in, std::span<Complex> out,
                 bool inverse) const;

  std::size_t n_;
  bool radix2_;
  // roots_[k] = exp(-j 2 pi k / N), k in [0, N).
  std::vector<Complex> roots_;
  std::vector<std::size_t> bitrev_;
};

ComplexSignal fft_unnormalized(std::span<const Complex> x);
ComplexSignal ifft_unnormalized(std::span<const Complex> x);

}  // namespace mafrft

#endif  // MAFRFT_FOUNDATION_HPP_
