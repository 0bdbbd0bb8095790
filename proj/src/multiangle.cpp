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

#include "mafrft/multiangle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mafrft/frft.hpp"

namespace mafrft {

namespace {

void check_input(const EigenBasis& basis, std::span<const Complex> x,
                 const char* what) {
  if (x.size() != basis.size()) {
    throw Error(ErrorCode::LengthMismatch,
                std::string(what) + ": signal length " + std::to_string(x.size()) +
                    " != basis size " + std::to_string(basis.size()));
  }
  require_finite(x, what);
}

// Row n of the FFT input, zero-padded to `len`.
void load_row(const ComplexMatrix& src, std::size_t n, std::span<Complex> dst) {
  auto row = src.row(n);
  std::copy(row.begin(), row.end(), dst.begin());
  std::fill(dst.begin() + static_cast<std::ptrdiff_t>(row.size()), dst.end(),
            Complex{});
}

const ComplexMatrix& fft_source(const ZMatrix& z) {
  return z.zhat ? *z.zhat : z.z;
}

}  // namespace

const char* to_string(MultianglePath p) {
  switch (p) {
    case MultianglePath::Naive: return "naive";
    case MultianglePath::Full: return "full";
    case MultianglePath::Half: return "half";
  }
  return "unknown";
}

std::vector<double> order_grid(std::size_t r_count) {
  std::vector<double> out(r_count);
  for (std::size_t r = 0; r < r_count; ++r)
    out[r] = 4.0 * static_cast<double>(r) / static_cast<double>(r_count);
  return out;
}

ComplexSignal change_of_basis(const EigenBasis& basis, std::span<const Complex> x,
                              OpCounter* counter) {
  check_input(basis, x, "change_of_basis");
  const std::size_t n = basis.size();
  const RealMatrix& v = basis.vectors();
  ComplexSignal y(n);
  for (std::size_t r = 0; r < n; ++r) {
    auto row = v.row(r);
    for (std::size_t k = 0; k < n; ++k) y[k] += row[k] * x[r];
  }
  if (counter) counter->multiplies += n * n;
  return y;
}

ComplexSignal change_of_basis_fast(const EigenBasis& basis,
                                   std::span<const Complex> x,
                                   OpCounter* counter) {
  check_input(basis, x, "change_of_basis_fast");
  const std::size_t n = basis.size();
  const Variant variant = basis.variant();
  const RealMatrix& v = basis.vectors();
  const std::vector<int>& l = basis.exponents();

  // One representative per mirror orbit. A fixed point contributes x[i]
  // once; a pair contributes x[i] +- x[mirror(i)].
  std::vector<std::size_t> even_rows, odd_rows;
  std::vector<Complex> x_even, x_odd;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t m = mirror_index(i, n, variant);
    if (m < i) continue;
    if (m == i) {
      even_rows.push_back(i);
      x_even.push_back(x[i]);
    } else {
      even_rows.push_back(i);
      x_even.push_back(x[i] + x[m]);
      odd_rows.push_back(i);
      x_odd.push_back(x[i] - x[m]);
    }
  }

  ComplexSignal y(n);
  std::size_t mults = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const bool even = l[k] % 2 == 0;
    const auto& rows = even ? even_rows : odd_rows;
    const auto& part = even ? x_even : x_odd;
    Complex acc{};
    for (std::size_t t = 0; t < rows.size(); ++t) acc += v(rows[t], k) * part[t];
    y[k] = acc;
    mults += rows.size();
  }
  if (counter) counter->multiplies += mults;
  return y;
}

ZMatrix z_matrix(const EigenBasis& basis, std::span<const Complex> x,
                 OpCounter* counter) {
  const ComplexSignal y = change_of_basis_fast(basis, x, counter);
  const std::size_t n = basis.size();
  const RealMatrix& v = basis.vectors();
  ZMatrix out{ComplexMatrix(n, n), std::nullopt};
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) out.z(r, k) = v(r, k) * y[k];

  if (basis.variant() == Variant::Standard && n % 2 == 0) {
    ComplexMatrix zhat = out.z;
    for (std::size_t r = 0; r < n; ++r) {
      zhat(r, 0) = out.z(r, 0) + out.z(r, n - 1);
      zhat(r, n - 1) = Complex{};
    }
    out.zhat = std::move(zhat);
  }
  return out;
}

MultiangleResult ma_frft_full(const EigenBasis& basis, std::span<const Complex> x,
                              OpCounter* counter) {
  const ZMatrix z = z_matrix(basis, x, counter);
  const ComplexMatrix& src = fft_source(z);
  const std::size_t n = basis.size();
  const FftPlan plan(n);
  MultiangleResult res{ComplexMatrix(n, n), order_grid(n), basis.variant(),
                       MultianglePath::Full};
  for (std::size_t r = 0; r < n; ++r) plan.forward(src.row(r), res.x.row(r), counter);
  return res;
}

MultiangleResult ma_frft_half(const EigenBasis& basis, std::span<const Complex> x,
                              OddLength odd, OpCounter* counter) {
  const std::size_t n = basis.size();
  if (n % 2 == 1 && odd != OddLength::ZeroPad) {
    throw Error(ErrorCode::OddWithoutPad,
                "ma_frft_half: odd N = " + std::to_string(n) +
                    " needs zero padding to an even order grid");
  }
  const ZMatrix z = z_matrix(basis, x, counter);
  const ComplexMatrix& src = fft_source(z);
  const std::size_t r_count = n % 2 == 0 ? n : n + 1;
  const std::size_t shift = r_count / 2;
  const FftPlan plan(r_count);

  MultiangleResult res{ComplexMatrix(n, r_count), order_grid(r_count),
                       basis.variant(), MultianglePath::Half};
  ComplexSignal row_in(r_count);
  for (std::size_t row = 0; row < n; ++row) {
    const std::size_t m = mirror_index(row, n, basis.variant());
    if (m < row) continue;
    load_row(src, row, row_in);
    auto out = res.x.row(row);
    plan.forward(row_in, out, counter);
    if (m == row) continue;
    auto mirrored = res.x.row(m);
    for (std::size_t r = 0; r < r_count; ++r) mirrored[(r + shift) % r_count] = out[r];
  }
  return res;
}

MultiangleResult ma_frft_naive(const EigenBasis& basis, std::span<const Complex> x) {
  check_input(basis, x, "ma_frft_naive");
  const std::size_t n = basis.size();
  MultiangleResult res{ComplexMatrix(n, n), order_grid(n), basis.variant(),
                       MultianglePath::Naive};
  for (std::size_t r = 0; r < n; ++r) {
    const ComplexSignal col = frft_apply(basis, res.orders[r], x);
    for (std::size_t i = 0; i < n; ++i) res.x(i, r) = col[i];
  }
  return res;
}

MultiangleResult ma_frft(const EigenBasis& basis, std::span<const Complex> x,
                         MultianglePath path, OddLength odd, OpCounter* counter) {
  switch (path) {
    case MultianglePath::Naive: return ma_frft_naive(basis, x);
    case MultianglePath::Full: return ma_frft_full(basis, x, counter);
    case MultianglePath::Half: return ma_frft_half(basis, x, odd, counter);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown multiangle path");
}

std::vector<double> concentration_profile(const MultiangleResult& result) {
  const ComplexMatrix& x = result.x;
  std::vector<double> profile(x.cols());
  for (std::size_t r = 0; r < x.cols(); ++r) {
    double peak = 0.0, energy = 0.0;
    for (std::size_t n = 0; n < x.rows(); ++n) {
      const double a = std::abs(x(n, r));
      peak = std::max(peak, a);
      energy += a * a;
    }
    if (energy == 0.0) {
      throw Error(ErrorCode::ZeroSignal,
                  "concentration_profile: column " + std::to_string(r) +
                      " has zero energy (zero input signal)");
    }
    profile[r] = peak / std::sqrt(energy);
  }
  return profile;
}

}  // namespace mafrft
