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

#include "mafrft/frft.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace mafrft {

namespace {

void require_finite_order(double order) {
  if (!std::isfinite(order)) {
    throw Error(ErrorCode::InvalidArgument, "fractional order must be finite");
  }
}

// exp(-j (pi/2) l a), with l a reduced mod 4 first.
std::vector<Complex> fractional_eigenvalues(const EigenBasis& basis, double order) {
  std::vector<Complex> out;
  out.reserve(basis.size());
  for (int l : basis.exponents()) {
    const double t = std::fmod(static_cast<double>(l) * order, 4.0);
    out.push_back(std::polar(1.0, -0.5 * std::numbers::pi * t));
  }
  return out;
}

}  // namespace

ComplexMatrix frft_matrix(const EigenBasis& basis, double order) {
  require_finite_order(order);
  const std::size_t n = basis.size();
  const RealMatrix& v = basis.vectors();
  const std::vector<Complex> lam = fractional_eigenvalues(basis, order);
  ComplexMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    auto dst = out.row(i);
    for (std::size_t k = 0; k < n; ++k) {
      const Complex s = v(i, k) * lam[k];
      for (std::size_t j = 0; j < n; ++j) dst[j] += s * v(j, k);
    }
  }
  return out;
}

ComplexSignal frft_apply(const EigenBasis& basis, double order,
                         std::span<const Complex> x) {
  require_finite_order(order);
  const std::size_t n = basis.size();
  if (x.size() != n) {
    throw Error(ErrorCode::LengthMismatch,
                "frft_apply: signal length " + std::to_string(x.size()) +
                    " != basis size " + std::to_string(n));
  }
  require_finite(x, "frft_apply input");
  const RealMatrix& v = basis.vectors();
  const std::vector<Complex> lam = fractional_eigenvalues(basis, order);

  ComplexSignal coeff(n);
  for (std::size_t r = 0; r < n; ++r) {
    auto row = v.row(r);
    for (std::size_t k = 0; k < n; ++k) coeff[k] += row[k] * x[r];
  }
  for (std::size_t k = 0; k < n; ++k) coeff[k] *= lam[k];

  ComplexSignal y(n);
  for (std::size_t r = 0; r < n; ++r) {
    auto row = v.row(r);
    Complex acc{};
    for (std::size_t k = 0; k < n; ++k) acc += row[k] * coeff[k];
    y[r] = acc;
  }
  return y;
}

}  // namespace mafrft
