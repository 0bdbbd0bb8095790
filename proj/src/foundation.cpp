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

#include "mafrft/foundation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <utility>

namespace mafrft {

const char* to_string(Variant v) {
  return v == Variant::Standard ? "standard" : "centered";
}

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::OddWithoutPad: return "OddWithoutPad";
    case ErrorCode::DegenerateBasis: return "DegenerateBasis";
    case ErrorCode::EigenMismatch: return "EigenMismatch";
    case ErrorCode::ZeroSignal: return "ZeroSignal";
    case ErrorCode::Io: return "Io";
    case ErrorCode::Format: return "Format";
  }
  return "Unknown";
}

ComplexMatrix to_complex(const RealMatrix& m) {
  ComplexMatrix out(m.rows(), m.cols());
  std::copy(m.data().begin(), m.data().end(), out.data().begin());
  return out;
}

namespace {

template <typename T>
Matrix<T> multiply_impl(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::LengthMismatch, "matrix product shape mismatch");
  }
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto dst = out.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T s = a(i, k);
      auto src = b.row(k);
      for (std::size_t j = 0; j < b.cols(); ++j) dst[j] += s * src[j];
    }
  }
  return out;
}

}  // namespace

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
  return multiply_impl(a, b);
}

RealMatrix multiply(const RealMatrix& a, const RealMatrix& b) {
  return multiply_impl(a, b);
}

ComplexSignal multiply(const ComplexMatrix& a, std::span<const Complex> x) {
  if (a.cols() != x.size()) {
    throw Error(ErrorCode::LengthMismatch, "matrix-vector shape mismatch");
  }
  ComplexSignal y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Complex acc{};
    auto r = a.row(i);
    for (std::size_t k = 0; k < x.size(); ++k) acc += r[k] * x[k];
    y[i] = acc;
  }
  return y;
}

ComplexMatrix conjugate_transpose(const ComplexMatrix& m) {
  ComplexMatrix out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = std::conj(m(i, j));
  return out;
}

RealMatrix transpose(const RealMatrix& m) {
  RealMatrix out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = m(i, j);
  return out;
}

double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::LengthMismatch, "max_abs_diff size mismatch");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::LengthMismatch, "max_abs_diff shape mismatch");
  }
  return max_abs_diff(a.data(), b.data());
}

double norm2(std::span<const Complex> x) {
  double acc = 0.0;
  for (const Complex& v : x) acc += std::norm(v);
  return std::sqrt(acc);
}

void require_finite(std::span<const Complex> x, const char* what) {
  for (const Complex& v : x) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw Error(ErrorCode::InvalidArgument,
                  std::string(what) + " contains a non-finite sample");
    }
  }
}

ComplexMatrix dft_matrix(std::size_t n, Variant variant) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "dft_matrix: n must be >= 1");
  ComplexMatrix w(n, n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  // Work in quarter units so the centered exponent stays integral:
  // (n-c)(k-c) = (2n-(N-1))(2k-(N-1)) / 4, reduced mod 4N before the sin/cos.
  const auto period = static_cast<std::int64_t>(4 * n);
  const auto offset =
      variant == Variant::Centered ? static_cast<std::int64_t>(n) - 1 : 0;
  for (std::size_t r = 0; r < n; ++r) {
    const std::int64_t a = 2 * static_cast<std::int64_t>(r) - offset;
    for (std::size_t c = 0; c < n; ++c) {
      const std::int64_t b = 2 * static_cast<std::int64_t>(c) - offset;
      std::int64_t p = (a * b) % period;
      if (p < 0) p += period;
      const double angle = -2.0 * std::numbers::pi * static_cast<double>(p) /
                           static_cast<double>(period);
      w(r, c) = std::polar(scale, angle);
    }
  }
  return w;
}

ComplexMatrix reversal_matrix(std::size_t n, Variant variant) {
  if (n == 0) {
    throw Error(ErrorCode::InvalidArgument, "reversal_matrix: n must be >= 1");
  }
  ComplexMatrix p(n, n);
  for (std::size_t i = 0; i < n; ++i) p(i, mirror_index(i, n, variant)) = 1.0;
  return p;
}

ComplexSignal reverse(std::span<const Complex> x, Variant variant) {
  ComplexSignal out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    out[i] = x[mirror_index(i, x.size(), variant)];
  return out;
}

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

FftPlan::FftPlan(std::size_t n) : n_(n), radix2_(is_power_of_two(n)) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "FftPlan: n must be >= 1");
  roots_.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    roots_[k] = std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(k) /
                                    static_cast<double>(n));
  }
  if (radix2_) {
    bitrev_.resize(n);
    std::size_t bits = 0;
    while ((std::size_t{1} << bits) < n) ++bits;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t r = 0;
      for (std::size_t b = 0; b < bits; ++b)
        if (i & (std::size_t{1} << b)) r |= std::size_t{1} << (bits - 1 - b);
      bitrev_[i] = r;
    }
  }
}

void FftPlan::forward(std::span<const Complex> in, std::span<Complex> out,
                      OpCounter* counter) const {
  transform(in, out, false);
  if (counter) ++counter->fft_calls;
}

void FftPlan::inverse(std::span<const Complex> in, std::span<Complex> out,
                      OpCounter* counter) const {
  transform(in, out, true);
  if (counter) ++counter->fft_calls;
}

void FftPlan::transform(std::span<const Complex> in, std::span<Complex> out,
                        bool inverse) const {
  if (in.size() != n_ || out.size() != n_) {
    throw Error(ErrorCode::LengthMismatch,
                "FftPlan: expected length " + std::to_string(n_));
  }
  auto root = [&](std::size_t k) {
    return inverse ? std::conj(roots_[k]) : roots_[k];
  };

  if (!radix2_) {
    ComplexSignal tmp(n_);
    for (std::size_t r = 0; r < n_; ++r) {
      Complex acc{};
      std::size_t idx = 0;
      for (std::size_t k = 0; k < n_; ++k) {
        acc += in[k] * root(idx);
        idx += r;
        if (idx >= n_) idx -= n_;
      }
      tmp[r] = acc;
    }
    std::copy(tmp.begin(), tmp.end(), out.begin());
    return;
  }

  // Bit-reversal permute through a temporary so in and out may alias.
  ComplexSignal buf(n_);
  for (std::size_t i = 0; i < n_; ++i) buf[bitrev_[i]] = in[i];
  for (std::size_t len = 2; len <= n_; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t stride = n_ / len;
    for (std::size_t start = 0; start < n_; start += len) {
      for (std::size_t j = 0; j < half; ++j) {
        const Complex t = root(j * stride) * buf[start + j + half];
        const Complex u = buf[start + j];
        buf[start + j] = u + t;
        buf[start + j + half] = u - t;
      }
    }
  }
  std::copy(buf.begin(), buf.end(), out.begin());
}

namespace {

// exp(-j 2 pi p / q) with p reduced mod q in integers.
Complex unit_root(std::int64_t p, std::int64_t q) {
  p %= q;
  if (p < 0) p += q;
  return std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(p) /
                             static_cast<double>(q));
}

}  // namespace

ComplexSignal apply_dft(std::span<const Complex> x, Variant variant) {
  const std::size_t n = x.size();
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "apply_dft: empty input");
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  const FftPlan plan(n);
  ComplexSignal y(n);
  if (variant == Variant::Standard) {
    plan.forward(x, y);
    for (Complex& v : y) v *= scale;
    return y;
  }
  // W_c = w^{c^2} diag(w^{-c n}) W_s diag(w^{-c k}) with c = (N-1)/2.
  // w^{-c n} = exp(+j 2 pi (N-1) n / (2N)).
  const auto q = static_cast<std::int64_t>(n);
  const std::int64_t m = q - 1;
  ComplexSignal tmp(n);
  for (std::size_t k = 0; k < n; ++k)
    tmp[k] = x[k] * unit_root(-m * static_cast<std::int64_t>(k), 2 * q);
  plan.forward(tmp, y);
  const Complex global = unit_root(m * m, 4 * q) * scale;
  for (std::size_t r = 0; r < n; ++r)
    y[r] *= global * unit_root(-m * static_cast<std::int64_t>(r), 2 * q);
  return y;
}

ComplexSignal fft_unnormalized(std::span<const Complex> x) {
  ComplexSignal y(x.size());
  FftPlan(x.size()).forward(x, y);
  return y;
}

ComplexSignal ifft_unnormalized(std::span<const Complex> x) {
  ComplexSignal y(x.size());
  FftPlan(x.size()).inverse(x, y);
  return y;
}

}  // namespace mafrft
