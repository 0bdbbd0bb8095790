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

#ifndef MAFRFT_TYPES_HPP_
#define MAFRFT_TYPES_HPP_

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mafrft {

using Complex = std::complex<double>;

/// A length-N sequence of complex samples. Transform input and output unit.
using ComplexSignal = std::vector<Complex>;

/// Selects the DFT convention. Standard indexes samples from 0, centered
/// indexes them symmetrically about (N-1)/2.
enum class Variant { Standard, Centered };

const char* to_string(Variant v);

enum class ErrorCode {
  InvalidArgument,
  LengthMismatch,
  OddWithoutPad,
  DegenerateBasis,
  EigenMismatch,
  ZeroSignal,
  Io,
  Format,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Dense row-major matrix with value semantics.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<T> row(std::size_t r) {
    return std::span<T>(data_).subspan(r * cols_, cols_);
  }
  std::span<const T> row(std::size_t r) const {
    return std::span<const T>(data_).subspan(r * cols_, cols_);
  }

  std::vector<T> column(std::size_t c) const {
    std::vector<T> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  std::span<const T> data() const noexcept { return data_; }
  std::span<T> data() noexcept { return data_; }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using ComplexMatrix = Matrix<Complex>;
using RealMatrix = Matrix<double>;

ComplexMatrix to_complex(const RealMatrix& m);

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);
RealMatrix multiply(const RealMatrix& a, const RealMatrix& b);
ComplexSignal multiply(const ComplexMatrix& a, std::span<const Complex> x);

ComplexMatrix conjugate_transpose(const ComplexMatrix& m);
RealMatrix transpose(const RealMatrix& m);

/// max_{i,j} |a(i,j) - b(i,j)|. Shapes must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b);

double norm2(std::span<const Complex> x);

/// Throws InvalidArgument on any NaN or Inf sample.
void require_finite(std::span<const Complex> x, const char* what);

}  // namespace mafrft

#endif  // MAFRFT_TYPES_HPP_
