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

#include <cmath>

#include "gtest/gtest.h"
#include "test_util.hpp"

namespace mafrft {
namespace {

using testing::random_signal;

constexpr Variant kVariants[] = {Variant::Standard, Variant::Centered};

TEST(DftMatrix, SizeOneIsOne) {
  for (Variant v : kVariants) {
    const ComplexMatrix w = dft_matrix(1, v);
    EXPECT_NEAR(std::abs(w(0, 0) - Complex(1.0, 0.0)), 0.0, 1e-15);
  }
}

TEST(DftMatrix, StandardSizeTwo) {
  const ComplexMatrix w = dft_matrix(2, Variant::Standard);
  const double h = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(std::abs(w(0, 0) - h), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(w(0, 1) - h), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(w(1, 0) - h), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(w(1, 1) + h), 0.0, 1e-15);
}

TEST(DftMatrix, CenteredSizeTwo) {
  const ComplexMatrix w = dft_matrix(2, Variant::Centered);
  for (Complex c : w.data()) EXPECT_NEAR(std::abs(c), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(std::abs(w(0, 0) - Complex(0.5, -0.5)), 0.0, 1e-15);
}

TEST(DftMatrix, UnitaryUpTo64) {
  for (Variant v : kVariants) {
    for (std::size_t n = 1; n <= 64; ++n) {
      const ComplexMatrix w = dft_matrix(n, v);
      const double res = max_abs_diff(multiply(w, conjugate_transpose(w)),
                                      ComplexMatrix::identity(n));
      EXPECT_LT(res, 1e-12) << "n=" << n << " " << to_string(v);
    }
  }
}

TEST(DftMatrix, OddCenteredIsCircularShiftOfStandard) {
  for (std::size_t n : {3u, 5u, 7u, 9u, 15u, 21u}) {
    const ComplexMatrix ws = dft_matrix(n, Variant::Standard);
    const ComplexMatrix wc = dft_matrix(n, Variant::Centered);
    const std::size_t c = (n - 1) / 2;
    double worst = 0.0;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t k = 0; k < n; ++k)
        worst = std::max(worst, std::abs(wc(r, k) - ws((r + n - c) % n, (k + n - c) % n)));
    EXPECT_LT(worst, 1e-12) << "n=" << n;
  }
}

TEST(DftMatrix, RejectsZero) {
  EXPECT_THROW(dft_matrix(0, Variant::Standard), Error);
}

TEST(ReversalMatrix, CenteredIsAntiIdentity) {
  const ComplexMatrix p = reversal_matrix(3, Variant::Centered);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c)
      EXPECT_EQ(p(r, c), Complex(r + c == 2 ? 1.0 : 0.0, 0.0));
}

TEST(ReversalMatrix, StandardFixesZero) {
  const ComplexMatrix p = reversal_matrix(4, Variant::Standard);
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      const bool one = (r == 0 && c == 0) || r + c == 4;
      EXPECT_EQ(p(r, c), Complex(one ? 1.0 : 0.0, 0.0)) << r << "," << c;
    }
  }
}

TEST(ReversalMatrix, IsInvolution) {
  for (Variant v : kVariants) {
    for (std::size_t n : {3u, 4u, 8u}) {
      const ComplexMatrix p = reversal_matrix(n, v);
      EXPECT_EQ(multiply(p, p), ComplexMatrix::identity(n));
    }
  }
}

TEST(ReversalMatrix, EqualsDftSquared) {
  for (Variant v : kVariants) {
    for (std::size_t n : {4u, 5u, 8u, 9u}) {
      const ComplexMatrix w = dft_matrix(n, v);
      EXPECT_LT(max_abs_diff(multiply(w, w), reversal_matrix(n, v)), 1e-12);
    }
  }
}

TEST(Fft, ConstantSignal) {
  const ComplexSignal y = fft_unnormalized(ComplexSignal(4, 1.0));
  EXPECT_LT(max_abs_diff(y, ComplexSignal{4.0, 0.0, 0.0, 0.0}), 1e-15);
}

TEST(Fft, DeltaSignal) {
  const ComplexSignal y = fft_unnormalized(ComplexSignal{1.0, 0.0, 0.0, 0.0});
  EXPECT_LT(max_abs_diff(y, ComplexSignal(4, 1.0)), 1e-15);
}

TEST(Fft, MatchesScaledDftMatrix) {
  // Radix-2 and direct fallback lengths alike.
  for (std::size_t n = 1; n <= 70; ++n) {
    const ComplexSignal x = random_signal(n, 100 + n);
    ComplexSignal expect = multiply(dft_matrix(n, Variant::Standard), x);
    for (Complex& v : expect) v *= std::sqrt(static_cast<double>(n));
    EXPECT_LT(max_abs_diff(fft_unnormalized(x), expect), 1e-11) << "n=" << n;
  }
  const ComplexSignal x12 = random_signal(12, 12);
  ComplexSignal e12 = multiply(dft_matrix(12, Variant::Standard), x12);
  for (Complex& v : e12) v *= std::sqrt(12.0);
  EXPECT_LT(max_abs_diff(fft_unnormalized(x12), e12), 1e-12);
}

TEST(Fft, MatchesTextbookDefinitionAtPowersOfTwo) {
  for (std::size_t n : {2u, 8u, 64u, 256u}) {
    const ComplexSignal x = random_signal(n, n);
    EXPECT_LT(max_abs_diff(fft_unnormalized(x), testing::direct_dft(x, -1)), 1e-10);
    EXPECT_LT(max_abs_diff(ifft_unnormalized(x), testing::direct_dft(x, +1)), 1e-10);
  }
}

TEST(Ifft, DeltaSpectrum) {
  const ComplexSignal y = ifft_unnormalized(ComplexSignal{4.0, 0.0, 0.0, 0.0});
  EXPECT_LT(max_abs_diff(y, ComplexSignal(4, 4.0)), 1e-15);
}

TEST(Ifft, ZeroInZeroOut) {
  const ComplexSignal y = ifft_unnormalized(ComplexSignal(6));
  for (Complex v : y) EXPECT_EQ(v, Complex{});
}

TEST(Ifft, RoundTripScalesByN) {
  for (std::size_t n : {10u, 16u}) {
    const ComplexSignal x = random_signal(n, 7);
    ComplexSignal expect = x;
    for (Complex& v : expect) v *= static_cast<double>(n);
    EXPECT_LT(max_abs_diff(ifft_unnormalized(fft_unnormalized(x)), expect), 1e-12);
  }
}

TEST(FftPlan, CountsInvocations) {
  const FftPlan plan(8);
  OpCounter counter;
  ComplexSignal in(8, 1.0), out(8);
  plan.forward(in, out, &counter);
  plan.inverse(out, in, &counter);
  plan.forward(in, out);
  EXPECT_EQ(counter.fft_calls, 2u);
}

TEST(FftPlan, LengthMismatchThrows) {
  const FftPlan plan(8);
  ComplexSignal in(7), out(8);
  try {
    plan.forward(in, out);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::LengthMismatch);
  }
}

TEST(ApplyDft, MatchesMatrixBothVariants) {
  for (Variant v : kVariants) {
    for (std::size_t n : {4u, 7u, 8u, 12u, 13u, 32u, 33u}) {
      const ComplexSignal x = random_signal(n, 3 * n);
      EXPECT_LT(max_abs_diff(apply_dft(x, v), multiply(dft_matrix(n, v), x)), 1e-12)
          << "n=" << n << " " << to_string(v);
    }
  }
}

TEST(Reverse, MatchesReversalMatrix) {
  for (Variant v : kVariants) {
    const ComplexSignal x = random_signal(9, 1);
    EXPECT_EQ(reverse(x, v), multiply(reversal_matrix(9, v), x));
  }
}

TEST(RequireFinite, RejectsNaN) {
  ComplexSignal x(4);
  x[2] = Complex(std::nan(""), 0.0);
  EXPECT_THROW(require_finite(x, "x"), Error);
}

}  // namespace
}  // namespace mafrft
