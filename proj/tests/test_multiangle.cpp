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

#include <random>

#include "gamma_oracle.hpp"
#include "gtest/gtest.h"
#include "mafrft/frft.hpp"
#include "test_util.hpp"

namespace mafrft {
namespace {

using testing::argmax_set;
using testing::random_real_signal;
using testing::random_signal;

constexpr Variant kVariants[] = {Variant::Standard, Variant::Centered};

// Per-order oracle: column r of X against frft_apply at orders[r].
double per_order_error(const EigenBasis& b, const MultiangleResult& res,
                       const ComplexSignal& x) {
  double worst = 0.0;
  for (std::size_t r = 0; r < res.x.cols(); ++r)
    worst = std::max(worst, max_abs_diff(res.x.column(r), frft_apply(b, res.orders[r], x)));
  return worst;
}

// ---- change of basis -------------------------------------------------------

TEST(ChangeOfBasis, EigenvectorMapsToUnitVector) {
  const EigenBasis b = build_eigenbasis(10, Variant::Standard);
  ComplexSignal x(10);
  for (std::size_t r = 0; r < 10; ++r) x[r] = b.vectors()(r, 3);
  const ComplexSignal y = change_of_basis(b, x);
  for (std::size_t k = 0; k < 10; ++k)
    EXPECT_NEAR(std::abs(y[k] - (k == 3 ? 1.0 : 0.0)), 0.0, 1e-10);
}

TEST(ChangeOfBasis, ZeroInZeroOut) {
  const EigenBasis b = build_eigenbasis(8, Variant::Centered);
  for (Complex v : change_of_basis(b, ComplexSignal(8))) EXPECT_EQ(v, Complex{});
  for (Complex v : change_of_basis_fast(b, ComplexSignal(8))) EXPECT_EQ(v, Complex{});
}

TEST(ChangeOfBasis, PreservesNorm) {
  const EigenBasis b = build_eigenbasis(9, Variant::Standard);
  const ComplexSignal x = random_signal(9, 21);
  EXPECT_NEAR(norm2(change_of_basis(b, x)), norm2(x), 1e-10);
}

TEST(ChangeOfBasisFast, MatchesDirectProduct) {
  for (Variant v : kVariants)
    for (std::size_t n : {8u, 9u, 12u, 13u, 4u, 5u, 64u}) {
      const EigenBasis b = build_eigenbasis(n, v);
      const ComplexSignal x = random_signal(n, n + 50);
      EXPECT_LT(max_abs_diff(change_of_basis_fast(b, x), change_of_basis(b, x)), 1e-10)
          << "n=" << n << " " << to_string(v);
    }
}

TEST(ChangeOfBasisFast, CenteredEvenInputHasNoOddCoefficients) {
  const std::size_t n = 12;
  const EigenBasis b = build_eigenbasis(n, Variant::Centered);
  ComplexSignal x = random_signal(n, 3);
  const ComplexSignal px = reverse(x, Variant::Centered);
  ComplexSignal even(n), odd(n);
  for (std::size_t i = 0; i < n; ++i) {
    even[i] = x[i] + px[i];
    odd[i] = x[i] - px[i];
  }
  const ComplexSignal ye = change_of_basis_fast(b, even);
  const ComplexSignal yo = change_of_basis_fast(b, odd);
  for (std::size_t k = 0; k < n; ++k) {
    if (k % 2 == 1) EXPECT_LT(std::abs(ye[k]), 1e-12);
    if (k % 2 == 0) EXPECT_LT(std::abs(yo[k]), 1e-12);
  }
}

TEST(ChangeOfBasisFast, RoughlyHalfTheMultiplies) {
  for (Variant v : kVariants) {
    const EigenBasis b = build_eigenbasis(64, v);
    const ComplexSignal x = random_signal(64, 1);
    OpCounter direct, fast;
    change_of_basis(b, x, &direct);
    change_of_basis_fast(b, x, &fast);
    EXPECT_EQ(direct.multiplies, 64u * 64u);
    EXPECT_LE(static_cast<double>(fast.multiplies), 0.55 * static_cast<double>(direct.multiplies));
  }
  // Exact counts: standard even N pays for the two fixed rows.
  OpCounter s, c;
  change_of_basis_fast(build_eigenbasis(64, Variant::Standard), random_signal(64, 0), &s);
  change_of_basis_fast(build_eigenbasis(64, Variant::Centered), random_signal(64, 0), &c);
  EXPECT_EQ(s.multiplies, 33u * 33u + 31u * 31u);
  EXPECT_EQ(c.multiplies, 2u * 32u * 32u);
}

TEST(ChangeOfBasis, LengthMismatch) {
  const EigenBasis b = build_eigenbasis(8, Variant::Standard);
  EXPECT_THROW(change_of_basis(b, random_signal(9, 0)), Error);
  EXPECT_THROW(change_of_basis_fast(b, random_signal(9, 0)), Error);
  EXPECT_THROW(z_matrix(b, random_signal(9, 0)), Error);
  EXPECT_THROW(ma_frft_full(b, random_signal(9, 0)), Error);
  EXPECT_THROW(ma_frft_naive(b, random_signal(9, 0)), Error);
  EXPECT_THROW(ma_frft_half(b, random_signal(9, 0), OddLength::ZeroPad), Error);
}

// ---- Z and Zhat ------------------------------------------------------------

TEST(ZMatrix, ZhatFoldsLastColumn) {
  const std::size_t n = 8;
  const EigenBasis b = build_eigenbasis(n, Variant::Standard);
  const ZMatrix z = z_matrix(b, random_signal(n, 5));
  ASSERT_TRUE(z.zhat.has_value());
  for (std::size_t r = 0; r < n; ++r) {
    EXPECT_EQ((*z.zhat)(r, n - 1), Complex{});
    EXPECT_EQ((*z.zhat)(r, 0), z.z(r, 0) + z.z(r, n - 1));
    for (std::size_t k = 1; k + 1 < n; ++k) EXPECT_EQ((*z.zhat)(r, k), z.z(r, k));
  }
}

TEST(ZMatrix, NoZhatOutsideStandardEven) {
  EXPECT_FALSE(z_matrix(build_eigenbasis(8, Variant::Centered), random_signal(8, 0)).zhat);
  EXPECT_FALSE(z_matrix(build_eigenbasis(9, Variant::Standard), random_signal(9, 0)).zhat);
}

TEST(ZMatrix, CenteredRowSymmetry) {
  const std::size_t n = 10;
  const ZMatrix z = z_matrix(build_eigenbasis(n, Variant::Centered), random_signal(n, 6));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k)
      EXPECT_LT(std::abs(z.z(n - r - 1, k) - (k % 2 ? -1.0 : 1.0) * z.z(r, k)), 1e-12);
}

TEST(ZMatrix, StandardZhatRowSymmetry) {
  const std::size_t n = 8;
  const ZMatrix z = z_matrix(build_eigenbasis(n, Variant::Standard), random_signal(n, 7));
  for (std::size_t r = 1; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k)
      EXPECT_LT(std::abs((*z.zhat)(n - r, k) - (k % 2 ? -1.0 : 1.0) * (*z.zhat)(r, k)), 1e-12);
}

TEST(Gamma, NumericMatchesClosedForm) {
  for (std::size_t n : {4u, 6u, 8u})
    EXPECT_LT(max_abs_diff(testing::gamma_numeric(n), testing::gamma_closed_form(n)), 1e-10);
}

TEST(Gamma, FactorsB) {
  for (std::size_t n : {4u, 6u, 8u}) {
    ComplexMatrix fw = dft_matrix(n, Variant::Standard);
    for (Complex& c : fw.data()) c *= std::sqrt(static_cast<double>(n));
    EXPECT_LT(max_abs_diff(multiply(fw, testing::gamma_closed_form(n)), testing::b_matrix(n)),
              1e-10);
  }
}

// ---- full / naive / half ---------------------------------------------------

TEST(MaFrftFull, ColumnZeroIsInput) {
  for (Variant v : kVariants) {
    const EigenBasis b = build_eigenbasis(12, v);
    const ComplexSignal x = random_signal(12, 8);
    EXPECT_LT(max_abs_diff(ma_frft_full(b, x).x.column(0), x), 1e-9);
  }
}

TEST(MaFrftFull, IntegerOrderColumns) {
  for (Variant v : kVariants) {
    const EigenBasis b = build_eigenbasis(8, v);
    const ComplexSignal x = random_signal(8, 9);
    const MultiangleResult res = ma_frft_full(b, x);
    EXPECT_LT(max_abs_diff(res.x.column(2), multiply(dft_matrix(8, v), x)), 1e-8);
    EXPECT_LT(max_abs_diff(res.x.column(4), reverse(x, v)), 1e-8);
  }
}

TEST(MaFrftFull, MatchesPerOrderOracle) {
  for (Variant v : kVariants)
    for (std::size_t n : {8u, 9u, 12u, 13u}) {
      const EigenBasis b = build_eigenbasis(n, v);
      const ComplexSignal x = random_signal(n, 10 + n);
      const MultiangleResult res = ma_frft_full(b, x);
      EXPECT_EQ(res.x.cols(), n);
      EXPECT_LT(per_order_error(b, res, x), 1e-8) << "n=" << n << " " << to_string(v);
    }
}

TEST(MaFrftFull, StandardEvenNeedsTheCorrection) {
  // Without Zhat the even-N standard result is wrong: row FFTs of raw Z.
  const std::size_t n = 8;
  const EigenBasis b = build_eigenbasis(n, Variant::Standard);
  const ComplexSignal x = random_signal(n, 12);
  const ZMatrix z = z_matrix(b, x);
  ComplexMatrix wrong(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const ComplexSignal row = fft_unnormalized(z.z.row(r));
    for (std::size_t c = 0; c < n; ++c) wrong(r, c) = row[c];
  }
  EXPECT_GT(max_abs_diff(wrong, ma_frft_naive(b, x).x), 1e-3);
}

TEST(MaFrftFull, CountsOneFftPerRow) {
  OpCounter c;
  ma_frft_full(build_eigenbasis(16, Variant::Standard), random_signal(16, 0), &c);
  EXPECT_EQ(c.fft_calls, 16u);
}

TEST(MaFrftNaive, CrossPathAndAnchors) {
  for (Variant v : kVariants)
    for (std::size_t n : {8u, 9u, 12u, 13u}) {
      const EigenBasis b = build_eigenbasis(n, v);
      const ComplexSignal x = random_signal(n, 30 + n);
      const MultiangleResult naive = ma_frft_naive(b, x);
      EXPECT_LT(max_abs_diff(naive.x, ma_frft_full(b, x).x), 1e-8);
      EXPECT_LT(max_abs_diff(naive.x.column(0), x), 1e-10);
    }
  const EigenBasis b = build_eigenbasis(12, Variant::Standard);
  const ComplexSignal x = random_signal(12, 1);
  EXPECT_LT(max_abs_diff(ma_frft_naive(b, x).x.column(3),
                         multiply(dft_matrix(12, Variant::Standard), x)),
            1e-8);
}

TEST(MaFrftHalf, MatchesFullAtEightBothVariants) {
  for (Variant v : kVariants) {
    const EigenBasis b = build_eigenbasis(8, v);
    const ComplexSignal x = random_signal(8, 40);
    EXPECT_LT(max_abs_diff(ma_frft_half(b, x, OddLength::Reject).x, ma_frft_full(b, x).x),
              1e-12);
  }
}

TEST(MaFrftHalf, FftCounts) {
  OpCounter s, c;
  ma_frft_half(build_eigenbasis(8, Variant::Standard), random_signal(8, 0), OddLength::Reject, &s);
  ma_frft_half(build_eigenbasis(8, Variant::Centered), random_signal(8, 0), OddLength::Reject, &c);
  EXPECT_EQ(s.fft_calls, 5u);
  EXPECT_EQ(c.fft_calls, 4u);
}

TEST(MaFrftHalf, OddPaddedCentered) {
  const EigenBasis b = build_eigenbasis(9, Variant::Centered);
  const ComplexSignal x = random_signal(9, 41);
  OpCounter c;
  const MultiangleResult res = ma_frft_half(b, x, OddLength::ZeroPad, &c);
  EXPECT_EQ(res.x.rows(), 9u);
  EXPECT_EQ(res.x.cols(), 10u);
  EXPECT_EQ(c.fft_calls, 5u);
  for (std::size_t r = 0; r < 10; ++r) EXPECT_DOUBLE_EQ(res.orders[r], 0.4 * static_cast<double>(r));
  EXPECT_LT(per_order_error(b, res, x), 1e-8);
}

TEST(MaFrftHalf, OddPaddedStandard) {
  const EigenBasis b = build_eigenbasis(11, Variant::Standard);
  const ComplexSignal x = random_signal(11, 42);
  OpCounter c;
  const MultiangleResult res = ma_frft_half(b, x, OddLength::ZeroPad, &c);
  EXPECT_EQ(c.fft_calls, 6u);
  EXPECT_LT(per_order_error(b, res, x), 1e-8);
}

TEST(MaFrftHalf, OddWithoutPadRefuses) {
  const EigenBasis b = build_eigenbasis(9, Variant::Centered);
  try {
    ma_frft_half(b, random_signal(9, 0), OddLength::Reject);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OddWithoutPad);
  }
}

TEST(MaFrftHalf, PaddingIgnoredForEvenN) {
  const EigenBasis b = build_eigenbasis(10, Variant::Standard);
  const ComplexSignal x = random_signal(10, 2);
  EXPECT_EQ(ma_frft_half(b, x, OddLength::ZeroPad).x, ma_frft_half(b, x, OddLength::Reject).x);
}

// ---- properties ------------------------------------------------------------

TEST(MultiangleProperties, ColumnUnitarity) {
  for (Variant v : kVariants)
    for (std::size_t n : {6u, 7u, 16u}) {
      const EigenBasis b = build_eigenbasis(n, v);
      const ComplexSignal x = random_signal(n, 60 + n);
      const MultiangleResult res = ma_frft_full(b, x);
      for (std::size_t r = 0; r < n; ++r) EXPECT_NEAR(norm2(res.x.column(r)), norm2(x), 1e-8);
    }
}

TEST(MultiangleProperties, RealInputConjugateSymmetry) {
  for (Variant v : kVariants)
    for (std::size_t n : {8u, 9u, 12u}) {
      const EigenBasis b = build_eigenbasis(n, v);
      const ComplexSignal x = random_real_signal(n, 70 + n);
      const ZMatrix z = z_matrix(b, x);
      for (Complex c : z.z.data()) EXPECT_EQ(c.imag(), 0.0);
      const ComplexMatrix m = ma_frft_full(b, x).x;
      for (std::size_t row = 0; row < n; ++row)
        for (std::size_t r = 0; r < n; ++r)
          EXPECT_LT(std::abs(m(row, (n - r) % n) - std::conj(m(row, r))), 1e-10);
    }
}

TEST(MultiangleProperties, HalfTurnIsReversal) {
  for (Variant v : kVariants)
    for (std::size_t n : {8u, 10u}) {
      const EigenBasis b = build_eigenbasis(n, v);
      const MultiangleResult res = ma_frft_full(b, random_signal(n, 80));
      for (std::size_t r = 0; r < n; ++r)
        EXPECT_LT(max_abs_diff(res.x.column((r + n / 2) % n), reverse(res.x.column(r), v)), 1e-8);
    }
}

TEST(MultiangleProperties, SignFlipChangesZButNotX) {
  for (Variant v : kVariants) {
    const std::size_t n = 12;
    const EigenBasis b = build_eigenbasis(n, v);
    RealMatrix flipped = b.vectors();
    for (std::size_t r = 0; r < n; ++r) {
      flipped(r, 1) = -flipped(r, 1);
      flipped(r, 4) = -flipped(r, 4);
    }
    const EigenBasis fb(v, flipped, b.exponents());
    const ComplexSignal x = random_signal(n, 90);
    EXPECT_LT(max_abs_diff(ma_frft_full(b, x).x, ma_frft_full(fb, x).x), 1e-10);
    EXPECT_LT(max_abs_diff(ma_frft_half(b, x, OddLength::Reject).x,
                           ma_frft_half(fb, x, OddLength::Reject).x),
              1e-10);
  }
}

TEST(OrderGrid, EquallySpacedFromZero) {
  const std::vector<double> g = order_grid(8);
  EXPECT_EQ(g.front(), 0.0);
  for (std::size_t r = 0; r < 8; ++r) EXPECT_DOUBLE_EQ(g[r], 0.5 * static_cast<double>(r));
}

// ---- concentration ---------------------------------------------------------

TEST(ConcentrationProfile, DeltaAtOrderZero) {
  ComplexSignal x(8);
  x[0] = 1.0;
  const std::vector<double> p =
      concentration_profile(ma_frft_full(build_eigenbasis(8, Variant::Standard), x));
  EXPECT_NEAR(p[0], 1.0, 1e-12);
}

TEST(ConcentrationProfile, ConstantCollapsesAtOrderOne) {
  const ComplexSignal x(8, 1.0);
  const std::vector<double> p =
      concentration_profile(ma_frft_full(build_eigenbasis(8, Variant::Standard), x));
  EXPECT_NEAR(p[2], 1.0, 1e-10);
}

TEST(ConcentrationProfile, UnitChirpPeaksAtHalfOrders) {
  const ComplexSignal x = testing::unit_chirp(8);
  const MultiangleResult res = ma_frft_full(build_eigenbasis(8, Variant::Standard), x);
  EXPECT_EQ(argmax_set(concentration_profile(res)), (std::vector<std::size_t>{1, 5}));
}

TEST(ConcentrationProfile, ZeroSignal) {
  const MultiangleResult res =
      ma_frft_full(build_eigenbasis(8, Variant::Standard), ComplexSignal(8));
  try {
    concentration_profile(res);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroSignal);
  }
}

}  // namespace
}  // namespace mafrft
