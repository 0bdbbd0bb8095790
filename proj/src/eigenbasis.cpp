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

#include "mafrft/eigenbasis.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>
#include <utility>

#include "mafrft/foundation.hpp"

namespace mafrft {

namespace {

constexpr double kOrthoTol = 1e-10;
constexpr double kEigenTol = 1e-8;
constexpr double kSymmetryTol = 1e-8;
constexpr double kBuildOrthoTol = 1e-8;
constexpr double kCommuteTol = 1e-8;

// (-j)^l for integer l.
Complex eigenvalue(int l) {
  switch (((l % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, -1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, 1.0};
  }
}

void require_min_size(std::size_t n, const char* what) {
  if (n < 4) {
    throw Error(ErrorCode::InvalidArgument,
                std::string(what) + ": n must be >= 4, got " + std::to_string(n));
  }
}

// One basis vector of a reversal symmetry class: (e_i +- e_j)/sqrt 2, or e_i
// when i is its own mirror.
struct Orbit {
  std::size_t first;
  std::size_t second;
  bool fixed() const { return first == second; }
};

std::vector<Orbit> orbits(std::size_t n, Variant variant) {
  std::vector<Orbit> out;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t m = mirror_index(i, n, variant);
    if (m >= i) out.push_back({i, m});
  }
  return out;
}

// Dense embedding of the class basis: columns are the orthonormal vectors
// spanning the even (sign = +1) or odd (sign = -1) subspace.
Eigen::MatrixXd class_basis(std::size_t n, const std::vector<Orbit>& orb,
                            int sign) {
  std::vector<Orbit> used;
  for (const Orbit& o : orb)
    if (sign > 0 || !o.fixed()) used.push_back(o);
  Eigen::MatrixXd q = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n),
                                            static_cast<Eigen::Index>(used.size()));
  const double h = 1.0 / std::numbers::sqrt2;
  for (std::size_t c = 0; c < used.size(); ++c) {
    const auto col = static_cast<Eigen::Index>(c);
    if (used[c].fixed()) {
      q(static_cast<Eigen::Index>(used[c].first), col) = 1.0;
    } else {
      q(static_cast<Eigen::Index>(used[c].first), col) = h;
      q(static_cast<Eigen::Index>(used[c].second), col) = sign * h;
    }
  }
  return q;
}

std::size_t zero_crossings(const Eigen::VectorXd& v) {
  std::vector<double> nz;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (std::abs(v(i)) > 1e-12) nz.push_back(v(i));
  std::size_t count = 0;
  for (std::size_t i = 0; i < nz.size(); ++i)
    if ((nz[i] < 0) != (nz[(i + 1) % nz.size()] < 0)) ++count;
  return count;
}

// Eigenvectors of S restricted to one symmetry class, ordered by descending
// eigenvalue. Near-equal eigenvalues are ordered by zero-crossing count.
std::vector<Eigen::VectorXd> class_eigenvectors(const Eigen::MatrixXd& s,
                                                const Eigen::MatrixXd& q) {
  std::vector<Eigen::VectorXd> out;
  if (q.cols() == 0) return out;
  const Eigen::MatrixXd reduced = q.transpose() * s * q;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(reduced);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::DegenerateBasis, "symmetric eigensolver did not converge");
  }
  const Eigen::VectorXd& evals = solver.eigenvalues();
  const Eigen::Index m = evals.size();

  struct Entry {
    double value;
    std::size_t crossings;
    Eigen::VectorXd vec;
  };
  std::vector<Entry> entries;
  for (Eigen::Index i = m - 1; i >= 0; --i) {
    Eigen::VectorXd v = q * solver.eigenvectors().col(i);
    entries.push_back({evals(i), zero_crossings(v), std::move(v)});
  }
  const double tie = 1e-9 * std::max(1.0, evals.cwiseAbs().maxCoeff());
  for (std::size_t begin = 0; begin < entries.size();) {
    std::size_t end = begin + 1;
    while (end < entries.size() &&
           entries[end - 1].value - entries[end].value < tie)
      ++end;
    std::stable_sort(entries.begin() + static_cast<std::ptrdiff_t>(begin),
                     entries.begin() + static_cast<std::ptrdiff_t>(end),
                     [](const Entry& a, const Entry& b) {
                       return a.crossings < b.crossings;
                     });
    begin = end;
  }
  for (Entry& e : entries) out.push_back(std::move(e.vec));
  return out;
}

double orthonormality_residual(const RealMatrix& v) {
  const std::size_t n = v.cols();
  double worst = 0.0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      double dot = 0.0;
      for (std::size_t r = 0; r < v.rows(); ++r) dot += v(r, a) * v(r, b);
      worst = std::max(worst, std::abs(dot - (a == b ? 1.0 : 0.0)));
    }
  }
  return worst;
}

double column_eigen_residual(const RealMatrix& v, std::size_t k, int l,
                             Variant variant) {
  const std::size_t n = v.rows();
  ComplexSignal col(n);
  for (std::size_t r = 0; r < n; ++r) col[r] = v(r, k);
  const ComplexSignal w = apply_dft(col, variant);
  const Complex lambda = eigenvalue(l);
  double worst = 0.0;
  for (std::size_t r = 0; r < n; ++r)
    worst = std::max(worst, std::abs(w[r] - lambda * col[r]));
  return worst;
}

double symmetry_residual(const EigenBasis& b) {
  const RealMatrix& v = b.vectors();
  const std::size_t n = b.size();
  double worst = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double s = (b.exponents()[k] % 2 == 0) ? 1.0 : -1.0;
    for (std::size_t r = 0; r < n; ++r) {
      const double mirrored = v(mirror_index(r, n, b.variant()), k);
      worst = std::max(worst, std::abs(mirrored - s * v(r, k)));
    }
  }
  return worst;
}

}  // namespace

double tolerance_scale(std::size_t n) {
  return std::max(1.0, static_cast<double>(n) / 64.0);
}

EigenBasis::EigenBasis(Variant variant, RealMatrix vectors,
                       std::vector<int> exponents)
    : variant_(variant), vectors_(std::move(vectors)), exponents_(std::move(exponents)) {
  if (exponents_.empty() || vectors_.rows() != exponents_.size() ||
      vectors_.cols() != exponents_.size()) {
    throw Error(ErrorCode::InvalidArgument,
                "EigenBasis: V must be N x N with N exponents");
  }
  for (double x : vectors_.data()) {
    if (!std::isfinite(x)) {
      throw Error(ErrorCode::InvalidArgument, "EigenBasis: non-finite entry");
    }
  }
}

std::vector<int> index_vector(std::size_t n, Variant variant) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "index_vector: n must be >= 1");
  std::vector<int> l(n);
  std::iota(l.begin(), l.end(), 0);
  if (variant == Variant::Standard && n % 2 == 0) l.back() = static_cast<int>(n);
  return l;
}

Multiplicities expected_multiplicities(std::size_t n, Variant variant) {
  if (n == 0) {
    throw Error(ErrorCode::InvalidArgument, "expected_multiplicities: n must be >= 1");
  }
  const std::size_t m = n / 4;
  const std::size_t r = n % 4;
  if (variant == Variant::Standard) {
    switch (r) {
      case 0: return {m + 1, m, m, m - 1};
      case 1: return {m + 1, m, m, m};
      case 2: return {m + 1, m, m + 1, m};
      default: return {m + 1, m + 1, m + 1, m};
    }
  }
  switch (r) {
    case 0: return {m, m, m, m};
    case 1: return {m + 1, m, m, m};
    case 2: return {m + 1, m + 1, m, m};
    default: return {m + 1, m + 1, m + 1, m};
  }
}

RealMatrix commuting_matrix(std::size_t n, Variant variant) {
  require_min_size(n, "commuting_matrix");
  RealMatrix s(n, n);
  const double center =
      variant == Variant::Centered ? (static_cast<double>(n) - 1.0) / 2.0 : 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    s(k, k) = 2.0 * std::cos(2.0 * std::numbers::pi * (static_cast<double>(k) - center) /
                             static_cast<double>(n)) -
              4.0;
    if (k + 1 < n) s(k, k + 1) = s(k + 1, k) = 1.0;
  }
  const double corner = (variant == Variant::Centered && n % 2 == 0) ? -1.0 : 1.0;
  s(0, n - 1) = s(n - 1, 0) = corner;

  // S is sparse, so both products cost O(N^2).
  const ComplexMatrix w = dft_matrix(n, variant);
  double residual = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t nbrs[3] = {(i + n - 1) % n, i, (i + 1) % n};
    for (std::size_t j = 0; j < n; ++j) {
      Complex sw{}, ws{};
      const std::size_t cols[3] = {(j + n - 1) % n, j, (j + 1) % n};
      for (std::size_t t = 0; t < 3; ++t) {
        sw += s(i, nbrs[t]) * w(nbrs[t], j);
        ws += w(i, cols[t]) * s(cols[t], j);
      }
      residual = std::max(residual, std::abs(sw - ws));
    }
  }
  if (residual > kCommuteTol * tolerance_scale(n)) {
    throw Error(ErrorCode::EigenMismatch,
                "commuting_matrix: commutation residual " + std::to_string(residual));
  }
  return s;
}

EigenBasis build_eigenbasis(std::size_t n, Variant variant) {
  require_min_size(n, "build_eigenbasis");
  const RealMatrix s_dense = commuting_matrix(n, variant);
  Eigen::MatrixXd s(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      s(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = s_dense(i, j);

  const std::vector<Orbit> orb = orbits(n, variant);
  const std::vector<Eigen::VectorXd> even = class_eigenvectors(s, class_basis(n, orb, +1));
  const std::vector<Eigen::VectorXd> odd = class_eigenvectors(s, class_basis(n, orb, -1));

  const std::vector<int> l = index_vector(n, variant);
  const auto n_even = static_cast<std::size_t>(
      std::count_if(l.begin(), l.end(), [](int e) { return e % 2 == 0; }));
  if (n_even != even.size() || n - n_even != odd.size()) {
    throw Error(ErrorCode::DegenerateBasis,
                "symmetry class sizes do not match the eigenvalue index vector");
  }

  RealMatrix v(n, n);
  std::size_t ie = 0, io = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const Eigen::VectorXd& src = (l[k] % 2 == 0) ? even[ie++] : odd[io++];
    for (std::size_t r = 0; r < n; ++r) v(r, k) = src(static_cast<Eigen::Index>(r));
  }

  // Symmetrize: v <- (v + s P v) / ||.||, s = (-1)^l.
  for (std::size_t k = 0; k < n; ++k) {
    const double sgn = (l[k] % 2 == 0) ? 1.0 : -1.0;
    std::vector<double> sym(n);
    double nrm = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
      sym[r] = v(r, k) + sgn * v(mirror_index(r, n, variant), k);
      nrm += sym[r] * sym[r];
    }
    nrm = std::sqrt(nrm);
    if (nrm < 1e-8) {
      throw Error(ErrorCode::DegenerateBasis,
                  "column " + std::to_string(k) + " vanishes under symmetrization");
    }
    for (std::size_t r = 0; r < n; ++r) v(r, k) = sym[r] / nrm;
  }

  // Modified Gram-Schmidt within each eigenvalue class, in column order.
  for (int cls = 0; cls < 4; ++cls) {
    std::vector<std::size_t> done;
    for (std::size_t k = 0; k < n; ++k) {
      if (((l[k] % 4) + 4) % 4 != cls) continue;
      for (std::size_t p : done) {
        double dot = 0.0;
        for (std::size_t r = 0; r < n; ++r) dot += v(r, p) * v(r, k);
        for (std::size_t r = 0; r < n; ++r) v(r, k) -= dot * v(r, p);
      }
      double nrm = 0.0;
      for (std::size_t r = 0; r < n; ++r) nrm += v(r, k) * v(r, k);
      nrm = std::sqrt(nrm);
      if (nrm < 1e-8) {
        throw Error(ErrorCode::DegenerateBasis,
                    "column " + std::to_string(k) + " is linearly dependent");
      }
      for (std::size_t r = 0; r < n; ++r) v(r, k) /= nrm;
      done.push_back(k);
    }
  }

  // Sign: first entry of largest magnitude is positive.
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t arg = 0;
    for (std::size_t r = 1; r < n; ++r)
      if (std::abs(v(r, k)) > std::abs(v(arg, k))) arg = r;
    if (v(arg, k) < 0)
      for (std::size_t r = 0; r < n; ++r) v(r, k) = -v(r, k);
  }

  const double scale = tolerance_scale(n);
  const double ortho = orthonormality_residual(v);
  if (ortho > kBuildOrthoTol * scale) {
    throw Error(ErrorCode::DegenerateBasis,
                "orthonormality residual " + std::to_string(ortho));
  }
  for (std::size_t k = 0; k < n; ++k) {
    const double res = column_eigen_residual(v, k, l[k], variant);
    if (res > kEigenTol * scale) {
      throw Error(ErrorCode::EigenMismatch,
                  "column " + std::to_string(k) + " misses eigenvalue (-j)^" +
                      std::to_string(l[k]) + " by " + std::to_string(res));
    }
  }
  return EigenBasis(variant, std::move(v), l);
}

bool ValidationReport::orthonormality_ok() const {
  return orthonormality_residual < kOrthoTol * tolerance_scale;
}
bool ValidationReport::eigen_ok() const {
  return eigen_residual < kEigenTol * tolerance_scale;
}
bool ValidationReport::symmetry_ok() const {
  return symmetry_residual < kSymmetryTol * tolerance_scale;
}
bool ValidationReport::pass() const {
  return orthonormality_ok() && eigen_ok() && symmetry_ok() && multiplicities_ok();
}

ValidationReport validate_eigenbasis(const EigenBasis& basis) {
  const std::size_t n = basis.size();
  ValidationReport rep;
  rep.tolerance_scale = tolerance_scale(n);
  rep.orthonormality_residual = orthonormality_residual(basis.vectors());
  for (std::size_t k = 0; k < n; ++k) {
    rep.eigen_residual = std::max(
        rep.eigen_residual,
        column_eigen_residual(basis.vectors(), k, basis.exponents()[k], basis.variant()));
  }
  rep.symmetry_residual = symmetry_residual(basis);
  for (int e : basis.exponents()) ++rep.multiplicities[static_cast<std::size_t>(((e % 4) + 4) % 4)];
  rep.expected = expected_multiplicities(n, basis.variant());
  return rep;
}

}  // namespace mafrft
