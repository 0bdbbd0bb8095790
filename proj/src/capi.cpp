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

#include "mafrft/mafrft.h"

#include <algorithm>
#include <exception>
#include <new>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mafrft/basis_io.hpp"
#include "mafrft/eigenbasis.hpp"
#include "mafrft/frft.hpp"
#include "mafrft/multiangle.hpp"

static_assert(sizeof(mafrft_complex) == sizeof(mafrft::Complex));

struct mafrft_basis {
  mafrft::EigenBasis basis;
};

struct mafrft_result {
  mafrft::MultiangleResult result;
  std::size_t fft_count;
};

namespace {

thread_local std::string g_last_error;

mafrft_status to_status(mafrft::ErrorCode code) {
  using mafrft::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return MAFRFT_ERR_INVALID_ARGUMENT;
    case ErrorCode::LengthMismatch: return MAFRFT_ERR_LENGTH_MISMATCH;
    case ErrorCode::OddWithoutPad: return MAFRFT_ERR_ODD_WITHOUT_PAD;
    case ErrorCode::DegenerateBasis: return MAFRFT_ERR_DEGENERATE_BASIS;
    case ErrorCode::EigenMismatch: return MAFRFT_ERR_EIGEN_MISMATCH;
    case ErrorCode::ZeroSignal: return MAFRFT_ERR_ZERO_SIGNAL;
    case ErrorCode::Io: return MAFRFT_ERR_IO;
    case ErrorCode::Format: return MAFRFT_ERR_FORMAT;
  }
  return MAFRFT_ERR_INTERNAL;
}

mafrft_status fail(mafrft_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
mafrft_status guarded(F&& body) {
  try {
    body();
    return MAFRFT_OK;
  } catch (const mafrft::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(MAFRFT_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(MAFRFT_ERR_INTERNAL, e.what());
  }
}

mafrft::Variant to_variant(mafrft_variant v) {
  if (v == MAFRFT_STANDARD) return mafrft::Variant::Standard;
  if (v == MAFRFT_CENTERED) return mafrft::Variant::Centered;
  throw mafrft::Error(mafrft::ErrorCode::InvalidArgument, "unknown variant");
}

std::span<const mafrft::Complex> as_signal(const mafrft_complex* x, std::size_t len) {
  if (x == nullptr && len != 0) {
    throw mafrft::Error(mafrft::ErrorCode::InvalidArgument, "null signal buffer");
  }
  return {reinterpret_cast<const mafrft::Complex*>(x), len};
}

void require(const void* p, const char* what) {
  if (p == nullptr) {
    throw mafrft::Error(mafrft::ErrorCode::InvalidArgument,
                        std::string(what) + " must not be null");
  }
}

template <typename T, typename Src>
mafrft_status copy_out(const Src& src, T* out, std::size_t out_len) {
  if (out == nullptr) return fail(MAFRFT_ERR_INVALID_ARGUMENT, "output buffer is null");
  if (out_len < src.size()) {
    return fail(MAFRFT_ERR_BUFFER_TOO_SMALL,
                "output buffer holds " + std::to_string(out_len) + ", need " +
                    std::to_string(src.size()));
  }
  std::copy(src.begin(), src.end(), out);
  return MAFRFT_OK;
}

}  // namespace

extern "C" {

const char* mafrft_last_error(void) { return g_last_error.c_str(); }

const char* mafrft_status_string(mafrft_status status) {
  switch (status) {
    case MAFRFT_OK: return "ok";
    case MAFRFT_ERR_INVALID_ARGUMENT: return "invalid argument";
    case MAFRFT_ERR_LENGTH_MISMATCH: return "length mismatch";
    case MAFRFT_ERR_ODD_WITHOUT_PAD: return "odd length without padding";
    case MAFRFT_ERR_DEGENERATE_BASIS: return "degenerate basis";
    case MAFRFT_ERR_EIGEN_MISMATCH: return "eigenvalue mismatch";
    case MAFRFT_ERR_ZERO_SIGNAL: return "zero signal";
    case MAFRFT_ERR_IO: return "i/o error";
    case MAFRFT_ERR_FORMAT: return "format error";
    case MAFRFT_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case MAFRFT_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

mafrft_status mafrft_basis_create(uint32_t n, mafrft_variant variant,
                                  mafrft_basis** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    *out = new mafrft_basis{mafrft::build_eigenbasis(n, to_variant(variant))};
  });
}

mafrft_status mafrft_basis_load(const char* path, mafrft_basis** out) {
  return guarded([&] {
    require(out, "out");
    require(path, "path");
    *out = nullptr;
    *out = new mafrft_basis{mafrft::load_basis(path)};
  });
}

mafrft_status mafrft_basis_save(const mafrft_basis* basis, const char* path) {
  return guarded([&] {
    require(basis, "basis");
    require(path, "path");
    mafrft::save_basis(basis->basis, path);
  });
}

void mafrft_basis_destroy(mafrft_basis* basis) { delete basis; }

uint32_t mafrft_basis_size(const mafrft_basis* basis) {
  return basis ? static_cast<uint32_t>(basis->basis.size()) : 0;
}

mafrft_variant mafrft_basis_variant(const mafrft_basis* basis) {
  return (basis && basis->basis.variant() == mafrft::Variant::Centered)
             ? MAFRFT_CENTERED
             : MAFRFT_STANDARD;
}

mafrft_status mafrft_basis_vectors(const mafrft_basis* basis, double* out,
                                   size_t out_len) {
  if (!basis) return fail(MAFRFT_ERR_INVALID_ARGUMENT, "basis must not be null");
  return copy_out(basis->basis.vectors().data(), out, out_len);
}

mafrft_status mafrft_basis_exponents(const mafrft_basis* basis, int32_t* out,
                                     size_t out_len) {
  if (!basis) return fail(MAFRFT_ERR_INVALID_ARGUMENT, "basis must not be null");
  return copy_out(basis->basis.exponents(), out, out_len);
}

mafrft_status mafrft_basis_validate(const mafrft_basis* basis,
                                    mafrft_validation_report* out) {
  return guarded([&] {
    require(basis, "basis");
    require(out, "out");
    const mafrft::ValidationReport rep = mafrft::validate_eigenbasis(basis->basis);
    *out = mafrft_validation_report{};
    out->orthonormality_residual = rep.orthonormality_residual;
    out->eigen_residual = rep.eigen_residual;
    out->symmetry_residual = rep.symmetry_residual;
    for (std::size_t i = 0; i < 4; ++i) {
      out->multiplicities[i] = static_cast<uint32_t>(rep.multiplicities[i]);
      out->expected[i] = static_cast<uint32_t>(rep.expected[i]);
    }
    out->orthonormality_ok = rep.orthonormality_ok();
    out->eigen_ok = rep.eigen_ok();
    out->symmetry_ok = rep.symmetry_ok();
    out->multiplicities_ok = rep.multiplicities_ok();
    out->pass = rep.pass();
  });
}

mafrft_status mafrft_frft_apply(const mafrft_basis* basis, double order,
                                const mafrft_complex* x, size_t len,
                                mafrft_complex* out) {
  return guarded([&] {
    require(basis, "basis");
    require(out, "out");
    const mafrft::ComplexSignal y = mafrft::frft_apply(basis->basis, order, as_signal(x, len));
    std::copy(y.begin(), y.end(), reinterpret_cast<mafrft::Complex*>(out));
  });
}

mafrft_status mafrft_compute(const mafrft_basis* basis, const mafrft_complex* x,
                             size_t len, mafrft_path path, int pad_odd,
                             mafrft_result** out) {
  return guarded([&] {
    require(basis, "basis");
    require(out, "out");
    *out = nullptr;
    mafrft::MultianglePath p;
    switch (path) {
      case MAFRFT_PATH_NAIVE: p = mafrft::MultianglePath::Naive; break;
      case MAFRFT_PATH_FULL: p = mafrft::MultianglePath::Full; break;
      case MAFRFT_PATH_HALF: p = mafrft::MultianglePath::Half; break;
      default:
        throw mafrft::Error(mafrft::ErrorCode::InvalidArgument, "unknown path");
    }
    mafrft::OpCounter counter;
    mafrft::MultiangleResult res = mafrft::ma_frft(
        basis->basis, as_signal(x, len), p,
        pad_odd ? mafrft::OddLength::ZeroPad : mafrft::OddLength::Reject, &counter);
    *out = new mafrft_result{std::move(res), counter.fft_calls};
  });
}

void mafrft_result_destroy(mafrft_result* result) { delete result; }

size_t mafrft_result_rows(const mafrft_result* result) {
  return result ? result->result.x.rows() : 0;
}

size_t mafrft_result_cols(const mafrft_result* result) {
  return result ? result->result.x.cols() : 0;
}

size_t mafrft_result_fft_count(const mafrft_result* result) {
  return result ? result->fft_count : 0;
}

mafrft_status mafrft_result_matrix(const mafrft_result* result, mafrft_complex* out,
                                   size_t out_len) {
  if (!result) return fail(MAFRFT_ERR_INVALID_ARGUMENT, "result must not be null");
  return copy_out(result->result.x.data(), reinterpret_cast<mafrft::Complex*>(out),
                  out_len);
}

mafrft_status mafrft_result_orders(const mafrft_result* result, double* out,
                                   size_t out_len) {
  if (!result) return fail(MAFRFT_ERR_INVALID_ARGUMENT, "result must not be null");
  return copy_out(result->result.orders, out, out_len);
}

mafrft_status mafrft_result_concentration(const mafrft_result* result, double* out,
                                          size_t out_len) {
  if (!result) return fail(MAFRFT_ERR_INVALID_ARGUMENT, "result must not be null");
  std::vector<double> profile;
  const mafrft_status st =
      guarded([&] { profile = mafrft::concentration_profile(result->result); });
  if (st != MAFRFT_OK) return st;
  return copy_out(profile, out, out_len);
}

}  // extern "C"
