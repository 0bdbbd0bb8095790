/* Copyright 2026 The mafrft Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the multiangle fractional Fourier transform library.
 *
 * Objects are opaque handles created by *_create / *_load / mafrft_compute
 * and released with the matching *_destroy. Every fallible call returns a
 * mafrft_status; on failure a human-readable message is available from
 * mafrft_last_error() on the same thread until the next failing call.
 *
 * Complex buffers use mafrft_complex, which is layout-compatible with
 * std::complex<double> and C99 double _Complex. Matrices are row-major,
 * rows = sample index, columns = fractional order index.
 */

#ifndef MAFRFT_MAFRFT_H_
#define MAFRFT_MAFRFT_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(MAFRFT_BUILDING)
#    define MAFRFT_API __declspec(dllexport)
#  else
#    define MAFRFT_API __declspec(dllimport)
#  endif
#else
#  define MAFRFT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mafrft_status {
  MAFRFT_OK = 0,
  MAFRFT_ERR_INVALID_ARGUMENT = 1,
  MAFRFT_ERR_LENGTH_MISMATCH = 2,
  MAFRFT_ERR_ODD_WITHOUT_PAD = 3,
  MAFRFT_ERR_DEGENERATE_BASIS = 4,
  MAFRFT_ERR_EIGEN_MISMATCH = 5,
  MAFRFT_ERR_ZERO_SIGNAL = 6,
  MAFRFT_ERR_IO = 7,
  MAFRFT_ERR_FORMAT = 8,
  MAFRFT_ERR_BUFFER_TOO_SMALL = 9,
  MAFRFT_ERR_INTERNAL = 10
} mafrft_status;

typedef enum mafrft_variant {
  MAFRFT_STANDARD = 0,
  MAFRFT_CENTERED = 1
} mafrft_variant;

typedef enum mafrft_path {
  MAFRFT_PATH_NAIVE = 0,
  MAFRFT_PATH_FULL = 1,
  MAFRFT_PATH_HALF = 2
} mafrft_path;

typedef struct mafrft_complex {
  double re;
  double im;
} mafrft_complex;

typedef struct mafrft_basis mafrft_basis;
typedef struct mafrft_result mafrft_result;

/* Eigenvalue order in the multiplicity arrays: 1, -j, -1, j. */
typedef struct mafrft_validation_report {
  double orthonormality_residual;
  double eigen_residual;
  double symmetry_residual;
  uint32_t multiplicities[4];
  uint32_t expected[4];
  int orthonormality_ok;
  int eigen_ok;
  int symmetry_ok;
  int multiplicities_ok;
  int pass;
} mafrft_validation_report;

MAFRFT_API const char* mafrft_last_error(void);
MAFRFT_API const char* mafrft_status_string(mafrft_status status);

/* ---- Eigenbasis -------------------------------------------------------- */

/* n >= 4. */
MAFRFT_API mafrft_status mafrft_basis_create(uint32_t n, mafrft_variant variant,
                                             mafrft_basis** out);
MAFRFT_API mafrft_status mafrft_basis_load(const char* path, mafrft_basis** out);
MAFRFT_API mafrft_status mafrft_basis_save(const mafrft_basis* basis,
                                           const char* path);
MAFRFT_API void mafrft_basis_destroy(mafrft_basis* basis);

MAFRFT_API uint32_t mafrft_basis_size(const mafrft_basis* basis);
MAFRFT_API mafrft_variant mafrft_basis_variant(const mafrft_basis* basis);

/* V as row-major n*n doubles, l as n int32 values. */
MAFRFT_API mafrft_status mafrft_basis_vectors(const mafrft_basis* basis,
                                              double* out, size_t out_len);
MAFRFT_API mafrft_status mafrft_basis_exponents(const mafrft_basis* basis,
                                                int32_t* out, size_t out_len);

MAFRFT_API mafrft_status mafrft_basis_validate(const mafrft_basis* basis,
                                               mafrft_validation_report* out);

/* ---- Single order ------------------------------------------------------ */

/* `out` must hold `len` values; len must equal the basis size. */
MAFRFT_API mafrft_status mafrft_frft_apply(const mafrft_basis* basis, double order,
                                           const mafrft_complex* x, size_t len,
                                           mafrft_complex* out);

/* ---- Multiangle -------------------------------------------------------- */

/* pad_odd != 0 lets the half path zero-pad odd N to R = N + 1. */
MAFRFT_API mafrft_status mafrft_compute(const mafrft_basis* basis,
                                        const mafrft_complex* x, size_t len,
                                        mafrft_path path, int pad_odd,
                                        mafrft_result** out);
MAFRFT_API void mafrft_result_destroy(mafrft_result* result);

MAFRFT_API size_t mafrft_result_rows(const mafrft_result* result);
MAFRFT_API size_t mafrft_result_cols(const mafrft_result* result);
/* FFT invocations spent by mafrft_compute; 0 for the naive path. */
MAFRFT_API size_t mafrft_result_fft_count(const mafrft_result* result);

MAFRFT_API mafrft_status mafrft_result_matrix(const mafrft_result* result,
                                              mafrft_complex* out, size_t out_len);
MAFRFT_API mafrft_status mafrft_result_orders(const mafrft_result* result,
                                              double* out, size_t out_len);
MAFRFT_API mafrft_status mafrft_result_concentration(const mafrft_result* result,
                                                     double* out, size_t out_len);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif  /* MAFRFT_MAFRFT_H_ */
