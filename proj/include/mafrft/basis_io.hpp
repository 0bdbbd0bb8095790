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

#ifndef MAFRFT_BASIS_IO_HPP_
#define MAFRFT_BASIS_IO_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "mafrft/eigenbasis.hpp"

namespace mafrft {

// Basis cache layout, all little-endian:
//   "FRFTEB1"            7 bytes
//   n                    uint32
//   variant              uint8 (0 standard, 1 centered)
//   V, row-major         n*n float64
//   l                    n int32
std::vector<std::uint8_t> serialize_basis(const EigenBasis& basis);
EigenBasis deserialize_basis(const std::vector<std::uint8_t>& bytes);

void save_basis(const EigenBasis& basis, const std::filesystem::path& path);
EigenBasis load_basis(const std::filesystem::path& path);

}  // namespace mafrft

#endif  // MAFRFT_BASIS_IO_HPP_
