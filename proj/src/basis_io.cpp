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

#include "mafrft/basis_io.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>

namespace mafrft {

namespace {

constexpr char kMagic[] = "FRFTEB1";
constexpr std::size_t kMagicLen = 7;
constexpr std::size_t kHeaderLen = kMagicLen + 4 + 1;

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

std::uint32_t get_u32(const std::uint8_t* p) {
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(p[i]) << (8 * i);
  return v;
}

std::uint64_t get_u64(const std::uint8_t* p) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(p[i]) << (8 * i);
  return v;
}

}  // namespace

std::vector<std::uint8_t> serialize_basis(const EigenBasis& basis) {
  const std::size_t n = basis.size();
  std::vector<std::uint8_t> out;
  out.reserve(kHeaderLen + n * n * 8 + n * 4);
  out.insert(out.end(), kMagic, kMagic + kMagicLen);
  put_u32(out, static_cast<std::uint32_t>(n));
  out.push_back(basis.variant() == Variant::Standard ? 0 : 1);
  for (double x : basis.vectors().data()) put_u64(out, std::bit_cast<std::uint64_t>(x));
  for (int e : basis.exponents())
    put_u32(out, static_cast<std::uint32_t>(static_cast<std::int32_t>(e)));
  return out;
}

EigenBasis deserialize_basis(const std::vector<std::uint8_t>& bytes) {
  if (bytes.size() < kHeaderLen || std::memcmp(bytes.data(), kMagic, kMagicLen) != 0) {
    throw Error(ErrorCode::Format, "basis cache: bad magic");
  }
  const std::uint32_t n = get_u32(bytes.data() + kMagicLen);
  const std::uint8_t tag = bytes[kMagicLen + 4];
  if (n == 0 || tag > 1) throw Error(ErrorCode::Format, "basis cache: bad header");
  const std::size_t nn = static_cast<std::size_t>(n);
  if (bytes.size() != kHeaderLen + nn * nn * 8 + nn * 4) {
    throw Error(ErrorCode::Format, "basis cache: unexpected file size");
  }
  RealMatrix v(nn, nn);
  const std::uint8_t* p = bytes.data() + kHeaderLen;
  for (double& x : v.data()) {
    x = std::bit_cast<double>(get_u64(p));
    p += 8;
  }
  std::vector<int> l(nn);
  for (int& e : l) {
    e = static_cast<std::int32_t>(get_u32(p));
    p += 4;
  }
  return EigenBasis(tag == 0 ? Variant::Standard : Variant::Centered, std::move(v),
                    std::move(l));
}

void save_basis(const EigenBasis& basis, const std::filesystem::path& path) {
  const std::vector<std::uint8_t> bytes = serialize_basis(basis);
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::Io, "cannot open " + path.string() + " for writing");
  f.write(reinterpret_cast<const char*>(bytes.data()),
          static_cast<std::streamsize>(bytes.size()));
  if (!f) throw Error(ErrorCode::Io, "write failed: " + path.string());
}

EigenBasis load_basis(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::Io, "cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(f)),
                                  std::istreambuf_iterator<char>());
  return deserialize_basis(bytes);
}

}  // namespace mafrft
