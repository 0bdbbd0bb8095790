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

#ifndef MAFRFT_FRFT_HPP_
#define MAFRFT_FRFT_HPP_

#include <span>

#include "mafrft/eigenbasis.hpp"
#include "mafrft/types.hpp"

namespace mafrft {

// Single-order fractional transform W^a = V diag(exp(-j pi l a / 2)) V^T.
// The order is taken as-is (period 4 follows from the integer exponents).

/// Dense W^a. Intended for tests and small-N inspection.
ComplexMatrix frft_matrix(const EigenBasis& basis, double order);

/// W^a x in O(N^2) without forming W^a.
ComplexSignal frft_apply(const EigenBasis& basis, double order,
                         std::span<const Complex> x);

}  // namespace mafrft

#endif  // MAFRFT_FRFT_HPP_
