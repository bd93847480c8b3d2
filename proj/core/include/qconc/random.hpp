// Copyright 2026 The qconc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>

#include "qconc/linalg.hpp"

namespace qconc {

using Rng = std::mt19937_64;

/// Generator for stream `stream` of a master seed. Distinct streams are
/// independent and reproducible regardless of evaluation order, so restarts
/// or batches can run in any order.
Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0);

/// Entries i.i.d. standard complex Gaussian (real and imaginary parts N(0,1/2)).
ComplexMatrix complex_gaussian(int rows, int cols, Rng& rng);

/// Haar-random d x d unitary (QR of a Ginibre matrix with phase correction).
ComplexMatrix haar_unitary(int d, Rng& rng);

/// Haar-random rows x cols isometry (orthonormal columns), rows >= cols.
ComplexMatrix haar_isometry(int rows, int cols, Rng& rng);

}  // namespace qconc
