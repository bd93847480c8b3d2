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

// Symmetric / antisymmetric projectors on copy pairs and the two-copy
// operator V.
//
// The two-copy space is ordered H1 (x) H2 (x) H1' (x) H2' (copy of rho
// first, copy of sigma second). Operators acting on subsystem i of both
// copies are built on adjacent factors (H1 H1' H2 H2') and moved into place
// with permute_subsystems and permutation {0, 2, 1, 3}.

#include <string_view>

#include "qconc/linalg.hpp"
#include "qconc/states.hpp"

namespace qconc {

/// Which of the two V operators is meant.
///   A: P-^(1) (x) (P-^(2) - P+^(2))
///   B: (P-^(1) - P+^(1)) (x) P-^(2)
enum class Variant { A, B };

enum class OperatorLabel { A, B, Custom };

std::string_view to_string(Variant v);
/// Parses "A"/"B" (case-insensitive); DomainError otherwise.
Variant parse_variant(std::string_view s);

/// S|i>|j> = |j>|i> on C^d (x) C^d.
ComplexMatrix swap_operator(int d);
/// (1 - S)/2.
ComplexMatrix antisym_projector(int d);
/// (1 + S)/2.
ComplexMatrix sym_projector(int d);

struct CopyPairOperator {
  ComplexMatrix matrix;
  BipartiteDims dims;
  OperatorLabel label = OperatorLabel::Custom;
};

/// Embeds first (x) second, where `first` acts on H1 (x) H1' and `second`
/// on H2 (x) H2', into the H1 H2 H1' H2' ordering.
CopyPairOperator embed_copy_pair(BipartiteDims dims, const ComplexMatrix& first,
                                 const ComplexMatrix& second);

CopyPairOperator build_V(BipartiteDims dims, Variant variant);

/// Tr((rho (x) sigma) V), real part; ShapeError on dimension mismatch,
/// ConsistencyError if the imaginary residue exceeds 1e-10.
double two_copy_expectation(const DensityMatrix& rho, const DensityMatrix& sigma,
                            const CopyPairOperator& v);
double two_copy_expectation(const ComplexMatrix& rho, const ComplexMatrix& sigma,
                            const CopyPairOperator& v);

}  // namespace qconc
