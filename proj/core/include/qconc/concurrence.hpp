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

// Concurrence of bipartite states: the closed pure-state formula, the exact
// two-qubit (Wootters) solution and a numerical convex-roof minimizer.

#include <cstdint>
#include <string_view>

#include "qconc/states.hpp"

namespace qconc {

enum class ConcurrenceMethod { PureFormula, Wootters, ConvexRoofEstimate };

std::string_view to_string(ConcurrenceMethod m);

struct ConcurrenceValue {
  double value = 0.0;
  ConcurrenceMethod method = ConcurrenceMethod::PureFormula;
  // Minimizer metadata; zero for the closed forms.
  int iterations = 0;
  int restarts = 0;
  int evaluations = 0;
  int ensemble_size = 0;
};

/// c(psi) = sqrt(2 (w^2 - Tr rho_1^2)) with w the squared norm of psi, so
/// c(sqrt(p) psi) = p c(psi).
ConcurrenceValue pure_concurrence(const PureState& psi);

/// sqrt(4 <psi (x) psi| P-^(1) (x) P-^(2) |psi (x) psi>), the defining
/// two-copy expression. Cross-check path for pure_concurrence.
double pure_concurrence_two_copy(const PureState& psi);

/// Same as pure_concurrence on a raw amplitude vector laid out as d1 x d2.
double pure_concurrence_value(const ComplexVector& amplitudes, int d1, int d2);

/// Exact concurrence of a two-qubit state. DomainError unless dims are (2,2).
ConcurrenceValue wootters_concurrence(const DensityMatrix& rho);

struct RoofOptions {
  int ensemble_size = 4;
  int restarts = 16;
  int max_iters = 2000;
  double tol = 1e-8;
  std::uint64_t seed = 0;
};

/// Minimum of sum_i c(psi_i) found over pure-state decompositions of size
/// ensemble_size. Always an upper bound on c(rho). Restart 0 starts from
/// the eigen-ensemble, the others from Haar-random isometries drawn from
/// independent streams of `seed`. DomainError if ensemble_size is below
/// the numerical rank.
ConcurrenceValue convex_roof_estimate(const DensityMatrix& rho, const RoofOptions& options);

/// sum_i c(psi_i) of an explicit decomposition.
double ensemble_concurrence(const Ensemble& ensemble);

}  // namespace qconc
