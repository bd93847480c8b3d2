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

// Concurrence witnesses W_sigma built algebraically from a seed state sigma
// and an upper bound c_seed >= c(sigma):
//
//   W_sigma = -4 Tr_2((1 (x) sigma) V) / c_seed
//           = 2 (1 (x) sigma_2 - sigma) / c_seed      (variant A)
//           = 2 (sigma_1 (x) 1 - sigma) / c_seed      (variant B)
//
// where sigma_k is the reduction of sigma onto subsystem k. For every state
// rho, c(rho) >= -Tr(rho W_sigma); the expectation is nonnegative on
// separable states.

#include <cstdint>

#include "qconc/exchange.hpp"
#include "qconc/states.hpp"

namespace qconc {

inline constexpr double kWitnessSelfCheckTol = 1e-8;
inline constexpr double kMinSeedConcurrence = 1e-12;

struct Witness {
  ComplexMatrix op;
  BipartiteDims dims;
  Variant variant = Variant::A;
  double c_seed = 1.0;
  bool seed_is_pure = false;
  ComplexMatrix seed;  // sigma, normalized
};

/// Tr_2((1 (x) sigma) V), the partial trace taken over the second copy.
ComplexMatrix seed_partial_trace(const ComplexMatrix& sigma, const CopyPairOperator& v);

/// 2 (1 (x) sigma_2 - sigma) / c_seed or its variant-B mirror.
ComplexMatrix witness_operator(const ComplexMatrix& sigma, BipartiteDims dims, double c_seed,
                               Variant variant);

/// Builds W_sigma from its closed form and cross-checks it against the
/// defining partial-trace expression.
///
/// c_seed must be positive and an upper bound on c(sigma). Where c(sigma) is
/// computable exactly (rank-one sigma, or two qubits) a c_seed below it is
/// rejected with DomainError; rank-one seeds with vanishing concurrence are
/// rejected as well. A mismatch between the two constructions beyond
/// kWitnessSelfCheckTol raises ConsistencyError.
Witness build_witness(const DensityMatrix& sigma, double c_seed, Variant variant);

/// W_phi with c_seed = c(phi). DomainError if c(phi) <= kMinSeedConcurrence.
Witness witness_from_pure(const PureState& phi, Variant variant);

/// -Tr(rho W); may be negative (vacuous).
double witness_bound(const DensityMatrix& rho, const Witness& w);

struct SeparableCheckOptions {
  int samples = 1000;
  std::uint64_t seed = 0;
  /// Mixture sizes are drawn uniformly from [1, max_terms]; 0 means d1*d2.
  int max_terms = 0;
  double violation_tol = 1e-9;
};

struct SeparableCheck {
  double min_expectation = 0.0;
  int violations = 0;
  int samples = 0;
};

/// Tr(rho W) over random separable rho; counts values below -violation_tol.
SeparableCheck verify_witness_on_separable(const Witness& w,
                                           const SeparableCheckOptions& options);

}  // namespace qconc
