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

// Maximization of the witness bound -Tr(rho W_phi) over pure seeds phi.

#include <cstdint>
#include <vector>

#include "qconc/states.hpp"
#include "qconc/witness.hpp"

namespace qconc {

struct OptimizeOptions {
  Variant variant = Variant::A;
  int restarts = 32;
  int max_iters = 2000;
  double tol = 1e-8;
  std::uint64_t seed = 0;
  /// Seeds with c(phi) below this are penalized instead of evaluated.
  double min_seed_concurrence = 1e-6;
};

struct RestartTrace {
  int restart = 0;
  double start_value = 0.0;
  double final_value = 0.0;
  int iterations = 0;
  int evaluations = 0;
};

struct OptimizeResult {
  Witness witness;
  PureState seed_state;
  double bound = 0.0;
  /// Best bound among the canonical maximally entangled seeds.
  double canonical_bound = 0.0;
  std::vector<RestartTrace> trace;
};

/// Maximally entangled seeds every search starts from: the singlet-like
/// state, sum_i |ii>/sqrt(d), and the four Bell vectors on the first two
/// levels of each side.
std::vector<PureState> canonical_seeds(BipartiteDims dims);

/// -Tr(rho W_phi) evaluated in closed form for a normalized phi.
double seed_objective(const DensityMatrix& rho, const ComplexVector& phi, Variant variant);

/// Restart 0 starts from the best canonical seed, the others from Haar
/// random states drawn from independent streams of options.seed. The
/// returned bound is witness_bound(rho, result.witness).
OptimizeResult optimize_witness(const DensityMatrix& rho, const OptimizeOptions& options = {});

}  // namespace qconc
