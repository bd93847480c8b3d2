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

// Derivative-free simplex minimizer used by the convex-roof estimate and
// the witness optimizer.

#include <functional>
#include <span>
#include <vector>

namespace qconc {

struct NelderMeadOptions {
  int max_iters = 2000;
  /// Converged when the spread of simplex values falls below tol.
  double tol = 1e-8;
  double initial_step = 0.25;
  /// After convergence the simplex is rebuilt around the best vertex and the
  /// search resumes, until a rebuild fails to improve by more than tol.
  bool restart_on_convergence = true;
  bool record_history = false;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
  int evaluations = 0;
  bool converged = false;
  /// Best value after each iteration (when record_history is set).
  std::vector<double> history;
};

using Objective = std::function<double(std::span<const double>)>;

/// Minimizes `f` starting from `x0`, using dimension-adapted coefficients.
/// The best value is nonincreasing across iterations.
NelderMeadResult nelder_mead(const Objective& f, std::vector<double> x0,
                             const NelderMeadOptions& options);

}  // namespace qconc
