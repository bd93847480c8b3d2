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

// Finite-shot emulation of expectation-value measurements: projective
// measurement in the eigenbasis of the observable, one outcome per shot.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qconc/exchange.hpp"
#include "qconc/states.hpp"

namespace qconc {

struct ShotEstimate {
  double mean = 0.0;
  /// Sample standard deviation (n - 1 normalization) over sqrt(shots).
  double std_error = 0.0;
  long shots = 0;
  std::string observable_descriptor;
  /// (eigenvalue, count) for every outcome that occurred, ascending.
  std::vector<std::pair<double, long>> outcomes;
};

/// Samples `shots` outcomes of `observable` on `state` (any positive
/// unit-trace matrix of matching size). ValidationError if the observable is
/// not Hermitian within 1e-9 or the outcome probabilities do not sum to one
/// within 1e-9; DomainError if shots < 1.
ShotEstimate simulate_expectation(const ComplexMatrix& state, const ComplexMatrix& observable,
                                  long shots, std::uint64_t seed,
                                  std::string descriptor = "observable");
ShotEstimate simulate_expectation(const DensityMatrix& state, const ComplexMatrix& observable,
                                  long shots, std::uint64_t seed,
                                  std::string descriptor = "observable");

/// Joint measurement of 4V on rho (x) rho; the mean estimates
/// two_copy_bound(rho, variant).
ShotEstimate estimate_two_copy_bound(const DensityMatrix& rho, Variant variant, long shots,
                                     std::uint64_t seed);

}  // namespace qconc
