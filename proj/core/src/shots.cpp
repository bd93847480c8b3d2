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

#include "qconc/shots.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "qconc/errors.hpp"

namespace qconc {
namespace {

constexpr double kProbabilityTol = 1e-9;
// Eigenvalues closer than this are recorded as the same outcome.
constexpr double kOutcomeMergeTol = 1e-9;

}  // namespace

ShotEstimate simulate_expectation(const ComplexMatrix& state, const ComplexMatrix& observable,
                                  long shots, std::uint64_t seed, std::string descriptor) {
  if (shots < 1) throw DomainError("shots must be at least 1");
  if (state.rows() != observable.rows() || state.cols() != observable.cols()) {
    throw ShapeError("state and observable dimensions disagree");
  }
  const HermitianEigen eig = eig_hermitian(observable, kHermitianTol);
  const Eigen::Index n = eig.values.size();

  // Group eigenvectors by (rounded) eigenvalue; probabilities add up.
  std::vector<double> values;
  std::vector<double> probs;
  double total = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    const ComplexVector v = eig.vectors.col(k);
    const double p = std::max(0.0, v.dot(state * v).real());
    total += p;
    if (!values.empty() && std::abs(eig.values(k) - values.back()) <= kOutcomeMergeTol) {
      probs.back() += p;
    } else {
      values.push_back(eig.values(k));
      probs.push_back(p);
    }
  }
  if (std::abs(total - 1.0) > kProbabilityTol) {
    throw ValidationError("outcome probabilities sum to " + std::to_string(total) +
                          ", expected 1");
  }
  for (auto& p : probs) p /= total;

  // Multinomial counts, drawn one shot at a time.
  Rng rng = make_rng(seed);
  std::discrete_distribution<std::size_t> outcome(probs.begin(), probs.end());
  std::vector<long> counts(values.size(), 0);
  for (long s = 0; s < shots; ++s) ++counts[outcome(rng)];

  ShotEstimate est;
  est.shots = shots;
  est.observable_descriptor = std::move(descriptor);
  double sum = 0.0;
  for (std::size_t k = 0; k < values.size(); ++k) {
    sum += values[k] * static_cast<double>(counts[k]);
    if (counts[k] > 0) est.outcomes.emplace_back(values[k], counts[k]);
  }
  est.mean = sum / static_cast<double>(shots);
  if (shots > 1) {
    double ss = 0.0;
    for (std::size_t k = 0; k < values.size(); ++k) {
      const double dev = values[k] - est.mean;
      ss += dev * dev * static_cast<double>(counts[k]);
    }
    const double sd = std::sqrt(ss / static_cast<double>(shots - 1));
    est.std_error = sd / std::sqrt(static_cast<double>(shots));
  }
  return est;
}

ShotEstimate simulate_expectation(const DensityMatrix& state, const ComplexMatrix& observable,
                                  long shots, std::uint64_t seed, std::string descriptor) {
  return simulate_expectation(state.matrix(), observable, shots, seed, std::move(descriptor));
}

ShotEstimate estimate_two_copy_bound(const DensityMatrix& rho, Variant variant, long shots,
                                     std::uint64_t seed) {
  const CopyPairOperator v = build_V(rho.dims(), variant);
  return simulate_expectation(tensor(rho.matrix(), rho.matrix()), 4.0 * v.matrix, shots, seed,
                              "4V/" + std::string(to_string(variant)));
}

}  // namespace qconc
