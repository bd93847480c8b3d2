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

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qconc/bounds.hpp"
#include "qconc/errors.hpp"
#include "qconc/witness.hpp"

namespace qconc {
namespace {

constexpr BipartiteDims kQubits{2, 2};

TEST(SimulateExpectation, EigenstateIsDeterministic) {
  const DensityMatrix phi = DensityMatrix::from_pure(bell_state(BellKind::PhiPlus));
  const ComplexMatrix zz = tensor(testing::pauli_z(), testing::pauli_z());
  const ShotEstimate e = simulate_expectation(phi, zz, 1000, 1);
  EXPECT_NEAR(e.mean, 1.0, 1e-12);
  EXPECT_NEAR(e.std_error, 0.0, 1e-12);
  ASSERT_EQ(e.outcomes.size(), 1u);
  EXPECT_EQ(e.outcomes[0].second, 1000);
}

TEST(SimulateExpectation, UnbiasedCoinFlip) {
  ComplexVector zero(2);
  zero << 1, 0;
  const DensityMatrix state = DensityMatrix::from_pure(product_state(zero, zero));
  const ComplexMatrix x1 = tensor(testing::pauli_x(), identity(2));
  const ShotEstimate e = simulate_expectation(state, x1, 10000, 2);
  EXPECT_LE(std::abs(e.mean), 5.0 / std::sqrt(10000.0));
  EXPECT_NEAR(e.std_error, 0.01, 1e-3);
}

TEST(SimulateExpectation, WernerWitness) {
  const Witness w = witness_from_pure(bell_state(BellKind::PsiMinus), Variant::A);
  const ShotEstimate e = simulate_expectation(werner_state(0.9), w.op, 100000, 3);
  EXPECT_LE(std::abs(e.mean - (-0.85)), 5.0 * e.std_error);
}

TEST(SimulateExpectation, OutcomesAreEigenvalues) {
  const DensityMatrix rho = random_density(kQubits, 3, 101);
  const Witness w = witness_from_pure(random_pure(kQubits, 102), Variant::B);
  const RealVector spectrum = eig_hermitian(w.op).values;
  const ShotEstimate e = simulate_expectation(rho, w.op, 5000, 4);
  long total = 0;
  for (const auto& [value, count] : e.outcomes) {
    EXPECT_LE((spectrum.array() - value).abs().minCoeff(), 1e-9);
    total += count;
  }
  EXPECT_EQ(total, 5000);
}

TEST(SimulateExpectation, DeterministicPerSeed) {
  const DensityMatrix rho = random_density(kQubits, 4, 103);
  const ComplexMatrix obs = tensor(testing::pauli_x(), testing::pauli_z());
  EXPECT_EQ(simulate_expectation(rho, obs, 777, 9).mean, simulate_expectation(rho, obs, 777, 9).mean);
}

TEST(SimulateExpectation, UnbiasedOverSeeds) {
  const DensityMatrix rho = random_density(kQubits, 2, 104);
  const Witness w = witness_from_pure(random_pure(kQubits, 105), Variant::A);
  const double exact = -witness_bound(rho, w);
  double sum = 0.0, var = 0.0;
  const int runs = 200;
  for (int s = 0; s < runs; ++s) {
    const ShotEstimate e = simulate_expectation(rho, w.op, 1000, static_cast<std::uint64_t>(s));
    sum += e.mean;
    var += e.std_error * e.std_error;
  }
  const double pooled = std::sqrt(var) / runs;
  EXPECT_LE(std::abs(sum / runs - exact), 5.0 * pooled);
}

TEST(SimulateExpectation, RejectsInvalidInputs) {
  const DensityMatrix rho = maximally_mixed(kQubits);
  ComplexMatrix bad = identity(4);
  bad(0, 1) = 0.5;
  EXPECT_THROW(simulate_expectation(rho, bad, 10, 1), ValidationError);
  EXPECT_THROW(simulate_expectation(rho, identity(4), 0, 1), DomainError);
  EXPECT_THROW(simulate_expectation(rho, identity(6), 10, 1), ShapeError);
  // Trace-two "state": outcome probabilities do not sum to one.
  EXPECT_THROW(simulate_expectation(ComplexMatrix(identity(4) / 2.0), identity(4), 10, 1),
               ValidationError);
}

TEST(EstimateTwoCopy, BellAndMaximallyMixed) {
  const DensityMatrix bell = DensityMatrix::from_pure(bell_state(BellKind::PsiMinus));
  const ShotEstimate b = estimate_two_copy_bound(bell, Variant::A, 100000, 5);
  EXPECT_LE(std::abs(b.mean - 1.0), 5.0 * b.std_error + 1e-12);
  const ShotEstimate m = estimate_two_copy_bound(maximally_mixed(kQubits), Variant::B, 100000, 6);
  EXPECT_LE(std::abs(m.mean + 0.5), 5.0 * m.std_error);
}

TEST(EstimateTwoCopy, ConvergesToExactBound) {
  const DensityMatrix rho = random_density({2, 3}, 2, 106);
  const ShotEstimate e = estimate_two_copy_bound(rho, Variant::A, 50000, 7);
  EXPECT_LE(std::abs(e.mean - two_copy_bound(rho, VariantChoice::A)), 5.0 * e.std_error);
}

TEST(EstimateTwoCopy, StandardErrorScalesAsInverseSqrtShots) {
  const DensityMatrix mixed = maximally_mixed(kQubits);
  double ratio = 0.0;
  for (int s = 0; s < 20; ++s) {
    const auto seed = static_cast<std::uint64_t>(s);
    ratio += estimate_two_copy_bound(mixed, Variant::A, 40000, seed).std_error /
             estimate_two_copy_bound(mixed, Variant::A, 10000, seed + 1000).std_error;
  }
  ratio /= 20.0;
  EXPECT_GE(ratio, 0.4);
  EXPECT_LE(ratio, 0.6);
}

}  // namespace
}  // namespace qconc
