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

#include "qconc/witness.hpp"

#include <gtest/gtest.h>

#include "qconc/concurrence.hpp"
#include "qconc/errors.hpp"

namespace qconc {
namespace {

constexpr BipartiteDims kQubits{2, 2};

DensityMatrix singlet() { return DensityMatrix::from_pure(bell_state(BellKind::PsiMinus)); }

TEST(SeedPartialTrace, ClosedFormIdentities) {
  Rng rng = make_rng(71);
  for (auto dims : {kQubits, BipartiteDims{2, 3}}) {
    const CopyPairOperator va = build_V(dims, Variant::A);
    const CopyPairOperator vb = build_V(dims, Variant::B);
    for (int i = 0; i < 100; ++i) {
      const DensityMatrix sigma = random_density(dims, 1 + i % dims.total(), rng);
      const ComplexMatrix& s = sigma.matrix();
      const ComplexMatrix a_form = (s - tensor(identity(dims.d1), reduced_state(sigma, 2))) / 2.0;
      const ComplexMatrix b_form = (s - tensor(reduced_state(sigma, 1), identity(dims.d2))) / 2.0;
      EXPECT_LE(max_abs(seed_partial_trace(s, va) - a_form), 1e-12);
      EXPECT_LE(max_abs(seed_partial_trace(s, vb) - b_form), 1e-12);
    }
  }
}

TEST(BuildWitness, SingletWitness) {
  const Witness w = build_witness(singlet(), 1.0, Variant::A);
  const ComplexMatrix expected = identity(4) - 2.0 * singlet().matrix();
  EXPECT_LE(max_abs(w.op - expected), 1e-15);
  EXPECT_TRUE(w.seed_is_pure);
  const Witness wb = build_witness(singlet(), 1.0, Variant::B);
  EXPECT_LE(max_abs(wb.op - w.op), 1e-15);
}

TEST(BuildWitness, RejectsInvalidSeeds) {
  EXPECT_THROW(build_witness(singlet(), 0.0, Variant::A), DomainError);
  EXPECT_THROW(build_witness(singlet(), -1.0, Variant::A), DomainError);
  // c_seed below the exact concurrence would overstate the bound.
  EXPECT_THROW(build_witness(singlet(), 0.5, Variant::A), DomainError);
  EXPECT_THROW(build_witness(werner_state(0.9), 0.8, Variant::A), DomainError);
  EXPECT_NO_THROW(build_witness(werner_state(0.9), 0.85, Variant::A));
  ComplexVector zero(2), one(2);
  zero << 1, 0;
  one << 0, 1;
  EXPECT_THROW(build_witness(DensityMatrix::from_pure(product_state(zero, one)), 1.0, Variant::A),
               DomainError);
}

TEST(BuildWitness, MixedSeedAcceptsUpperBound) {
  const DensityMatrix sigma = random_density({2, 3}, 2, 72);
  const Witness w = build_witness(sigma, 2.0, Variant::B);
  EXPECT_FALSE(w.seed_is_pure);
  EXPECT_LE(hermiticity_error(w.op), 1e-10);
  EXPECT_EQ(w.c_seed, 2.0);
}

TEST(WitnessFromPure, RecordsSeedConcurrence) {
  const Witness w = witness_from_pure(bell_state(BellKind::PsiMinus), Variant::A);
  EXPECT_LE(max_abs(w.op - (identity(4) - 2.0 * singlet().matrix())), 1e-14);

  ComplexVector v = ComplexVector::Zero(4);
  v(0) = std::sqrt(0.9);
  v(3) = std::sqrt(0.1);
  EXPECT_NEAR(witness_from_pure(PureState(kQubits, v), Variant::A).c_seed, 0.6, 1e-14);
}

TEST(WitnessFromPure, NearProductSeedFails) {
  // c = 2 |a b| = 1e-15 for amplitudes a|00> + b|11>.
  ComplexVector v = ComplexVector::Zero(4);
  v(3) = 5e-16;
  v(0) = std::sqrt(1.0 - 2.5e-31);
  EXPECT_THROW(witness_from_pure(PureState(kQubits, v), Variant::A), DomainError);
}

TEST(WitnessBound, WernerFamily) {
  const Witness w = witness_from_pure(bell_state(BellKind::PsiMinus), Variant::A);
  for (double p : {0.0, 0.2, 1.0 / 3.0, 0.5, 0.8, 1.0}) {
    EXPECT_NEAR(witness_bound(werner_state(p), w), (3.0 * p - 1.0) / 2.0, 1e-14);
  }
  EXPECT_NEAR(witness_bound(maximally_mixed(kQubits), w), -0.5, 1e-15);
  EXPECT_NEAR(witness_bound(singlet(), w), 1.0, 1e-14);
}

TEST(WitnessBound, EqualsCrossStateExpression) {
  Rng rng = make_rng(73);
  for (auto dims : {kQubits, BipartiteDims{2, 3}, BipartiteDims{3, 3}}) {
    for (Variant v : {Variant::A, Variant::B}) {
      const CopyPairOperator op = build_V(dims, v);
      for (int i = 0; i < 10; ++i) {
        const DensityMatrix rho = random_density(dims, 1 + i % dims.total(), rng);
        const DensityMatrix sigma = random_density(dims, 2, rng);
        const double c = 1.5;
        const Witness w = build_witness(sigma, c, v);
        EXPECT_NEAR(witness_bound(rho, w), 4.0 * two_copy_expectation(rho, sigma, op) / c, 1e-10);
      }
    }
  }
}

TEST(WitnessBound, SoundAgainstWootters) {
  Rng rng = make_rng(74);
  std::vector<Witness> witnesses;
  for (int k = 0; k < 20; ++k) {
    witnesses.push_back(witness_from_pure(random_pure(kQubits, rng), k % 2 ? Variant::B : Variant::A));
  }
  for (int i = 0; i < 500; ++i) {
    const DensityMatrix rho = random_density(kQubits, 1 + i % 4, rng);
    const double exact = wootters_concurrence(rho).value;
    for (const auto& w : witnesses) EXPECT_LE(witness_bound(rho, w), exact + 1e-9);
  }
}

TEST(WitnessBound, ScalesInverselyWithSeedConcurrence) {
  const DensityMatrix sigma = random_density(kQubits, 2, 75);
  const double c = wootters_concurrence(sigma).value + 0.1;
  const DensityMatrix rho = random_density(kQubits, 3, 76);
  const double base = witness_bound(rho, build_witness(sigma, c, Variant::A));
  for (double k : {1.0, 2.0, 7.5}) {
    EXPECT_NEAR(witness_bound(rho, build_witness(sigma, k * c, Variant::A)), base / k, 1e-12);
  }
}

TEST(WitnessBound, RejectsDimensionMismatch) {
  const Witness w = witness_from_pure(bell_state(BellKind::PsiMinus), Variant::A);
  EXPECT_THROW(witness_bound(maximally_mixed({2, 3}), w), ShapeError);
}

TEST(SeparableCheck, SingletWitnessHasNoViolations) {
  const Witness w = witness_from_pure(bell_state(BellKind::PsiMinus), Variant::A);
  const SeparableCheck check = verify_witness_on_separable(w, {1000, 3, 0, 1e-9});
  EXPECT_EQ(check.violations, 0);
  EXPECT_EQ(check.samples, 1000);
  EXPECT_GE(check.min_expectation, -1e-9);
}

TEST(SeparableCheck, ProductStatesOnly) {
  Rng rng = make_rng(77);
  const Witness w = witness_from_pure(random_pure({2, 3}, rng), Variant::B);
  const SeparableCheck check = verify_witness_on_separable(w, {300, 4, 1, 1e-9});
  EXPECT_GE(check.min_expectation, -1e-9);
}

TEST(SeparableCheck, ScaleInvariantViolationCount) {
  const Witness w = witness_from_pure(random_pure(kQubits, 78), Variant::A);
  Witness scaled = w;
  scaled.op *= 3.0;
  const SeparableCheckOptions opt{200, 5, 0, 1e-9};
  const SeparableCheck a = verify_witness_on_separable(w, opt);
  const SeparableCheck b = verify_witness_on_separable(scaled, opt);
  EXPECT_EQ(a.violations, b.violations);
  EXPECT_NEAR(b.min_expectation, 3.0 * a.min_expectation, 1e-12);

  // A non-witness (negated) is caught.
  Witness flipped = w;
  flipped.op *= -1.0;
  EXPECT_GT(verify_witness_on_separable(flipped, opt).violations, 0);
}

}  // namespace
}  // namespace qconc
