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

#include "qconc/bounds.hpp"

#include <gtest/gtest.h>

#include "qconc/errors.hpp"

namespace qconc {
namespace {

constexpr BipartiteDims kQubits{2, 2};

DensityMatrix pure(const PureState& psi) { return DensityMatrix::from_pure(psi); }

TEST(TwoCopyBound, KnownValues) {
  const DensityMatrix bell = pure(bell_state(BellKind::PhiPlus));
  for (auto v : {VariantChoice::A, VariantChoice::B, VariantChoice::Best}) {
    EXPECT_NEAR(two_copy_bound(bell, v), 1.0, 1e-14);
    EXPECT_NEAR(two_copy_bound(maximally_mixed(kQubits), v), -0.5, 1e-15);
  }
  ComplexVector a(2), b(2);
  a << 0.6, Complex(0, 0.8);
  b << 1, 0;
  EXPECT_LE(two_copy_bound(pure(product_state(a, b)), VariantChoice::Best), 1e-10);
}

TEST(TwoCopyBound, ConsistentWithExpectation) {
  const DensityMatrix rho = random_density({2, 3}, 3, 81);
  EXPECT_EQ(two_copy_bound(rho, VariantChoice::A),
            4.0 * two_copy_expectation(rho, rho, build_V(rho.dims(), Variant::A)));
  EXPECT_EQ(two_copy_bound(rho, VariantChoice::Best),
            std::max(two_copy_bound(rho, VariantChoice::A), two_copy_bound(rho, VariantChoice::B)));
}

TEST(TwoCopyBound, TightOnPureStates) {
  Rng rng = make_rng(82);
  for (auto dims : {kQubits, BipartiteDims{2, 3}, BipartiteDims{3, 3}}) {
    for (int i = 0; i < 50; ++i) {
      const PureState psi = random_pure(dims, rng);
      const double c = pure_concurrence(psi).value;
      EXPECT_NEAR(two_copy_bound(pure(psi), VariantChoice::A), c * c, 1e-10);
      EXPECT_NEAR(two_copy_bound(pure(psi), VariantChoice::B), c * c, 1e-10);
    }
  }
}

TEST(TwoCopyBound, SoundAgainstWootters) {
  Rng rng = make_rng(83);
  for (int i = 0; i < 200; ++i) {
    const DensityMatrix rho = random_density(kQubits, 1 + i % 4, rng);
    const double b = two_copy_bound(rho, VariantChoice::Best);
    EXPECT_LE(std::sqrt(std::max(0.0, b)), wootters_concurrence(rho).value + 1e-9);
  }
}

TEST(PurePairResidual, EqualityAndSign) {
  const PureState bell = bell_state(BellKind::PsiMinus);
  EXPECT_NEAR(pure_pair_residual(bell, bell, Variant::A), 0.0, 1e-14);
  ComplexVector a(2), b(2);
  a << 1, 0;
  b << 0.6, 0.8;
  const PureState product = product_state(a, b);
  Rng rng = make_rng(84);
  for (int i = 0; i < 50; ++i) {
    const PureState phi = random_pure(kQubits, rng);
    for (Variant v : {Variant::A, Variant::B}) EXPECT_GE(pure_pair_residual(product, phi, v), -1e-12);
  }
}

TEST(PurePairResidual, NonNegativeOnRandomPairs) {
  Rng rng = make_rng(85);
  for (auto dims : {kQubits, BipartiteDims{3, 3}}) {
    double worst = 1.0;
    for (int i = 0; i < 500; ++i) {
      const PureState psi = random_pure(dims, rng);
      const PureState phi = random_pure(dims, rng);
      for (Variant v : {Variant::A, Variant::B}) {
        worst = std::min(worst, pure_pair_residual(psi, phi, v));
      }
    }
    EXPECT_GE(worst, -1e-10);
  }
}

TEST(EnsembleInequality, BellPairIsTight) {
  const DensityMatrix bell = pure(bell_state(BellKind::PsiMinus));
  EnsembleCheckOptions opt;
  opt.trials = 5;
  const EnsembleCheck check = ensemble_inequality_check(bell, bell, opt);
  EXPECT_EQ(check.violations, 0);
  EXPECT_NEAR(check.tightest_gap, 0.0, 1e-12);
}

TEST(EnsembleInequality, MaximallyMixedHasNegativeRightSide) {
  const DensityMatrix mixed = maximally_mixed(kQubits);
  EnsembleCheckOptions opt;
  opt.trials = 3;
  opt.size_rho = 5;
  const EnsembleCheck check = ensemble_inequality_check(mixed, mixed, opt);
  EXPECT_NEAR(check.right_side, -0.5, 1e-15);
  EXPECT_EQ(check.violations, 0);
  EXPECT_GE(check.tightest_gap, 0.5);
}

TEST(EnsembleInequality, RandomPairs) {
  Rng rng = make_rng(86);
  for (int i = 0; i < 50; ++i) {
    const DensityMatrix rho = random_density({2, 3}, 1 + i % 6, rng);
    const DensityMatrix sigma = random_density({2, 3}, 1 + (i * 5) % 6, rng);
    EnsembleCheckOptions opt;
    opt.trials = 2;
    opt.variant = i % 2 ? Variant::B : Variant::A;
    opt.seed = static_cast<std::uint64_t>(i);
    EXPECT_EQ(ensemble_inequality_check(rho, sigma, opt).violations, 0);
  }
}

TEST(CrossBound, KnownValues) {
  const DensityMatrix bell = pure(bell_state(BellKind::PsiMinus));
  EXPECT_NEAR(cross_bound(bell, bell, 1.0, Variant::A).value, 1.0, 1e-14);
  const CrossBound w = cross_bound(werner_state(0.8), bell, 1.0, Variant::A);
  EXPECT_NEAR(w.value, 0.7, 1e-14);
  EXPECT_FALSE(w.vacuous);
  const CrossBound mixed = cross_bound(maximally_mixed(kQubits), bell, 1.0, Variant::B);
  EXPECT_TRUE(mixed.vacuous);
  EXPECT_LT(mixed.value, 0.0);
  EXPECT_THROW(cross_bound(bell, bell, 0.0, Variant::A), DomainError);
}

TEST(CrossBound, EqualsWitnessRoute) {
  Rng rng = make_rng(87);
  for (int i = 0; i < 30; ++i) {
    const DensityMatrix rho = random_density({3, 2}, 1 + i % 6, rng);
    const DensityMatrix sigma = random_density({3, 2}, 1 + i % 3, rng);
    const double c = 2.0;
    for (Variant v : {Variant::A, Variant::B}) {
      EXPECT_NEAR(cross_bound(rho, sigma, c, v).value,
                  witness_bound(rho, build_witness(sigma, c, v)), 1e-10);
    }
  }
}

TEST(BoundReport, WernerWithSingletSeedIsTight) {
  const BoundReport r = bound_report(werner_state(0.9), {bell_state(BellKind::PsiMinus)});
  EXPECT_NEAR(r.best_lower_bound, 0.85, 1e-12);
  EXPECT_TRUE(r.tight);
  EXPECT_FALSE(r.vacuous);
  ASSERT_TRUE(r.exact.has_value());
  EXPECT_EQ(r.exact->method, ConcurrenceMethod::Wootters);
  EXPECT_EQ(r.witness_bounds.size(), 2u);
  EXPECT_EQ(r.cross_bounds.size(), 2u);
  EXPECT_EQ(r.two_copy.size(), 2u);
}

TEST(BoundReport, SeparableIsVacuous) {
  const BoundReport r =
      bound_report(random_separable(kQubits, 4, 88), {bell_state(BellKind::PhiPlus)});
  EXPECT_EQ(r.best_lower_bound, 0.0);
  EXPECT_TRUE(r.vacuous);
}

TEST(BoundReport, BellFromTwoCopyRouteAlone) {
  const BoundReport r = bound_report(pure(bell_state(BellKind::PhiMinus)), {});
  EXPECT_NEAR(r.best_lower_bound, 1.0, 1e-12);
  EXPECT_EQ(r.best_source.rfind("two-copy", 0), 0u);
  EXPECT_TRUE(r.tight);
  EXPECT_EQ(r.exact->method, ConcurrenceMethod::PureFormula);
}

TEST(BoundReport, BestIsMaxOfClampedAndBelowOracle) {
  Rng rng = make_rng(89);
  std::vector<PureState> seeds;
  for (int k = 0; k < 3; ++k) seeds.push_back(random_pure(kQubits, rng));
  for (int i = 0; i < 30; ++i) {
    const BoundReport r = bound_report(random_density(kQubits, 1 + i % 4, rng), seeds);
    double best = 0.0;
    for (const auto& e : r.two_copy) best = std::max(best, e.c_bound);
    for (const auto& e : r.witness_bounds) best = std::max(best, e.clamped);
    for (const auto& e : r.cross_bounds) best = std::max(best, e.clamped);
    EXPECT_EQ(r.best_lower_bound, best);
    EXPECT_LE(r.best_lower_bound, r.exact->value + 1e-9);
  }
}

TEST(BoundReport, OptionalRoofOracle) {
  ReportOptions opt;
  opt.with_roof = true;
  opt.roof.restarts = 4;
  const BoundReport r = bound_report(random_density({2, 3}, 2, 90), {}, opt);
  ASSERT_TRUE(r.roof_estimate.has_value());
  EXPECT_FALSE(r.exact.has_value());
  EXPECT_GE(r.roof_estimate->value + 1e-9, r.best_lower_bound);
}

TEST(VariantChoice, Parsing) {
  EXPECT_EQ(parse_variant_choice("best"), VariantChoice::Best);
  EXPECT_EQ(parse_variant_choice("a"), VariantChoice::A);
  EXPECT_THROW(parse_variant_choice("x"), DomainError);
}

}  // namespace
}  // namespace qconc
