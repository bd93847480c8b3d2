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

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>

#include "qconc/errors.hpp"

namespace qconc {

VariantChoice parse_variant_choice(std::string_view s) {
  std::string lower(s);
  for (auto& ch : lower) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (lower == "a") return VariantChoice::A;
  if (lower == "b") return VariantChoice::B;
  if (lower == "best") return VariantChoice::Best;
  throw DomainError("unknown variant '" + std::string(s) + "' (expected A, B or best)");
}

double two_copy_bound(const DensityMatrix& rho, VariantChoice variant) {
  auto one = [&](Variant v) {
    return 4.0 * two_copy_expectation(rho, rho, build_V(rho.dims(), v));
  };
  switch (variant) {
    case VariantChoice::A:
      return one(Variant::A);
    case VariantChoice::B:
      return one(Variant::B);
    case VariantChoice::Best:
      return std::max(one(Variant::A), one(Variant::B));
  }
  return 0.0;
}

double pure_pair_residual(const PureState& psi, const PureState& phi, Variant variant) {
  if (!(psi.dims() == phi.dims())) throw ShapeError("pure pair dimensions disagree");
  const CopyPairOperator v = build_V(psi.dims(), variant);
  const ComplexVector pair = tensor(psi.amplitudes(), phi.amplitudes());
  const double rhs = 4.0 * pair.dot(v.matrix * pair).real();
  return pure_concurrence(psi).value * pure_concurrence(phi).value - rhs;
}

EnsembleCheck ensemble_inequality_check(const DensityMatrix& rho, const DensityMatrix& sigma,
                                        const EnsembleCheckOptions& options) {
  const int size_rho = options.size_rho > 0 ? options.size_rho : numerical_rank(rho);
  const int size_sigma = options.size_sigma > 0 ? options.size_sigma : numerical_rank(sigma);
  EnsembleCheck out;
  out.right_side = 4.0 * two_copy_expectation(rho, sigma, build_V(rho.dims(), options.variant));
  out.tightest_gap = std::numeric_limits<double>::infinity();
  for (int t = 0; t < options.trials; ++t) {
    Rng rng = make_rng(options.seed, static_cast<std::uint64_t>(t));
    const Ensemble er = random_decomposition(rho, size_rho, rng);
    const Ensemble es = random_decomposition(sigma, size_sigma, rng);
    const double gap = ensemble_concurrence(er) * ensemble_concurrence(es) - out.right_side;
    out.tightest_gap = std::min(out.tightest_gap, gap);
    if (gap < -options.slack) ++out.violations;
    ++out.trials;
  }
  return out;
}

CrossBound cross_bound(const DensityMatrix& rho, const DensityMatrix& sigma,
                       double c_sigma_upper, Variant variant) {
  if (!(c_sigma_upper > 0.0)) throw DomainError("c_sigma_upper must be positive");
  const double numerator =
      4.0 * two_copy_expectation(rho, sigma, build_V(rho.dims(), variant));
  return {numerator / c_sigma_upper, numerator < 0.0};
}

namespace {

std::string describe(const DensityMatrix& rho, int rank) {
  return "dims=" + std::to_string(rho.dims().d1) + "x" + std::to_string(rho.dims().d2) +
         " rank=" + std::to_string(rank);
}

}  // namespace

BoundReport bound_report(const DensityMatrix& rho, const std::vector<PureState>& seeds,
                         const ReportOptions& options) {
  BoundReport r;
  r.dims = rho.dims();
  const EigenEnsemble eig = eigen_ensemble(rho);
  r.rank = eig.rank();
  r.purity = rho.purity();
  r.state_descriptor =
      options.state_descriptor.empty() ? describe(rho, r.rank) : options.state_descriptor;

  double best = 0.0;
  std::string best_source = "none";
  auto consider = [&](double clamped, const std::string& source) {
    if (clamped > best) {
      best = clamped;
      best_source = source;
    }
  };

  for (Variant v : {Variant::A, Variant::B}) {
    TwoCopyEntry e;
    e.variant = v;
    e.c_squared_bound = two_copy_bound(rho, v == Variant::A ? VariantChoice::A : VariantChoice::B);
    e.c_bound = std::sqrt(std::max(0.0, e.c_squared_bound));
    consider(e.c_bound, "two-copy/" + std::string(to_string(v)));
    r.two_copy.push_back(e);
  }

  for (std::size_t k = 0; k < seeds.size(); ++k) {
    const PureState phi = seeds[k].normalized();
    if (!(phi.dims() == rho.dims())) throw ShapeError("seed dimensions differ from the state");
    const double c_phi = pure_concurrence(phi).value;
    if (c_phi <= kMinSeedConcurrence) continue;
    const std::string name = "seed[" + std::to_string(k) + "]";
    const DensityMatrix sigma = DensityMatrix::from_pure(phi);
    for (Variant v : options.witness_variants) {
      const Witness w = build_witness(sigma, c_phi, v);
      SeedBoundEntry we{name, v, c_phi, witness_bound(rho, w), 0.0, false};
      we.clamped = std::max(0.0, we.value);
      we.vacuous = we.value <= 0.0;
      consider(we.clamped, "witness/" + name + "/" + std::string(to_string(v)));
      r.witness_bounds.push_back(we);

      const CrossBound cb = cross_bound(rho, sigma, c_phi, v);
      SeedBoundEntry ce{name, v, c_phi, cb.value, std::max(0.0, cb.value), cb.value <= 0.0};
      consider(ce.clamped, "cross/" + name + "/" + std::string(to_string(v)));
      r.cross_bounds.push_back(ce);
    }
  }

  if (r.rank == 1) {
    const ComplexVector v = eig.vectors.col(0) * std::sqrt(eig.weights[0]);
    ConcurrenceValue exact;
    exact.value = pure_concurrence_value(v, r.dims.d1, r.dims.d2);
    exact.method = ConcurrenceMethod::PureFormula;
    r.exact = exact;
  } else if (r.dims.d1 == 2 && r.dims.d2 == 2) {
    r.exact = wootters_concurrence(rho);
  }
  if (options.with_roof) {
    RoofOptions roof = options.roof;
    roof.ensemble_size = std::max(roof.ensemble_size, r.rank);
    r.roof_estimate = convex_roof_estimate(rho, roof);
  }

  r.best_lower_bound = best;
  r.best_source = best_source;
  r.vacuous = best <= 0.0;
  r.tight = r.exact.has_value() && std::abs(r.exact->value - best) <= options.tight_tol;
  return r;
}

}  // namespace qconc
