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

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qconc/concurrence.hpp"
#include "qconc/errors.hpp"

namespace qconc {

ComplexMatrix seed_partial_trace(const ComplexMatrix& sigma, const CopyPairOperator& v) {
  const int n = v.dims.total();
  if (sigma.rows() != n || sigma.cols() != n) {
    throw ShapeError("seed dimensions do not match the two-copy operator");
  }
  static constexpr int kSecondCopy[] = {2, 3};
  return partial_trace(tensor(identity(n), sigma) * v.matrix, v.dims.two_copy_shape(),
                       kSecondCopy);
}

ComplexMatrix witness_operator(const ComplexMatrix& sigma, BipartiteDims dims, double c_seed,
                               Variant variant) {
  if (!(c_seed > 0.0)) throw DomainError("c_seed must be positive");
  ComplexMatrix local;
  if (variant == Variant::A) {
    local = tensor(identity(dims.d1), reduced_state(sigma, dims, 2));
  } else {
    local = tensor(reduced_state(sigma, dims, 1), identity(dims.d2));
  }
  return 2.0 * (local - sigma) / c_seed;
}

Witness build_witness(const DensityMatrix& sigma, double c_seed, Variant variant) {
  if (!(c_seed > 0.0) || !std::isfinite(c_seed)) {
    throw DomainError("c_seed must be a positive finite number, got " + std::to_string(c_seed));
  }
  const BipartiteDims dims = sigma.dims();
  const EigenEnsemble eig = eigen_ensemble(sigma);
  const bool pure = eig.rank() == 1;

  double exact = -1.0;
  if (pure) {
    exact = pure_concurrence_value(eig.vectors.col(0), dims.d1, dims.d2);
    if (exact <= kMinSeedConcurrence) {
      throw DomainError("seed state has vanishing concurrence; W_sigma is undefined");
    }
  } else if (dims.d1 == 2 && dims.d2 == 2) {
    exact = wootters_concurrence(sigma).value;
  }
  if (exact >= 0.0 && c_seed < exact * (1.0 - 1e-10)) {
    throw DomainError("c_seed " + std::to_string(c_seed) +
                      " is below the concurrence of the seed state " + std::to_string(exact));
  }

  Witness w;
  w.dims = dims;
  w.variant = variant;
  w.c_seed = c_seed;
  w.seed_is_pure = pure;
  w.seed = sigma.matrix();
  w.op = witness_operator(sigma.matrix(), dims, c_seed, variant);

  const ComplexMatrix defining =
      -4.0 * seed_partial_trace(sigma.matrix(), build_V(dims, variant)) / c_seed;
  const double mismatch = max_abs(defining - w.op);
  if (mismatch > kWitnessSelfCheckTol) {
    throw ConsistencyError("witness closed form disagrees with its defining expression by " +
                           std::to_string(mismatch));
  }
  return w;
}

Witness witness_from_pure(const PureState& phi, Variant variant) {
  const double c = pure_concurrence(phi.normalized()).value;
  if (c <= kMinSeedConcurrence) {
    throw DomainError("seed state has vanishing concurrence (" + std::to_string(c) +
                      "); W_phi is undefined");
  }
  return build_witness(DensityMatrix::from_pure(phi), c, variant);
}

double witness_bound(const DensityMatrix& rho, const Witness& w) {
  if (!(rho.dims() == w.dims) || w.op.rows() != rho.dims().total()) {
    throw ShapeError("state and witness dimensions disagree");
  }
  const Complex value = trace_of_product(rho.matrix(), w.op);
  if (std::abs(value.imag()) > 1e-10) {
    throw ConsistencyError("witness expectation has imaginary residue " +
                           std::to_string(value.imag()));
  }
  return -value.real();
}

SeparableCheck verify_witness_on_separable(const Witness& w,
                                           const SeparableCheckOptions& options) {
  const int max_terms = options.max_terms > 0 ? options.max_terms : w.dims.total();
  SeparableCheck out;
  out.min_expectation = std::numeric_limits<double>::infinity();
  out.samples = options.samples;
  for (int i = 0; i < options.samples; ++i) {
    Rng rng = make_rng(options.seed, static_cast<std::uint64_t>(i));
    std::uniform_int_distribution<int> terms(1, max_terms);
    const DensityMatrix rho = random_separable(w.dims, terms(rng), rng);
    const double expectation = -witness_bound(rho, w);
    out.min_expectation = std::min(out.min_expectation, expectation);
    if (expectation < -options.violation_tol) ++out.violations;
  }
  if (options.samples == 0) out.min_expectation = 0.0;
  return out;
}

}  // namespace qconc
