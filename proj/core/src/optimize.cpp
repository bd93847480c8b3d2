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

#include "qconc/optimize.hpp"

#include <cmath>
#include <limits>

#include "qconc/concurrence.hpp"
#include "qconc/nelder_mead.hpp"

namespace qconc {
namespace {

constexpr double kPenalty = 1e3;

// -Tr(rho W_phi) = (2/c) (<phi|rho|phi> - Tr(rho_k phi_k)), with k = 2 for
// variant A and k = 1 for variant B.
class SeedObjective {
 public:
  SeedObjective(const DensityMatrix& rho, Variant variant)
      : rho_(rho.matrix()),
        reduced_(reduced_state(rho, variant == Variant::A ? 2 : 1)),
        dims_(rho.dims()),
        variant_(variant) {}

  [[nodiscard]] double value(const ComplexVector& phi, double c) const {
    using RowMajor = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    const Eigen::Map<const RowMajor> coeffs(phi.data(), dims_.d1, dims_.d2);
    const Eigen::MatrixXcd local = variant_ == Variant::A
                                       ? Eigen::MatrixXcd(coeffs.transpose() * coeffs.conjugate())
                                       : Eigen::MatrixXcd(coeffs * coeffs.adjoint());
    const double overlap = phi.dot(rho_ * phi).real();
    const double local_term = reduced_.cwiseProduct(local.transpose()).sum().real();
    return 2.0 * (overlap - local_term) / c;
  }

  [[nodiscard]] BipartiteDims dims() const { return dims_; }

 private:
  ComplexMatrix rho_;
  ComplexMatrix reduced_;
  BipartiteDims dims_;
  Variant variant_;
};

ComplexVector unpack(std::span<const double> x) {
  ComplexVector v(static_cast<Eigen::Index>(x.size() / 2));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = Complex(x[2 * i], x[2 * i + 1]);
  return v;
}

std::vector<double> pack(const ComplexVector& v) {
  std::vector<double> x(2 * static_cast<std::size_t>(v.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    x[2 * i] = v(i).real();
    x[2 * i + 1] = v(i).imag();
  }
  return x;
}

}  // namespace

std::vector<PureState> canonical_seeds(BipartiteDims dims) {
  std::vector<PureState> seeds{singlet_like(dims), maximally_entangled(dims)};
  for (BellKind kind :
       {BellKind::PhiPlus, BellKind::PhiMinus, BellKind::PsiPlus, BellKind::PsiMinus}) {
    const ComplexVector bell = bell_state(kind).amplitudes();
    ComplexVector v = ComplexVector::Zero(dims.total());
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) v(i * dims.d2 + j) = bell(i * 2 + j);
    }
    seeds.emplace_back(dims, v);
  }
  return seeds;
}

double seed_objective(const DensityMatrix& rho, const ComplexVector& phi, Variant variant) {
  const double c = pure_concurrence_value(phi, rho.dims().d1, rho.dims().d2);
  return SeedObjective(rho, variant).value(phi, c);
}

OptimizeResult optimize_witness(const DensityMatrix& rho, const OptimizeOptions& options) {
  const SeedObjective objective(rho, options.variant);
  const BipartiteDims dims = rho.dims();

  auto minimized = [&](std::span<const double> x) {
    const ComplexVector raw = unpack(x);
    const double norm = raw.norm();
    if (!(norm > 1e-8)) return kPenalty;
    const ComplexVector phi = raw / norm;
    const double c = pure_concurrence_value(phi, dims.d1, dims.d2);
    if (c < options.min_seed_concurrence) return kPenalty;
    return -objective.value(phi, c);
  };

  ComplexVector best_canonical;
  double canonical = -std::numeric_limits<double>::infinity();
  for (const auto& s : canonical_seeds(dims)) {
    const double v = -minimized(pack(s.amplitudes()));
    if (v > canonical) {
      canonical = v;
      best_canonical = s.amplitudes();
    }
  }

  NelderMeadOptions nm;
  nm.max_iters = options.max_iters;
  nm.tol = options.tol;
  nm.initial_step = 0.2;

  OptimizeResult result{Witness{}, PureState(dims, best_canonical), canonical, canonical, {}};
  ComplexVector best_phi = best_canonical;
  double best_value = canonical;
  const int restarts = std::max(1, options.restarts);
  for (int r = 0; r < restarts; ++r) {
    ComplexVector start;
    if (r == 0) {
      start = best_canonical;
    } else {
      Rng rng = make_rng(options.seed, static_cast<std::uint64_t>(r));
      start = random_pure(dims, rng).amplitudes();
    }
    const std::vector<double> x0 = pack(start);
    RestartTrace t;
    t.restart = r;
    t.start_value = -minimized(x0);
    const NelderMeadResult res = nelder_mead(minimized, x0, nm);
    t.final_value = -res.value;
    t.iterations = res.iterations;
    t.evaluations = res.evaluations;
    result.trace.push_back(t);
    if (t.final_value > best_value) {
      best_value = t.final_value;
      const ComplexVector raw = unpack(res.x);
      best_phi = raw / raw.norm();
    }
  }

  result.seed_state = PureState(dims, best_phi / best_phi.norm());
  result.witness = witness_from_pure(result.seed_state, options.variant);
  result.bound = witness_bound(rho, result.witness);
  return result;
}

}  // namespace qconc
