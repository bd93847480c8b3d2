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

#include "qconc/states.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qconc/errors.hpp"

namespace qconc {
namespace {

ComplexVector random_unit_vector(int n, Rng& rng) {
  ComplexVector v = complex_gaussian(n, 1, rng).col(0);
  return v / v.norm();
}

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError("mixing parameter p must lie in [0, 1], got " + std::to_string(p));
  }
}

}  // namespace

BipartiteDims BipartiteDims::make(int d1, int d2) {
  if (d1 < 2 || d2 < 2) {
    throw DomainError("local dimensions must be at least 2, got (" + std::to_string(d1) +
                      "," + std::to_string(d2) + ")");
  }
  return {d1, d2};
}

PureState::PureState(BipartiteDims dims, ComplexVector amplitudes)
    : amplitudes_(std::move(amplitudes)), dims_(BipartiteDims::make(dims.d1, dims.d2)) {
  if (amplitudes_.size() != dims_.total()) {
    throw ShapeError("pure state has " + std::to_string(amplitudes_.size()) +
                     " amplitudes, expected " + std::to_string(dims_.total()));
  }
  norm_squared_ = amplitudes_.squaredNorm();
  if (!(norm_squared_ > 0.0) || norm_squared_ > 1.0 + kPureNormTol) {
    throw ValidationError("pure state squared norm must lie in (0, 1], got " +
                          std::to_string(norm_squared_));
  }
}

ComplexMatrix PureState::projector() const { return amplitudes_ * amplitudes_.adjoint(); }

PureState PureState::normalized() const {
  return PureState(dims_, amplitudes_ / std::sqrt(norm_squared_));
}

PureState PureState::scaled(double weight) const {
  return PureState(dims_, amplitudes_ * std::sqrt(weight));
}

DensityMatrix::DensityMatrix(BipartiteDims dims, ComplexMatrix matrix, double tol)
    : dims_(BipartiteDims::make(dims.d1, dims.d2)) {
  if (matrix.rows() != dims_.total() || matrix.cols() != dims_.total()) {
    throw ShapeError("density matrix must be " + std::to_string(dims_.total()) + "x" +
                     std::to_string(dims_.total()));
  }
  const double herm = hermiticity_error(matrix);
  if (herm > tol) {
    throw ValidationError("density matrix is not Hermitian (deviation " +
                          std::to_string(herm) + ")");
  }
  matrix_ = (matrix + matrix.adjoint()) / 2.0;
  const double trace = matrix_.trace().real();
  if (std::abs(trace - 1.0) > tol) {
    throw ValidationError("density matrix trace is " + std::to_string(trace) + ", expected 1");
  }
  const double lowest = eig_hermitian(matrix_, tol).values(0);
  if (lowest < -tol) {
    throw ValidationError("density matrix has negative eigenvalue " + std::to_string(lowest));
  }
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  return DensityMatrix(psi.dims(), psi.normalized().projector());
}

double DensityMatrix::purity() const { return trace_of_product(matrix_, matrix_).real(); }

ComplexMatrix Ensemble::reconstruct() const {
  ComplexMatrix sum = ComplexMatrix::Zero(dims.total(), dims.total());
  for (const auto& m : members) sum += m.projector();
  return sum;
}

double Ensemble::total_weight() const {
  double w = 0.0;
  for (const auto& m : members) w += m.norm_squared();
  return w;
}

PureState bell_state(BellKind kind) {
  const double s = 1.0 / std::sqrt(2.0);
  ComplexVector v = ComplexVector::Zero(4);
  switch (kind) {
    case BellKind::PhiPlus:
      v << s, 0, 0, s;
      break;
    case BellKind::PhiMinus:
      v << s, 0, 0, -s;
      break;
    case BellKind::PsiPlus:
      v << 0, s, s, 0;
      break;
    case BellKind::PsiMinus:
      v << 0, s, -s, 0;
      break;
  }
  return PureState({2, 2}, v);
}

PureState maximally_entangled(BipartiteDims dims) {
  const int d = std::min(dims.d1, dims.d2);
  ComplexVector v = ComplexVector::Zero(dims.total());
  for (int i = 0; i < d; ++i) v(i * dims.d2 + i) = 1.0 / std::sqrt(static_cast<double>(d));
  return PureState(dims, v);
}

PureState singlet_like(BipartiteDims dims) {
  const double s = 1.0 / std::sqrt(2.0);
  ComplexVector v = ComplexVector::Zero(dims.total());
  v(0 * dims.d2 + 1) = s;
  v(1 * dims.d2 + 0) = -s;
  return PureState(dims, v);
}

PureState product_state(const ComplexVector& a, const ComplexVector& b) {
  return PureState(BipartiteDims::make(static_cast<int>(a.size()), static_cast<int>(b.size())),
                   tensor(a, b));
}

DensityMatrix werner_state(double p) {
  check_probability(p);
  const ComplexMatrix singlet = bell_state(BellKind::PsiMinus).projector();
  return DensityMatrix({2, 2}, p * singlet + (1.0 - p) * identity(4) / 4.0);
}

DensityMatrix isotropic_state(int d, double p) {
  check_probability(p);
  const BipartiteDims dims = BipartiteDims::make(d, d);
  const ComplexMatrix phi = maximally_entangled(dims).projector();
  return DensityMatrix(dims, p * phi + (1.0 - p) * identity(d * d) / double(d * d));
}

DensityMatrix maximally_mixed(BipartiteDims dims) {
  return DensityMatrix(dims, identity(dims.total()) / double(dims.total()));
}

PureState random_pure(BipartiteDims dims, std::uint64_t seed) {
  Rng rng = make_rng(seed);
  return random_pure(dims, rng);
}

PureState random_pure(BipartiteDims dims, Rng& rng) {
  return PureState(dims, random_unit_vector(dims.total(), rng));
}

DensityMatrix random_density(BipartiteDims dims, int rank, std::uint64_t seed) {
  Rng rng = make_rng(seed);
  return random_density(dims, rank, rng);
}

DensityMatrix random_density(BipartiteDims dims, int rank, Rng& rng) {
  if (rank < 1 || rank > dims.total()) {
    throw DomainError("rank must lie in [1, " + std::to_string(dims.total()) + "], got " +
                      std::to_string(rank));
  }
  const ComplexMatrix g = complex_gaussian(dims.total(), rank, rng);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix(dims, rho);
}

DensityMatrix random_separable(BipartiteDims dims, int terms, std::uint64_t seed) {
  Rng rng = make_rng(seed);
  return random_separable(dims, terms, rng);
}

DensityMatrix random_separable(BipartiteDims dims, int terms, Rng& rng) {
  if (terms < 1) throw DomainError("separable mixture needs at least one term");
  std::exponential_distribution<double> exponential(1.0);
  std::vector<double> weights(terms);
  for (auto& w : weights) w = exponential(rng);
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);

  ComplexMatrix rho = ComplexMatrix::Zero(dims.total(), dims.total());
  for (int k = 0; k < terms; ++k) {
    const ComplexVector a = random_unit_vector(dims.d1, rng);
    const ComplexVector b = random_unit_vector(dims.d2, rng);
    const ComplexVector ab = tensor(a, b);
    rho += (weights[k] / total) * (ab * ab.adjoint());
  }
  return DensityMatrix(dims, rho);
}

ComplexMatrix random_local_unitary(BipartiteDims dims, std::uint64_t seed) {
  Rng rng = make_rng(seed);
  return random_local_unitary(dims, rng);
}

ComplexMatrix random_local_unitary(BipartiteDims dims, Rng& rng) {
  const ComplexMatrix u1 = haar_unitary(dims.d1, rng);
  const ComplexMatrix u2 = haar_unitary(dims.d2, rng);
  return tensor(u1, u2);
}

DensityMatrix conjugate(const DensityMatrix& rho, const ComplexMatrix& u) {
  return DensityMatrix(rho.dims(), u * rho.matrix() * u.adjoint());
}

ComplexMatrix reduced_state(const ComplexMatrix& op, BipartiteDims dims, int keep) {
  if (keep != 1 && keep != 2) throw DomainError("keep must be 1 or 2");
  const int traced[] = {keep == 1 ? 1 : 0};
  return partial_trace(op, dims.shape(), traced);
}

ComplexMatrix reduced_state(const DensityMatrix& rho, int keep) {
  return reduced_state(rho.matrix(), rho.dims(), keep);
}

ComplexMatrix reduced_state(const PureState& psi, int keep) {
  return reduced_state(psi.projector(), psi.dims(), keep);
}

EigenEnsemble eigen_ensemble(const DensityMatrix& rho) {
  const HermitianEigen eig = eig_hermitian(rho.matrix());
  const int n = static_cast<int>(eig.values.size());
  std::vector<int> kept;
  for (int k = n - 1; k >= 0; --k) {
    if (eig.values(k) > kRankThreshold) kept.push_back(k);
  }
  EigenEnsemble out;
  out.vectors.resize(n, static_cast<int>(kept.size()));
  for (int c = 0; c < static_cast<int>(kept.size()); ++c) {
    ComplexVector v = eig.vectors.col(kept[c]);
    for (int i = 0; i < n; ++i) {
      const double a = std::abs(v(i));
      if (a > 1e-10) {
        v *= std::conj(v(i)) / a;
        break;
      }
    }
    out.vectors.col(c) = v;
    out.weights.push_back(eig.values(kept[c]));
  }
  return out;
}

int numerical_rank(const DensityMatrix& rho) {
  const RealVector values = eig_hermitian(rho.matrix()).values;
  return static_cast<int>((values.array() > kRankThreshold).count());
}

Ensemble decompose_with_isometry(const DensityMatrix& rho, const EigenEnsemble& eig,
                                 const ComplexMatrix& isometry) {
  if (isometry.cols() != eig.rank()) {
    throw ShapeError("isometry must have one column per eigen-ensemble member");
  }
  ComplexMatrix scaled = eig.vectors;
  for (int j = 0; j < eig.rank(); ++j) scaled.col(j) *= std::sqrt(eig.weights[j]);
  // Column i holds ensemble member i.
  const ComplexMatrix members = scaled * isometry.transpose();
  Ensemble out{{}, rho.dims()};
  for (Eigen::Index i = 0; i < members.cols(); ++i) {
    ComplexVector v = members.col(i);
    if (v.squaredNorm() > 1e-30) out.members.emplace_back(rho.dims(), std::move(v));
  }
  return out;
}

Ensemble random_decomposition(const DensityMatrix& rho, int size, std::uint64_t seed) {
  Rng rng = make_rng(seed);
  return random_decomposition(rho, size, rng);
}

Ensemble random_decomposition(const DensityMatrix& rho, int size, Rng& rng) {
  const EigenEnsemble eig = eigen_ensemble(rho);
  if (size < eig.rank()) {
    throw DomainError("decomposition size " + std::to_string(size) +
                      " is below the numerical rank " + std::to_string(eig.rank()));
  }
  return decompose_with_isometry(rho, eig, haar_isometry(size, eig.rank(), rng));
}

}  // namespace qconc
