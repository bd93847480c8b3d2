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

#include "qconc/concurrence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qconc/errors.hpp"
#include "qconc/exchange.hpp"
#include "qconc/nelder_mead.hpp"

namespace qconc {

std::string_view to_string(ConcurrenceMethod m) {
  switch (m) {
    case ConcurrenceMethod::PureFormula:
      return "pure-formula";
    case ConcurrenceMethod::Wootters:
      return "wootters";
    case ConcurrenceMethod::ConvexRoofEstimate:
      return "convex-roof-estimate";
  }
  return "unknown";
}

double pure_concurrence_value(const ComplexVector& amplitudes, int d1, int d2) {
  const Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
      coeffs(amplitudes.data(), d1, d2);
  const Eigen::MatrixXcd reduced = coeffs * coeffs.adjoint();
  const double weight = amplitudes.squaredNorm();
  return std::sqrt(std::max(0.0, 2.0 * (weight * weight - reduced.squaredNorm())));
}

ConcurrenceValue pure_concurrence(const PureState& psi) {
  ConcurrenceValue out;
  out.value = pure_concurrence_value(psi.amplitudes(), psi.dims().d1, psi.dims().d2);
  out.method = ConcurrenceMethod::PureFormula;
  return out;
}

double pure_concurrence_two_copy(const PureState& psi) {
  const BipartiteDims dims = psi.dims();
  const CopyPairOperator both_antisym =
      embed_copy_pair(dims, antisym_projector(dims.d1), antisym_projector(dims.d2));
  const ComplexVector doubled = tensor(psi.amplitudes(), psi.amplitudes());
  const Complex value = doubled.dot(both_antisym.matrix * doubled);
  return std::sqrt(std::max(0.0, 4.0 * value.real()));
}

ConcurrenceValue wootters_concurrence(const DensityMatrix& rho) {
  if (rho.dims().d1 != 2 || rho.dims().d2 != 2) {
    throw DomainError("Wootters concurrence requires a two-qubit state");
  }
  // Subnormalized eigenvectors v_j = sqrt(lambda_j) chi_j. The lambda_i of the
  // spin-flip construction are the singular values of the symmetric matrix
  // tau = V^dagger (Y (x) Y) conj(V); they are read off as the top half of the
  // spectrum of the Hermitian dilation [[0, tau], [tau^dagger, 0]], which keeps
  // small values accurate to machine precision.
  const HermitianEigen eig = eig_hermitian(rho.matrix());
  ComplexMatrix v = eig.vectors;
  for (int j = 0; j < 4; ++j) v.col(j) *= std::sqrt(std::max(0.0, eig.values(j)));

  ComplexMatrix yy = ComplexMatrix::Zero(4, 4);
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  const ComplexMatrix tau = v.adjoint() * yy * v.conjugate();

  ComplexMatrix dilation = ComplexMatrix::Zero(8, 8);
  dilation.topRightCorner(4, 4) = tau;
  dilation.bottomLeftCorner(4, 4) = tau.adjoint();
  const RealVector spectrum = eig_hermitian(dilation, 1e-8).values;

  // Ascending: the four largest are the singular values.
  const double l1 = spectrum(7), l2 = spectrum(6), l3 = spectrum(5), l4 = spectrum(4);
  ConcurrenceValue out;
  out.value = std::max(0.0, l1 - std::max(0.0, l2) - std::max(0.0, l3) - std::max(0.0, l4));
  out.method = ConcurrenceMethod::Wootters;
  return out;
}

double ensemble_concurrence(const Ensemble& ensemble) {
  double total = 0.0;
  for (const auto& m : ensemble.members) {
    total += pure_concurrence_value(m.amplitudes(), ensemble.dims.d1, ensemble.dims.d2);
  }
  return total;
}

namespace {

// Unconstrained complex matrix G (size x rank) packed as interleaved
// real/imaginary parts, mapped to the isometry G (G^dagger G)^(-1/2).
class RoofObjective {
 public:
  RoofObjective(const EigenEnsemble& eig, BipartiteDims dims, int size)
      : dims_(dims), size_(size), rank_(eig.rank()), scaled_(eig.vectors) {
    for (int j = 0; j < rank_; ++j) scaled_.col(j) *= std::sqrt(eig.weights[j]);
  }

  [[nodiscard]] int parameter_count() const { return 2 * size_ * rank_; }

  [[nodiscard]] std::vector<double> pack(const ComplexMatrix& g) const {
    std::vector<double> x(parameter_count());
    for (int i = 0; i < size_; ++i) {
      for (int j = 0; j < rank_; ++j) {
        x[2 * (i * rank_ + j)] = g(i, j).real();
        x[2 * (i * rank_ + j) + 1] = g(i, j).imag();
      }
    }
    return x;
  }

  double operator()(std::span<const double> x) const {
    Eigen::MatrixXcd g(size_, rank_);
    for (int i = 0; i < size_; ++i) {
      for (int j = 0; j < rank_; ++j) {
        g(i, j) = Complex(x[2 * (i * rank_ + j)], x[2 * (i * rank_ + j) + 1]);
      }
    }
    const Eigen::MatrixXcd gram = g.adjoint() * g;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram);
    if (solver.eigenvalues().minCoeff() < 1e-12 * std::max(1.0, solver.eigenvalues().maxCoeff())) {
      return std::numeric_limits<double>::infinity();
    }
    const Eigen::MatrixXcd isometry = g * solver.operatorInverseSqrt();
    const Eigen::MatrixXcd members = scaled_ * isometry.transpose();
    double total = 0.0;
    for (int i = 0; i < size_; ++i) {
      const ComplexVector member = members.col(i);
      total += pure_concurrence_value(member, dims_.d1, dims_.d2);
    }
    return total;
  }

 private:
  BipartiteDims dims_;
  int size_;
  int rank_;
  ComplexMatrix scaled_;
};

}  // namespace

ConcurrenceValue convex_roof_estimate(const DensityMatrix& rho, const RoofOptions& options) {
  const EigenEnsemble eig = eigen_ensemble(rho);
  if (options.ensemble_size < eig.rank()) {
    throw DomainError("ensemble size " + std::to_string(options.ensemble_size) +
                      " is below the numerical rank " + std::to_string(eig.rank()));
  }
  ConcurrenceValue out;
  out.method = ConcurrenceMethod::ConvexRoofEstimate;
  out.ensemble_size = options.ensemble_size;

  if (eig.rank() == 1) {
    // Every decomposition of a pure state is proportional to the state itself.
    const ComplexVector v = eig.vectors.col(0) * std::sqrt(eig.weights[0]);
    out.value = pure_concurrence_value(v, rho.dims().d1, rho.dims().d2);
    out.evaluations = 1;
    return out;
  }

  const RoofObjective objective(eig, rho.dims(), options.ensemble_size);
  NelderMeadOptions nm;
  nm.max_iters = options.max_iters;
  nm.tol = options.tol;
  nm.initial_step = 0.5 / std::sqrt(static_cast<double>(options.ensemble_size));

  double best = std::numeric_limits<double>::infinity();
  const int restarts = std::max(1, options.restarts);
  for (int r = 0; r < restarts; ++r) {
    ComplexMatrix start;
    if (r == 0) {
      start = ComplexMatrix::Identity(options.ensemble_size, eig.rank());
    } else {
      Rng rng = make_rng(options.seed, static_cast<std::uint64_t>(r));
      start = haar_isometry(options.ensemble_size, eig.rank(), rng);
    }
    const NelderMeadResult res = nelder_mead(
        [&](std::span<const double> x) { return objective(x); }, objective.pack(start), nm);
    best = std::min(best, res.value);
    out.iterations += res.iterations;
    out.evaluations += res.evaluations;
  }
  out.restarts = restarts;
  out.value = best;
  return out;
}

}  // namespace qconc
