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

// Bipartite pure and mixed states on H1 (x) H2, plus samplers.
//
// Pure ensemble members follow the rho = sum_i |psi_i><psi_i| convention:
// the weight of a member is carried inside its amplitude vector and cached
// as norm_squared.

#include <cstdint>
#include <vector>

#include "qconc/linalg.hpp"
#include "qconc/random.hpp"

namespace qconc {

inline constexpr double kPureNormTol = 1e-10;
inline constexpr double kRankThreshold = 1e-12;

struct BipartiteDims {
  int d1 = 2;
  int d2 = 2;

  /// Throws DomainError unless d1, d2 >= 2.
  static BipartiteDims make(int d1, int d2);

  [[nodiscard]] int total() const { return d1 * d2; }
  [[nodiscard]] SubsystemShape shape() const { return {{d1, d2}}; }
  /// Two-copy space H1 (x) H2 (x) H1' (x) H2'.
  [[nodiscard]] SubsystemShape two_copy_shape() const { return {{d1, d2, d1, d2}}; }

  friend bool operator==(const BipartiteDims&, const BipartiteDims&) = default;
};

class PureState {
 public:
  /// Validates the length and that the squared norm lies in (0, 1].
  PureState(BipartiteDims dims, ComplexVector amplitudes);

  [[nodiscard]] const ComplexVector& amplitudes() const { return amplitudes_; }
  [[nodiscard]] BipartiteDims dims() const { return dims_; }
  [[nodiscard]] double norm_squared() const { return norm_squared_; }

  /// |psi><psi| (carries the weight, trace = norm_squared).
  [[nodiscard]] ComplexMatrix projector() const;
  /// Rescaled to unit norm.
  [[nodiscard]] PureState normalized() const;
  /// sqrt(weight) * psi.
  [[nodiscard]] PureState scaled(double weight) const;

 private:
  ComplexVector amplitudes_;
  BipartiteDims dims_;
  double norm_squared_ = 1.0;
};

class DensityMatrix {
 public:
  /// Validates Hermiticity, positivity and unit trace (all within `tol`);
  /// ValidationError otherwise.
  DensityMatrix(BipartiteDims dims, ComplexMatrix matrix, double tol = kHermitianTol);

  /// Normalized projector onto a pure state.
  static DensityMatrix from_pure(const PureState& psi);

  [[nodiscard]] const ComplexMatrix& matrix() const { return matrix_; }
  [[nodiscard]] BipartiteDims dims() const { return dims_; }
  [[nodiscard]] double purity() const;

 private:
  ComplexMatrix matrix_;
  BipartiteDims dims_;
};

struct Ensemble {
  std::vector<PureState> members;
  BipartiteDims dims;

  /// sum_i |psi_i><psi_i|.
  [[nodiscard]] ComplexMatrix reconstruct() const;
  [[nodiscard]] double total_weight() const;
};

enum class BellKind { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

PureState bell_state(BellKind kind);
/// sum_{i < min(d1,d2)} |ii> / sqrt(min(d1,d2)).
PureState maximally_entangled(BipartiteDims dims);
/// (|01> - |10>)/sqrt(2) embedded in the first two levels of each side.
PureState singlet_like(BipartiteDims dims);
PureState product_state(const ComplexVector& a, const ComplexVector& b);

/// p |Psi-><Psi-| + (1-p) 1/4. DomainError unless 0 <= p <= 1.
DensityMatrix werner_state(double p);
/// p |Phi_d><Phi_d| + (1-p) 1/d^2 on d x d. DomainError unless 0 <= p <= 1.
DensityMatrix isotropic_state(int d, double p);
DensityMatrix maximally_mixed(BipartiteDims dims);

PureState random_pure(BipartiteDims dims, std::uint64_t seed);
PureState random_pure(BipartiteDims dims, Rng& rng);

/// Normalized G G^dagger, G a (d1 d2) x rank complex Gaussian matrix.
DensityMatrix random_density(BipartiteDims dims, int rank, std::uint64_t seed);
DensityMatrix random_density(BipartiteDims dims, int rank, Rng& rng);

/// sum_k w_k |a_k><a_k| (x) |b_k><b_k|, Haar local vectors, flat-Dirichlet w.
DensityMatrix random_separable(BipartiteDims dims, int terms, std::uint64_t seed);
DensityMatrix random_separable(BipartiteDims dims, int terms, Rng& rng);

/// U1 (x) U2 with Haar-random factors.
ComplexMatrix random_local_unitary(BipartiteDims dims, std::uint64_t seed);
ComplexMatrix random_local_unitary(BipartiteDims dims, Rng& rng);

/// U rho U^dagger.
DensityMatrix conjugate(const DensityMatrix& rho, const ComplexMatrix& u);

/// Reduced operator on subsystem `keep` (1 or 2).
ComplexMatrix reduced_state(const DensityMatrix& rho, int keep);
ComplexMatrix reduced_state(const PureState& psi, int keep);
ComplexMatrix reduced_state(const ComplexMatrix& op, BipartiteDims dims, int keep);

/// Eigenvalues above kRankThreshold, descending, with eigenvectors whose
/// first non-negligible component is made real positive.
struct EigenEnsemble {
  std::vector<double> weights;
  ComplexMatrix vectors;  // columns, one per weight

  [[nodiscard]] int rank() const { return static_cast<int>(weights.size()); }
};
EigenEnsemble eigen_ensemble(const DensityMatrix& rho);
int numerical_rank(const DensityMatrix& rho);

/// psi_i = sum_j M_ij sqrt(lambda_j) chi_j for an isometry M (size x rank).
/// Members with vanishing weight are dropped.
Ensemble decompose_with_isometry(const DensityMatrix& rho, const EigenEnsemble& eig,
                                 const ComplexMatrix& isometry);

/// Random pure-state decomposition of size `size` (random Haar isometry).
/// DomainError if size < numerical rank.
Ensemble random_decomposition(const DensityMatrix& rho, int size, std::uint64_t seed);
Ensemble random_decomposition(const DensityMatrix& rho, int size, Rng& rng);

}  // namespace qconc
