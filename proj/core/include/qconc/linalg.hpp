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

// Dense complex linear algebra over composite Hilbert spaces.
//
// Tensor factors are always listed left to right as they appear in the
// product, factor 0 first. Basis index of |i_0 i_1 ... i_{n-1}> is the
// row-major (big-endian) mixed-radix number i_0 i_1 ... i_{n-1}.

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace qconc {

using Complex = std::complex<double>;
using ComplexMatrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kHermitianTol = 1e-9;

/// Local dimensions of each tensor factor of an operator's space.
struct SubsystemShape {
  std::vector<int> dims;

  /// Product of all factor dimensions.
  [[nodiscard]] int total() const;
  [[nodiscard]] int size() const { return static_cast<int>(dims.size()); }
};

ComplexMatrix identity(int n);

/// Kronecker product A (x) B.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector tensor(const ComplexVector& a, const ComplexVector& b);

/// Traces out the factors listed in `traced`; the remaining factors keep
/// their relative order. Throws ShapeError on an inconsistent shape or an
/// invalid factor index.
ComplexMatrix partial_trace(const ComplexMatrix& m, const SubsystemShape& shape,
                            std::span<const int> traced);

/// Reorders tensor factors: factor k of the result is factor perm[k] of the
/// input, i.e. returns P M P^dagger for the corresponding permutation
/// unitary P. The result lives on shape {dims[perm[0]], dims[perm[1]], ...}.
ComplexMatrix permute_subsystems(const ComplexMatrix& m,
                                 const SubsystemShape& shape,
                                 std::span<const int> perm);

/// max |M_ij - conj(M_ji)|.
double hermiticity_error(const ComplexMatrix& m);

/// max |M_ij|.
double max_abs(const ComplexMatrix& m);

/// Tr(A B) without forming the product.
Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b);

struct HermitianEigen {
  RealVector values;      // ascending
  ComplexMatrix vectors;  // eigenvectors as columns
};

/// Eigendecomposition of a Hermitian matrix. The input is symmetrized
/// before solving; ValidationError if it is not Hermitian within `tol`.
HermitianEigen eig_hermitian(const ComplexMatrix& m, double tol = kHermitianTol);

}  // namespace qconc
