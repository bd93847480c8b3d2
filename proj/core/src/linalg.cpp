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

#include "qconc/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <string>

#include "qconc/errors.hpp"

namespace qconc {
namespace {

void check_shape(const ComplexMatrix& m, const SubsystemShape& shape) {
  if (shape.dims.empty()) throw ShapeError("subsystem shape has no factors");
  for (int d : shape.dims) {
    if (d < 1) throw ShapeError("subsystem dimension must be positive");
  }
  if (m.rows() != m.cols()) throw ShapeError("operator must be square");
  if (m.rows() != shape.total()) {
    throw ShapeError("operator side " + std::to_string(m.rows()) +
                     " does not match subsystem shape product " +
                     std::to_string(shape.total()));
  }
}

// Digits of `index` in the mixed radix given by `dims`, most significant
// (factor 0) first.
void split_index(int index, const std::vector<int>& dims, std::vector<int>& digits) {
  for (int k = static_cast<int>(dims.size()) - 1; k >= 0; --k) {
    digits[k] = index % dims[k];
    index /= dims[k];
  }
}

}  // namespace

int SubsystemShape::total() const {
  return std::accumulate(dims.begin(), dims.end(), 1, std::multiplies<>());
}

ComplexMatrix identity(int n) { return ComplexMatrix::Identity(n, n); }

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexVector tensor(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, const SubsystemShape& shape,
                            std::span<const int> traced) {
  check_shape(m, shape);
  const int n = shape.size();
  std::vector<bool> is_traced(n, false);
  for (int t : traced) {
    if (t < 0 || t >= n) throw ShapeError("traced factor index out of range");
    if (is_traced[t]) throw ShapeError("traced factor listed twice");
    is_traced[t] = true;
  }

  std::vector<int> kept_dims;
  for (int k = 0; k < n; ++k) {
    if (!is_traced[k]) kept_dims.push_back(shape.dims[k]);
  }
  const int kept_total = std::accumulate(kept_dims.begin(), kept_dims.end(), 1,
                                         std::multiplies<>());
  const int full = shape.total();

  // For every full basis index: its kept-part index and traced-part index.
  std::vector<int> kept_index(full), traced_index(full);
  std::vector<int> digits(n);
  for (int i = 0; i < full; ++i) {
    split_index(i, shape.dims, digits);
    int kept = 0, tr = 0;
    for (int k = 0; k < n; ++k) {
      if (is_traced[k]) {
        tr = tr * shape.dims[k] + digits[k];
      } else {
        kept = kept * shape.dims[k] + digits[k];
      }
    }
    kept_index[i] = kept;
    traced_index[i] = tr;
  }

  ComplexMatrix out = ComplexMatrix::Zero(kept_total, kept_total);
  for (int i = 0; i < full; ++i) {
    for (int j = 0; j < full; ++j) {
      if (traced_index[i] == traced_index[j]) {
        out(kept_index[i], kept_index[j]) += m(i, j);
      }
    }
  }
  return out;
}

ComplexMatrix permute_subsystems(const ComplexMatrix& m,
                                 const SubsystemShape& shape,
                                 std::span<const int> perm) {
  check_shape(m, shape);
  const int n = shape.size();
  if (static_cast<int>(perm.size()) != n) {
    throw ShapeError("permutation length does not match number of factors");
  }
  std::vector<bool> seen(n, false);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[p]) throw ShapeError("invalid permutation");
    seen[p] = true;
  }

  std::vector<int> new_dims(n);
  for (int k = 0; k < n; ++k) new_dims[k] = shape.dims[perm[k]];

  // old_of[new basis index] = old basis index.
  const int full = shape.total();
  std::vector<int> old_of(full);
  std::vector<int> new_digits(n), old_digits(n);
  for (int i = 0; i < full; ++i) {
    split_index(i, new_dims, new_digits);
    for (int k = 0; k < n; ++k) old_digits[perm[k]] = new_digits[k];
    int old = 0;
    for (int k = 0; k < n; ++k) old = old * shape.dims[k] + old_digits[k];
    old_of[i] = old;
  }

  ComplexMatrix out(full, full);
  for (int i = 0; i < full; ++i) {
    for (int j = 0; j < full; ++j) out(i, j) = m(old_of[i], old_of[j]);
  }
  return out;
}

double hermiticity_error(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = i; j < m.cols(); ++j) {
      worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
    }
  }
  return worst;
}

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols()) {
    throw ShapeError("trace_of_product: incompatible shapes");
  }
  return a.cwiseProduct(b.transpose()).sum();
}

HermitianEigen eig_hermitian(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) throw ShapeError("eig_hermitian: matrix not square");
  const double herm = hermiticity_error(m);
  if (herm > tol) {
    throw ValidationError("eig_hermitian: matrix is not Hermitian (deviation " +
                          std::to_string(herm) + ")");
  }
  const Eigen::MatrixXcd sym = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw ValidationError("eig_hermitian: eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

}  // namespace qconc
