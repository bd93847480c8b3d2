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

#include "qconc/exchange.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "qconc/errors.hpp"

namespace qconc {

std::string_view to_string(Variant v) { return v == Variant::A ? "A" : "B"; }

Variant parse_variant(std::string_view s) {
  if (s.size() == 1) {
    const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    if (c == 'A') return Variant::A;
    if (c == 'B') return Variant::B;
  }
  throw DomainError("unknown variant '" + std::string(s) + "' (expected A or B)");
}

ComplexMatrix swap_operator(int d) {
  if (d < 2) throw DomainError("swap operator needs d >= 2");
  ComplexMatrix s = ComplexMatrix::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) s(j * d + i, i * d + j) = 1.0;
  }
  return s;
}

ComplexMatrix antisym_projector(int d) { return (identity(d * d) - swap_operator(d)) / 2.0; }

ComplexMatrix sym_projector(int d) { return (identity(d * d) + swap_operator(d)) / 2.0; }

CopyPairOperator embed_copy_pair(BipartiteDims dims, const ComplexMatrix& first,
                                 const ComplexMatrix& second) {
  const int n1 = dims.d1 * dims.d1;
  const int n2 = dims.d2 * dims.d2;
  if (first.rows() != n1 || first.cols() != n1 || second.rows() != n2 ||
      second.cols() != n2) {
    throw ShapeError("copy-pair factors do not match the local dimensions");
  }
  static constexpr int kInterleave[] = {0, 2, 1, 3};
  const SubsystemShape adjacent{{dims.d1, dims.d1, dims.d2, dims.d2}};
  return {permute_subsystems(tensor(first, second), adjacent, kInterleave), dims,
          OperatorLabel::Custom};
}

CopyPairOperator build_V(BipartiteDims dims, Variant variant) {
  CopyPairOperator v;
  if (variant == Variant::A) {
    v = embed_copy_pair(dims, antisym_projector(dims.d1),
                        antisym_projector(dims.d2) - sym_projector(dims.d2));
    v.label = OperatorLabel::A;
  } else {
    v = embed_copy_pair(dims, antisym_projector(dims.d1) - sym_projector(dims.d1),
                        antisym_projector(dims.d2));
    v.label = OperatorLabel::B;
  }
  return v;
}

double two_copy_expectation(const ComplexMatrix& rho, const ComplexMatrix& sigma,
                            const CopyPairOperator& v) {
  const int n = v.dims.total();
  if (rho.rows() != n || rho.cols() != n || sigma.rows() != n || sigma.cols() != n ||
      v.matrix.rows() != n * n) {
    throw ShapeError("two-copy expectation: state and operator dimensions disagree");
  }
  const Complex value = trace_of_product(tensor(rho, sigma), v.matrix);
  if (std::abs(value.imag()) > 1e-10) {
    throw ConsistencyError("two-copy expectation has imaginary residue " +
                           std::to_string(value.imag()));
  }
  return value.real();
}

double two_copy_expectation(const DensityMatrix& rho, const DensityMatrix& sigma,
                            const CopyPairOperator& v) {
  if (!(rho.dims() == v.dims) || !(sigma.dims() == v.dims)) {
    throw ShapeError("two-copy expectation: state and operator dimensions disagree");
  }
  return two_copy_expectation(rho.matrix(), sigma.matrix(), v);
}

}  // namespace qconc
