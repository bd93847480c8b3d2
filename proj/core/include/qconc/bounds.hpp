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

// Lower bounds on concurrence and their aggregation into a report.
//
//   two-copy:    c(rho)^2       >= 4 Tr((rho (x) rho) V)
//   pure pair:   c(psi) c(phi)  >= 4 <psi (x) phi| V |psi (x) phi>
//   cross-state: c(rho) c(sigma) >= 4 Tr((rho (x) sigma) V)
//   witness:     c(rho)         >= -Tr(rho W_sigma)
//
// Negative right-hand sides are valid but vacuous and are reported as such.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qconc/concurrence.hpp"
#include "qconc/exchange.hpp"
#include "qconc/states.hpp"
#include "qconc/witness.hpp"

namespace qconc {

enum class VariantChoice { A, B, Best };

VariantChoice parse_variant_choice(std::string_view s);

/// 4 Tr((rho (x) rho) V), a lower bound on c(rho)^2.
double two_copy_bound(const DensityMatrix& rho, VariantChoice variant);

/// c(psi) c(phi) - 4 <psi (x) phi| V |psi (x) phi>; never below -1e-10.
double pure_pair_residual(const PureState& psi, const PureState& phi, Variant variant);

struct EnsembleCheckOptions {
  int size_rho = 0;    // 0: numerical rank of rho
  int size_sigma = 0;  // 0: numerical rank of sigma
  int trials = 1;
  Variant variant = Variant::A;
  double slack = 1e-9;
  std::uint64_t seed = 0;
};

struct EnsembleCheck {
  int trials = 0;
  int violations = 0;
  /// Smallest (sum c(psi_i))(sum c(phi_j)) - 4 Tr((rho (x) sigma) V) seen.
  double tightest_gap = 0.0;
  double right_side = 0.0;
};

/// Draws random decompositions of rho and sigma and checks the summed
/// pure-pair inequality on them.
EnsembleCheck ensemble_inequality_check(const DensityMatrix& rho, const DensityMatrix& sigma,
                                        const EnsembleCheckOptions& options);

struct CrossBound {
  double value = 0.0;
  bool vacuous = false;
};

/// 4 Tr((rho (x) sigma) V) / c_sigma_upper. DomainError unless
/// c_sigma_upper > 0.
CrossBound cross_bound(const DensityMatrix& rho, const DensityMatrix& sigma,
                       double c_sigma_upper, Variant variant);

struct ReportOptions {
  bool with_roof = false;
  RoofOptions roof;
  std::vector<Variant> witness_variants{Variant::A, Variant::B};
  /// best_lower_bound within this distance of an exact oracle sets `tight`.
  double tight_tol = 1e-8;
  std::string state_descriptor;
};

struct TwoCopyEntry {
  Variant variant = Variant::A;
  double c_squared_bound = 0.0;
  double c_bound = 0.0;  // sqrt(max(0, c_squared_bound))
};

struct SeedBoundEntry {
  std::string seed_descriptor;
  Variant variant = Variant::A;
  double c_seed = 0.0;
  double value = 0.0;
  double clamped = 0.0;
  bool vacuous = false;
};

struct BoundReport {
  std::string state_descriptor;
  BipartiteDims dims;
  int rank = 0;
  double purity = 0.0;
  std::vector<TwoCopyEntry> two_copy;
  std::vector<SeedBoundEntry> witness_bounds;
  std::vector<SeedBoundEntry> cross_bounds;
  /// Exact value when available (pure formula for rank one, Wootters for 2x2).
  std::optional<ConcurrenceValue> exact;
  std::optional<ConcurrenceValue> roof_estimate;
  double best_lower_bound = 0.0;
  std::string best_source;
  bool vacuous = true;
  bool tight = false;
};

/// Evaluates every bound for rho with the given pure seeds. Seeds with
/// vanishing concurrence are skipped.
BoundReport bound_report(const DensityMatrix& rho, const std::vector<PureState>& seeds,
                         const ReportOptions& options = {});

}  // namespace qconc
