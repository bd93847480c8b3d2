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

// JSON encodings of states, witnesses and results.
//
// Complex numbers are [re, im] pairs; vectors are flat lists; matrices are
// row-major lists of rows.
//
//   state:   {"dims":[d1,d2], "kind":"pure"|"mixed", "data":[...]}
//   witness: {"dims":[d1,d2], "variant":"A", "c_seed":x, "operator":[...],
//             "seed_is_pure":bool, "seed":[...]}       (last two optional)

#include <filesystem>
#include <optional>

#include <nlohmann/json.hpp>

#include "qconc/bounds.hpp"
#include "qconc/concurrence.hpp"
#include "qconc/optimize.hpp"
#include "qconc/shots.hpp"
#include "qconc/states.hpp"
#include "qconc/witness.hpp"

namespace qconc::io {

using Json = nlohmann::json;

/// A state as read from disk. `pure` is set for kind "pure".
struct StateFile {
  DensityMatrix density;
  std::optional<PureState> pure;
};

Json complex_to_json(Complex z);
Json vector_to_json(const ComplexVector& v);
Json matrix_to_json(const ComplexMatrix& m);
ComplexVector vector_from_json(const Json& j);
ComplexMatrix matrix_from_json(const Json& j);

Json state_to_json(const PureState& psi);
Json state_to_json(const DensityMatrix& rho);
/// FormatError on malformed input; ValidationError if the decoded state is
/// not a unit-norm vector or a valid density matrix.
StateFile state_from_json(const Json& j);

Json witness_to_json(const Witness& w);
/// FormatError on malformed input; ValidationError if the operator is not
/// Hermitian within 1e-10.
Witness witness_from_json(const Json& j);

Json to_json(const ConcurrenceValue& c);
Json to_json(const ShotEstimate& e);
Json to_json(const BoundReport& r);
Json to_json(const OptimizeResult& r);

/// Doubles are written in shortest round-trip form, so reading back gives
/// bit-identical values.
std::string dump(const Json& j);

Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);

StateFile read_state(const std::filesystem::path& path);
Witness read_witness(const std::filesystem::path& path);

}  // namespace qconc::io
