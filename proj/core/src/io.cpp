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

#include "qconc/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "qconc/errors.hpp"

namespace qconc::io {
namespace {

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw FormatError("complex number must be an [re, im] pair, got " + j.dump());
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) throw FormatError("expected a JSON object");
  const auto it = j.find(name);
  if (it == j.end()) throw FormatError(std::string("missing field '") + name + "'");
  return *it;
}

BipartiteDims dims_from_json(const Json& j) {
  const Json& d = field(j, "dims");
  if (!d.is_array() || d.size() != 2 || !d[0].is_number_integer() ||
      !d[1].is_number_integer()) {
    throw FormatError("'dims' must be a pair of integers");
  }
  const int d1 = d[0].get<int>();
  const int d2 = d[1].get<int>();
  if (d1 < 2 || d2 < 2) throw FormatError("local dimensions must be at least 2");
  return {d1, d2};
}

Json dims_to_json(BipartiteDims d) { return Json::array({d.d1, d.d2}); }

Json seed_entry_to_json(const SeedBoundEntry& e) {
  return {{"seed", e.seed_descriptor},    {"variant", std::string(to_string(e.variant))},
          {"c_seed", e.c_seed},           {"value", e.value},
          {"clamped", e.clamped},         {"vacuous", e.vacuous}};
}

}  // namespace

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json vector_to_json(const ComplexVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
  return out;
}

Json matrix_to_json(const ComplexMatrix& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(complex_to_json(m(i, k)));
    out.push_back(std::move(row));
  }
  return out;
}

ComplexVector vector_from_json(const Json& j) {
  if (!j.is_array()) throw FormatError("vector must be a JSON array");
  ComplexVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i]);
  return v;
}

ComplexMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw FormatError("matrix must be a non-empty array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  ComplexMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw FormatError("matrix rows differ in length");
    for (std::size_t c = 0; c < cols; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = complex_from_json(j[r][c]);
    }
  }
  return m;
}

Json state_to_json(const PureState& psi) {
  return {{"dims", dims_to_json(psi.dims())},
          {"kind", "pure"},
          {"data", vector_to_json(psi.amplitudes())}};
}

Json state_to_json(const DensityMatrix& rho) {
  return {{"dims", dims_to_json(rho.dims())},
          {"kind", "mixed"},
          {"data", matrix_to_json(rho.matrix())}};
}

StateFile state_from_json(const Json& j) {
  const BipartiteDims dims = dims_from_json(j);
  const Json& kind = field(j, "kind");
  if (!kind.is_string()) throw FormatError("'kind' must be a string");
  const Json& data = field(j, "data");
  const int n = dims.total();

  if (kind == "pure") {
    const ComplexVector v = vector_from_json(data);
    if (v.size() != n) {
      throw FormatError("pure state needs " + std::to_string(n) + " amplitudes, got " +
                        std::to_string(v.size()));
    }
    if (std::abs(v.squaredNorm() - 1.0) > 1e-9) {
      throw ValidationError("pure state is not normalized (squared norm " +
                            std::to_string(v.squaredNorm()) + ")");
    }
    PureState psi(dims, v);
    return {DensityMatrix::from_pure(psi), psi};
  }
  if (kind == "mixed") {
    const ComplexMatrix m = matrix_from_json(data);
    if (m.rows() != n || m.cols() != n) {
      throw FormatError("density matrix must be " + std::to_string(n) + "x" + std::to_string(n));
    }
    return {DensityMatrix(dims, m), std::nullopt};
  }
  throw FormatError("'kind' must be \"pure\" or \"mixed\", got " + kind.dump());
}

Json witness_to_json(const Witness& w) {
  Json out{{"dims", dims_to_json(w.dims)},
           {"variant", std::string(to_string(w.variant))},
           {"c_seed", w.c_seed},
           {"operator", matrix_to_json(w.op)},
           {"seed_is_pure", w.seed_is_pure}};
  if (w.seed.size() > 0) out["seed"] = matrix_to_json(w.seed);
  return out;
}

Witness witness_from_json(const Json& j) {
  Witness w;
  w.dims = dims_from_json(j);
  const Json& variant = field(j, "variant");
  if (!variant.is_string()) throw FormatError("'variant' must be a string");
  try {
    w.variant = parse_variant(variant.get<std::string>());
  } catch (const DomainError& e) {
    throw FormatError(e.what());
  }
  const Json& c = field(j, "c_seed");
  if (!c.is_number()) throw FormatError("'c_seed' must be a number");
  w.c_seed = c.get<double>();
  if (!(w.c_seed > 0.0)) throw FormatError("'c_seed' must be positive");
  w.op = matrix_from_json(field(j, "operator"));
  if (w.op.rows() != w.dims.total() || w.op.cols() != w.dims.total()) {
    throw FormatError("witness operator size does not match dims");
  }
  if (hermiticity_error(w.op) > 1e-10) throw ValidationError("witness operator is not Hermitian");
  if (const auto it = j.find("seed_is_pure"); it != j.end() && it->is_boolean()) {
    w.seed_is_pure = it->get<bool>();
  }
  if (const auto it = j.find("seed"); it != j.end()) w.seed = matrix_from_json(*it);
  return w;
}

Json to_json(const ConcurrenceValue& c) {
  Json out{{"value", c.value}, {"method", std::string(to_string(c.method))}};
  if (c.method == ConcurrenceMethod::ConvexRoofEstimate) {
    out["upper_estimate"] = true;
    out["ensemble_size"] = c.ensemble_size;
    out["restarts"] = c.restarts;
    out["iterations"] = c.iterations;
    out["evaluations"] = c.evaluations;
  }
  return out;
}

Json to_json(const ShotEstimate& e) {
  Json outcomes = Json::array();
  for (const auto& [value, count] : e.outcomes) outcomes.push_back({{"value", value}, {"count", count}});
  return {{"mean", e.mean},
          {"std_error", e.std_error},
          {"shots", e.shots},
          {"observable", e.observable_descriptor},
          {"outcomes", outcomes}};
}

Json to_json(const BoundReport& r) {
  Json two_copy = Json::array();
  for (const auto& e : r.two_copy) {
    two_copy.push_back({{"variant", std::string(to_string(e.variant))},
                        {"c_squared_bound", e.c_squared_bound},
                        {"c_bound", e.c_bound},
                        {"vacuous", e.c_squared_bound <= 0.0}});
  }
  Json witness = Json::array();
  for (const auto& e : r.witness_bounds) witness.push_back(seed_entry_to_json(e));
  Json cross = Json::array();
  for (const auto& e : r.cross_bounds) cross.push_back(seed_entry_to_json(e));

  Json oracles = Json::object();
  if (r.exact) oracles["exact"] = to_json(*r.exact);
  if (r.roof_estimate) oracles["convex_roof_estimate"] = to_json(*r.roof_estimate);

  return {{"state", r.state_descriptor},
          {"dims", dims_to_json(r.dims)},
          {"rank", r.rank},
          {"purity", r.purity},
          {"two_copy", two_copy},
          {"witness_bounds", witness},
          {"cross_bounds", cross},
          {"oracles", oracles},
          {"best_lower_bound", r.best_lower_bound},
          {"best_source", r.best_source},
          {"flags", {{"vacuous", r.vacuous}, {"tight", r.tight}}}};
}

Json to_json(const OptimizeResult& r) {
  Json trace = Json::array();
  for (const auto& t : r.trace) {
    trace.push_back({{"restart", t.restart},
                     {"start_value", t.start_value},
                     {"final_value", t.final_value},
                     {"iterations", t.iterations},
                     {"evaluations", t.evaluations}});
  }
  return {{"bound", r.bound},
          {"canonical_bound", r.canonical_bound},
          {"variant", std::string(to_string(r.witness.variant))},
          {"c_seed", r.witness.c_seed},
          {"seed_state", state_to_json(r.seed_state)},
          {"trace", trace}};
}

std::string dump(const Json& j) { return j.dump(2); }

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw FormatError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write '" + path.string() + "'");
  out << dump(j) << '\n';
}

StateFile read_state(const std::filesystem::path& path) {
  try {
    return state_from_json(read_json_file(path));
  } catch (const Json::exception& e) {
    throw FormatError("'" + path.string() + "': " + e.what());
  }
}

Witness read_witness(const std::filesystem::path& path) {
  try {
    return witness_from_json(read_json_file(path));
  } catch (const Json::exception& e) {
    throw FormatError("'" + path.string() + "': " + e.what());
  }
}

}  // namespace qconc::io
