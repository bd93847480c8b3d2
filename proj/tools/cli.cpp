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

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qconc/bounds.hpp"
#include "qconc/concurrence.hpp"
#include "qconc/errors.hpp"
#include "qconc/io.hpp"
#include "qconc/optimize.hpp"
#include "qconc/shots.hpp"
#include "qconc/states.hpp"
#include "qconc/witness.hpp"

namespace qconc::cli {
namespace {

using io::Json;

struct GenArgs {
  std::string family;
  std::string kind = "psi-";
  double p = 1.0;
  std::vector<int> dims{2, 2};
  int rank = 0;
  int terms = 4;
  std::uint64_t seed = 0;
  std::string out;
};

struct ConcurrenceArgs {
  std::string state;
  std::string method = "auto";
  int roof_size = 0;
  int restarts = 16;
  int max_iters = 2000;
  std::uint64_t seed = 0;
};

struct BoundArgs {
  std::string state;
  std::string sigma;
  std::string variant;
  std::optional<double> c_upper;
};

struct WitnessArgs {
  std::string state;
  std::string sigma;
  std::string variant = "A";
  std::optional<double> c_upper;
  int restarts = 32;
  int max_iters = 2000;
  std::uint64_t seed = 0;
  std::string out;
};

struct EstimateArgs {
  std::string state;
  std::string witness;
  bool two_copy = false;
  std::string variant = "A";
  long shots = 0;
  std::uint64_t seed = 0;
};

struct ReportArgs {
  std::string state;
  std::vector<std::string> seeds;
  bool with_roof = false;
  int restarts = 16;
  std::uint64_t seed = 0;
};

BellKind parse_bell_kind(const std::string& s) {
  if (s == "phi+") return BellKind::PhiPlus;
  if (s == "phi-") return BellKind::PhiMinus;
  if (s == "psi+") return BellKind::PsiPlus;
  if (s == "psi-") return BellKind::PsiMinus;
  throw DomainError("unknown Bell kind '" + s + "' (expected phi+, phi-, psi+ or psi-)");
}

void print(std::ostream& out, const Json& j) { out << io::dump(j) << '\n'; }

// Concurrence of a rank-one state, computed exactly; nullopt for mixed states.
std::optional<double> pure_seed_concurrence(const io::StateFile& s) {
  if (s.pure) return pure_concurrence(s.pure->normalized()).value;
  const EigenEnsemble eig = eigen_ensemble(s.density);
  if (eig.rank() != 1) return std::nullopt;
  return pure_concurrence_value(eig.vectors.col(0), s.density.dims().d1, s.density.dims().d2);
}

Witness witness_for_seed(const io::StateFile& sigma, std::optional<double> c_upper,
                         Variant variant) {
  std::optional<double> c = c_upper;
  if (!c) c = pure_seed_concurrence(sigma);
  if (!c) throw DomainError("--c-upper is required for a mixed seed state");
  return build_witness(sigma.density, *c, variant);
}

int cmd_gen(const GenArgs& a, std::ostream& out) {
  if (a.dims.size() != 2) throw DomainError("--dims takes two values");
  const BipartiteDims dims = BipartiteDims::make(a.dims[0], a.dims[1]);
  Json j;
  if (a.family == "bell") {
    if (dims.d1 != 2 || dims.d2 != 2) throw DomainError("Bell states are two-qubit states");
    j = io::state_to_json(bell_state(parse_bell_kind(a.kind)));
  } else if (a.family == "werner") {
    if (dims.d1 != 2 || dims.d2 != 2) throw DomainError("Werner states are two-qubit states");
    j = io::state_to_json(werner_state(a.p));
  } else if (a.family == "isotropic") {
    if (dims.d1 != dims.d2) throw DomainError("isotropic states need equal local dimensions");
    j = io::state_to_json(isotropic_state(dims.d1, a.p));
  } else if (a.family == "random") {
    j = a.rank == 0 ? io::state_to_json(random_pure(dims, a.seed))
                    : io::state_to_json(random_density(dims, a.rank, a.seed));
  } else if (a.family == "separable") {
    j = io::state_to_json(random_separable(dims, a.terms, a.seed));
  } else {
    throw DomainError("unknown family '" + a.family + "'");
  }
  io::write_json_file(a.out, j);
  print(out, {{"written", a.out}, {"family", a.family}});
  return kExitOk;
}

int cmd_concurrence(const ConcurrenceArgs& a, std::ostream& out, std::ostream& err) {
  const io::StateFile s = io::read_state(a.state);
  const DensityMatrix& rho = s.density;
  const int rank = numerical_rank(rho);
  std::string method = a.method;
  if (method == "auto") {
    if (rank == 1) {
      method = "pure";
    } else if (rho.dims().d1 == 2 && rho.dims().d2 == 2) {
      method = "wootters";
    } else {
      method = "roof";
      err << "warning: no exact method for this state; the convex-roof value is an upper "
             "estimate of the concurrence\n";
    }
  }

  ConcurrenceValue c;
  if (method == "pure") {
    const auto value = pure_seed_concurrence(s);
    if (!value) throw DomainError("--method pure needs a rank-one state");
    c.value = *value;
    c.method = ConcurrenceMethod::PureFormula;
  } else if (method == "wootters") {
    c = wootters_concurrence(rho);
  } else if (method == "roof") {
    RoofOptions opt;
    opt.ensemble_size = a.roof_size > 0 ? a.roof_size : std::max(rank, 4);
    opt.restarts = a.restarts;
    opt.max_iters = a.max_iters;
    opt.seed = a.seed;
    c = convex_roof_estimate(rho, opt);
  } else {
    throw DomainError("unknown method '" + a.method + "'");
  }
  print(out, io::to_json(c));
  return kExitOk;
}

int cmd_bound_two_copy(const BoundArgs& a, std::ostream& out) {
  const io::StateFile s = io::read_state(a.state);
  const VariantChoice choice = parse_variant_choice(a.variant.empty() ? "best" : a.variant);
  const double c2 = two_copy_bound(s.density, choice);
  const std::string label = choice == VariantChoice::A   ? "A"
                            : choice == VariantChoice::B ? "B"
                                                         : "best";
  print(out, {{"variant", label},
              {"c_squared_bound", c2},
              {"c_bound", std::sqrt(std::max(0.0, c2))},
              {"vacuous", c2 <= 0.0}});
  return kExitOk;
}

int cmd_bound_witness(const BoundArgs& a, std::ostream& out) {
  const io::StateFile rho = io::read_state(a.state);
  const io::StateFile sigma = io::read_state(a.sigma);
  const Variant variant = parse_variant(a.variant.empty() ? "A" : a.variant);
  const Witness w = witness_for_seed(sigma, a.c_upper, variant);
  const double bound = witness_bound(rho.density, w);
  print(out, {{"bound", bound},
              {"clamped", std::max(0.0, bound)},
              {"vacuous", bound <= 0.0},
              {"variant", std::string(to_string(variant))},
              {"c_seed", w.c_seed}});
  return kExitOk;
}

int cmd_witness_build(const WitnessArgs& a, std::ostream& out) {
  const io::StateFile sigma = io::read_state(a.sigma);
  const Witness w = witness_for_seed(sigma, a.c_upper, parse_variant(a.variant));
  io::write_json_file(a.out, io::witness_to_json(w));
  print(out, {{"written", a.out}, {"c_seed", w.c_seed}, {"seed_is_pure", w.seed_is_pure}});
  return kExitOk;
}

int cmd_witness_optimize(const WitnessArgs& a, std::ostream& out) {
  const io::StateFile rho = io::read_state(a.state);
  OptimizeOptions opt;
  opt.variant = parse_variant(a.variant);
  opt.restarts = a.restarts;
  opt.max_iters = a.max_iters;
  opt.seed = a.seed;
  const OptimizeResult r = optimize_witness(rho.density, opt);
  io::write_json_file(a.out, io::witness_to_json(r.witness));
  Json j = io::to_json(r);
  j["written"] = a.out;
  print(out, j);
  return kExitOk;
}

int cmd_estimate(const EstimateArgs& a, std::ostream& out) {
  if (a.two_copy == !a.witness.empty()) {
    throw DomainError("exactly one of --witness or --two-copy is required");
  }
  const io::StateFile rho = io::read_state(a.state);
  Json j;
  if (a.two_copy) {
    const ShotEstimate e = estimate_two_copy_bound(rho.density, parse_variant(a.variant), a.shots, a.seed);
    j = io::to_json(e);
    j["bound_estimate"] = e.mean;
    j["bound_kind"] = "c_squared";
  } else {
    const Witness w = io::read_witness(a.witness);
    if (!(w.dims == rho.density.dims())) throw ShapeError("state and witness dimensions disagree");
    const ShotEstimate e = simulate_expectation(rho.density, w.op, a.shots, a.seed, "witness");
    j = io::to_json(e);
    j["bound_estimate"] = -e.mean;
    j["bound_kind"] = "c";
  }
  print(out, j);
  return kExitOk;
}

int cmd_report(const ReportArgs& a, std::ostream& out) {
  const io::StateFile rho = io::read_state(a.state);
  std::vector<PureState> seeds;
  for (const auto& path : a.seeds) {
    const io::StateFile s = io::read_state(path);
    if (s.pure) {
      seeds.push_back(*s.pure);
      continue;
    }
    const EigenEnsemble eig = eigen_ensemble(s.density);
    if (eig.rank() != 1) throw DomainError("report seeds must be pure states: '" + path + "'");
    seeds.emplace_back(s.density.dims(), ComplexVector(eig.vectors.col(0)));
  }
  ReportOptions opt;
  opt.with_roof = a.with_roof;
  opt.roof.restarts = a.restarts;
  opt.roof.seed = a.seed;
  opt.state_descriptor = a.state;
  print(out, io::to_json(bound_report(rho.density, seeds, opt)));
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lower bounds on the concurrence of bipartite quantum states", "qconc"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a state and write it as JSON");
  gen_cmd->add_option("--family", gen.family, "bell, werner, isotropic, random or separable")
      ->required()
      ->check(CLI::IsMember({"bell", "werner", "isotropic", "random", "separable"}));
  gen_cmd->add_option("--kind", gen.kind, "Bell vector: phi+, phi-, psi+ or psi-");
  gen_cmd->add_option("--p", gen.p, "Mixing parameter for werner/isotropic");
  gen_cmd->add_option("--dims", gen.dims, "Local dimensions d1 d2")->expected(2);
  gen_cmd->add_option("--rank", gen.rank, "Rank of a random mixed state (omit for pure)");
  gen_cmd->add_option("--terms", gen.terms, "Number of product terms for separable states");
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd->add_option("--out", gen.out, "Output file")->required();

  ConcurrenceArgs conc;
  auto* conc_cmd = app.add_subcommand("concurrence", "Evaluate or estimate the concurrence");
  conc_cmd->add_option("--state", conc.state)->required();
  conc_cmd->add_option("--method", conc.method, "auto, wootters, pure or roof")
      ->check(CLI::IsMember({"auto", "wootters", "pure", "roof"}));
  conc_cmd->add_option("--roof-size", conc.roof_size, "Ensemble size for the roof estimate");
  conc_cmd->add_option("--restarts", conc.restarts);
  conc_cmd->add_option("--max-iters", conc.max_iters);
  conc_cmd->add_option("--seed", conc.seed);

  auto* bound_cmd = app.add_subcommand("bound", "Evaluate a lower bound");
  bound_cmd->require_subcommand(1);
  BoundArgs two_copy;
  auto* two_copy_cmd = bound_cmd->add_subcommand("two-copy", "Two-copy bound on c^2");
  two_copy_cmd->add_option("--state", two_copy.state)->required();
  two_copy_cmd->add_option("--variant", two_copy.variant, "A, B or best (default best)");
  BoundArgs wb;
  auto* wb_cmd = bound_cmd->add_subcommand("witness", "Single-copy witness bound on c");
  wb_cmd->add_option("--state", wb.state)->required();
  wb_cmd->add_option("--sigma", wb.sigma, "Seed state")->required();
  wb_cmd->add_option("--c-upper", wb.c_upper, "Upper bound on c(sigma); required for mixed seeds");
  wb_cmd->add_option("--variant", wb.variant, "A or B (default A)");

  auto* witness_cmd = app.add_subcommand("witness", "Construct witnesses");
  witness_cmd->require_subcommand(1);
  WitnessArgs wbuild;
  auto* build_cmd = witness_cmd->add_subcommand("build", "Build W_sigma from a seed state");
  build_cmd->add_option("--sigma", wbuild.sigma)->required();
  build_cmd->add_option("--c-upper", wbuild.c_upper);
  build_cmd->add_option("--variant", wbuild.variant);
  build_cmd->add_option("--out", wbuild.out)->required();
  WitnessArgs wopt;
  auto* opt_cmd = witness_cmd->add_subcommand("optimize", "Optimize the witness over pure seeds");
  opt_cmd->add_option("--state", wopt.state)->required();
  opt_cmd->add_option("--restarts", wopt.restarts);
  opt_cmd->add_option("--max-iters", wopt.max_iters);
  opt_cmd->add_option("--seed", wopt.seed);
  opt_cmd->add_option("--variant", wopt.variant);
  opt_cmd->add_option("--out", wopt.out)->required();

  EstimateArgs est;
  auto* est_cmd = app.add_subcommand("estimate", "Finite-shot estimate of a bound");
  est_cmd->add_option("--state", est.state)->required();
  est_cmd->add_option("--witness", est.witness, "Witness file");
  est_cmd->add_flag("--two-copy", est.two_copy, "Measure 4V on two copies");
  est_cmd->add_option("--variant", est.variant);
  est_cmd->add_option("--shots", est.shots)->required()->check(CLI::PositiveNumber);
  est_cmd->add_option("--seed", est.seed);

  ReportArgs rep;
  auto* rep_cmd = app.add_subcommand("report", "All bounds and oracles for a state");
  rep_cmd->add_option("--state", rep.state)->required();
  rep_cmd->add_option("--seeds", rep.seeds, "Pure seed state files");
  rep_cmd->add_flag("--with-roof", rep.with_roof, "Include the convex-roof estimate");
  rep_cmd->add_option("--restarts", rep.restarts);
  rep_cmd->add_option("--seed", rep.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kExitBadInput;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen, out);
    if (*conc_cmd) return cmd_concurrence(conc, out, err);
    if (*two_copy_cmd) return cmd_bound_two_copy(two_copy, out);
    if (*wb_cmd) return cmd_bound_witness(wb, out);
    if (*build_cmd) return cmd_witness_build(wbuild, out);
    if (*opt_cmd) return cmd_witness_optimize(wopt, out);
    if (*est_cmd) return cmd_estimate(est, out);
    if (*rep_cmd) return cmd_report(rep, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const ConsistencyError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const ShapeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  err << "error: no command given\n";
  return kExitBadInput;
}

}  // namespace qconc::cli
