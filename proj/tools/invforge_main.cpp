// Copyright 2026 The invforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// invforge command-line interface. Every subcommand writes JSON to stdout or
// --out. Exit codes: 0 success, 2 distinguished / check failed, 1 error.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "invforge/equivalence.hpp"
#include "invforge/errors.hpp"
#include "invforge/io.hpp"
#include "invforge/lu.hpp"
#include "invforge/sl.hpp"

namespace {

using namespace invforge;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNegative = 2;

struct Common {
  std::size_t workers = 1;
  std::string out;

  ComputeOptions compute() const {
    ComputeOptions o;
    o.workers = workers;
    return o;
  }
  std::optional<std::string> out_path() const {
    return out.empty() ? std::nullopt : std::optional<std::string>(out);
  }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--workers", c.workers, "Worker threads for product spans")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--out", c.out, "Write JSON here instead of stdout");
}

// A state file, or a density-matrix file purified onto an extra party.
StateVector load_state(const std::string& path, unsigned ancilla) {
  const Json j = read_json_file(path);
  if (j.is_object() && j.contains("amplitudes")) return state_from_json(j);
  if (j.is_object() && j.contains("entries")) {
    const DensityMatrix rho = density_from_json(j);
    const auto a = ancilla != 0 ? ancilla : static_cast<unsigned>(rho.dim());
    return purify(rho, a);
  }
  throw ParseError("'" + path + "' holds neither a state nor a density matrix");
}

int verdict_exit(const Verdict& v) {
  return v.kind == VerdictKind::Distinguished ? kExitNegative : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polynomial invariants and degree-bounded equivalence of multipartite states"};
  app.require_subcommand(1);
  int status = kExitOk;

  // lu-basis
  Common lu_c;
  std::string lu_shape;
  unsigned lu_m = 1;
  auto* lu = app.add_subcommand("lu-basis", "Canonical basis of the degree-2m LU invariants");
  lu->add_option("--shape", lu_shape, "Local dimensions, e.g. 2,2,2")->required();
  lu->add_option("--half-degree", lu_m, "m")->required()->check(CLI::PositiveNumber);
  add_common(lu, lu_c);
  lu->callback([&] {
    const auto b = luip_space(SystemShape::parse(lu_shape), lu_m, lu_c.compute());
    write_output(to_json(b), lu_c.out_path());
  });

  // slip-basis
  Common sl_c;
  std::string sl_shape;
  unsigned sl_k = 1;
  auto* sl = app.add_subcommand("slip-basis", "Canonical basis of the degree-k SL invariants");
  sl->add_option("--shape", sl_shape, "Local dimensions")->required();
  sl->add_option("--degree", sl_k, "k")->required()->check(CLI::PositiveNumber);
  add_common(sl, sl_c);
  sl->callback([&] {
    const auto b = slip_space(SystemShape::parse(sl_shape), sl_k, sl_c.compute());
    write_output(to_json(b), sl_c.out_path());
  });

  // sluip-basis
  Common slu_c;
  std::string slu_shape;
  unsigned slu_anc = 2, slu_m = 1;
  auto* slu = app.add_subcommand(
      "sluip-basis", "Canonical basis of SL x U invariants on a purified system");
  slu->add_option("--shape", slu_shape, "Local dimensions of the SL parties")->required();
  slu->add_option("--ancilla", slu_anc, "Dimension of the unitary party")
      ->required()
      ->check(CLI::Range(2u, 1u << 16));
  slu->add_option("--half-degree", slu_m, "m")->required()->check(CLI::PositiveNumber);
  add_common(slu, slu_c);
  slu->callback([&] {
    const auto shape = SystemShape::parse(slu_shape).with_party(slu_anc);
    write_output(to_json(sluip_space(shape, slu_m, slu_c.compute())), slu_c.out_path());
  });

  // fingerprint
  Common fp_c;
  std::string fp_state;
  unsigned fp_m = 1;
  bool fp_exact = false;
  auto* fp = app.add_subcommand("fingerprint", "Normalized LU invariant values of a state");
  fp->add_option("--state", fp_state, "State JSON")->required();
  fp->add_option("--max-half-degree", fp_m, "M")->required()->check(CLI::PositiveNumber);
  fp->add_flag("--exact", fp_exact, "Exact evaluation (requires exact amplitudes)");
  add_common(fp, fp_c);
  fp->callback([&] {
    const StateVector s = load_state(fp_state, 0);
    const Mode mode = fp_exact ? Mode::Exact : Mode::Float;
    write_output(to_json(fingerprint(s, fp_m, mode, fp_c.compute())), fp_c.out_path());
  });

  // compare
  Common cmp_c;
  std::string cmp_a, cmp_b, cmp_group = "lu";
  unsigned cmp_m = 1, cmp_anc = 0;
  double cmp_tol = 1e-9;
  auto* cmp = app.add_subcommand("compare", "Degree-bounded comparison of two states");
  cmp->add_option("--a", cmp_a, "State or density-matrix JSON")->required();
  cmp->add_option("--b", cmp_b, "State or density-matrix JSON")->required();
  cmp->add_option("--max-half-degree", cmp_m, "M; SL compares degrees 1..2M")
      ->required()
      ->check(CLI::PositiveNumber);
  cmp->add_option("--group", cmp_group, "lu or sl")->check(CLI::IsMember({"lu", "sl"}));
  cmp->add_option("--tol", cmp_tol, "Relative float tolerance")->check(CLI::PositiveNumber);
  cmp->add_option("--ancilla", cmp_anc, "Purification ancilla for density inputs (default dim)");
  add_common(cmp, cmp_c);
  cmp->callback([&] {
    const StateVector a = load_state(cmp_a, cmp_anc);
    const StateVector b = load_state(cmp_b, cmp_anc);
    const Mode mode = common_mode(a, b);
    const Tolerance tol{cmp_tol, 1e-12};
    Verdict v;
    if (cmp_group == "lu") {
      v = compare_lu(a, b, cmp_m, mode, tol, cmp_c.compute());
    } else {
      std::vector<unsigned> degrees;
      for (unsigned k = 1; k <= 2 * cmp_m; ++k) degrees.push_back(k);
      const auto bases = slip_bases(a.shape(), degrees, cmp_c.compute());
      v = sl_projective_compare(bases, a, b, mode, tol);
    }
    write_output(to_json(v), cmp_c.out_path());
    status = verdict_exit(v);
  });

  // bound
  Common bd_c;
  std::string bd_group, bd_shape;
  auto* bd = app.add_subcommand("bound", "Degree bound for generating the invariant ring");
  bd->add_option("--group", bd_group, "lu or sl")->required()->check(CLI::IsMember({"lu", "sl"}));
  bd->add_option("--shape", bd_shape, "Local dimensions")->required();
  add_common(bd, bd_c);
  bd->callback([&] {
    const auto shape = SystemShape::parse(bd_shape);
    const Group g = parse_group(bd_group);
    const DegreeBound b = g == Group::Lu ? lu_degree_bound(shape) : sl_degree_bound(shape);
    write_output(bound_to_json(g, shape, b), bd_c.out_path());
  });

  // check-invariance
  Common ci_c;
  std::string ci_basis;
  InvarianceOptions ci_opts;
  auto* ci = app.add_subcommand("check-invariance", "Numeric invariance check of a basis file");
  ci->add_option("--basis", ci_basis, "Basis JSON")->required();
  ci->add_option("--trials", ci_opts.trials, "Random group elements")->required();
  ci->add_option("--seed", ci_opts.seed, "Seed")->required();
  ci->add_option("--tol", ci_opts.tol, "Max relative deviation")
      ->required()
      ->check(CLI::PositiveNumber);
  ci->add_option("--states-per-trial", ci_opts.states_per_trial, "Random states per element")
      ->check(CLI::PositiveNumber);
  add_common(ci, ci_c);
  ci->callback([&] {
    const InvariantBasis b = basis_from_json(read_json_file(ci_basis));
    ci_opts.group = b.group;
    const auto polys = b.polys();
    const auto r = numeric_invariance_check(polys, b.shape, ci_opts);
    write_output(to_json(r), ci_c.out_path());
    status = r.passed ? kExitOk : kExitNegative;
  });

  // channel-compare
  Common ch_c;
  std::string ch_a, ch_b;
  unsigned ch_m = 1;
  double ch_tol = 1e-9;
  auto* ch = app.add_subcommand("channel-compare", "Degree-bounded comparison of two channels");
  ch->add_option("--a", ch_a, "Channel JSON")->required();
  ch->add_option("--b", ch_b, "Channel JSON")->required();
  ch->add_option("--max-half-degree", ch_m, "M")->required()->check(CLI::PositiveNumber);
  ch->add_option("--tol", ch_tol, "Relative float tolerance")->check(CLI::PositiveNumber);
  add_common(ch, ch_c);
  ch->callback([&] {
    const KrausChannel e = channel_from_json(read_json_file(ch_a));
    const KrausChannel f = channel_from_json(read_json_file(ch_b));
    const Verdict v = channel_compare(e, f, ch_m, Tolerance{ch_tol, 1e-12}, ch_c.compute());
    write_output(to_json(v), ch_c.out_path());
    status = verdict_exit(v);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  } catch (const invforge::Error& e) {
    std::cerr << "invforge: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "invforge: internal error: " << e.what() << "\n";
    return kExitError;
  }
  return status;
}
