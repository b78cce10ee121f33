// Copyright 2026 The dickesim Authors.
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

// Command-line front end.  Exit codes: 0 success, 1 input error, 2 numeric
// or tolerance failure, 3 sampled-protocol failure.

#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <Eigen/Dense>

#include "dickesim/algebra.hpp"
#include "dickesim/checks.hpp"
#include "dickesim/dicke.hpp"
#include "dickesim/json_io.hpp"
#include "dickesim/preparation.hpp"
#include "dickesim/protocols.hpp"
#include "dickesim/rng.hpp"
#include "dickesim/spectral.hpp"
#include "dickesim/types.hpp"

namespace {

using dickesim::complex_t;
using dickesim::gate_params;
using dickesim::json_value;
using dickesim::symmetric_state;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitNumeric = 2;
constexpr int kExitSampledFailure = 3;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw dickesim::parse_error("cannot open file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

symmetric_state load_state(const std::string& path) {
  return dickesim::state_from_json(slurp(path));
}

void emit(const json_value& doc, const std::string& out_path) {
  const std::string text = doc.dump();
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    throw dickesim::parse_error("cannot open output file: " + out_path);
  }
  out << text;
}

// A gate flag is 2 real tokens "a,b" or 4 tokens "are,aim,bre,bim".
// The pair must be unit-norm up to entry roundoff (1e-6); the exact
// remainder is normalized away.
gate_params parse_gate(const std::string& text, const std::string& flag) {
  std::vector<double> parts;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    try {
      std::size_t used = 0;
      const double value = std::stod(token, &used);
      while (used < token.size() &&
             std::isspace(static_cast<unsigned char>(token[used]))) {
        ++used;
      }
      if (used != token.size()) throw std::invalid_argument(token);
      parts.push_back(value);
    } catch (const std::exception&) {
      throw dickesim::parse_error(flag + ": bad number '" + token + "'");
    }
  }
  gate_params g;
  if (parts.size() == 2) {
    g.first = complex_t{parts[0], 0.0};
    g.second = complex_t{parts[1], 0.0};
  } else if (parts.size() == 4) {
    g.first = complex_t{parts[0], parts[1]};
    g.second = complex_t{parts[2], parts[3]};
  } else {
    throw dickesim::parse_error(
        flag + ": expected 2 or 4 comma-separated reals, got " +
        std::to_string(parts.size()));
  }
  const double total = std::norm(g.first) + std::norm(g.second);
  if (std::abs(total - 1.0) > 1e-6) {
    throw dickesim::parse_error(flag + ": gate is not unit-norm (|a|^2+|b|^2 = " +
                                dickesim::format_real(total) + ")");
  }
  const double scale = 1.0 / std::sqrt(total);
  g.first *= scale;
  g.second *= scale;
  return g;
}

json_value gate_to_value(const gate_params& g) {
  json_value arr = json_value::array();
  arr.push(json_value::complex_pair(g.first));
  arr.push(json_value::complex_pair(g.second));
  return arr;
}

struct seeded_rng {
  dickesim::rng gen;
  std::uint64_t seed = 0;
  std::string source;  // "flag" or "entropy"
};

seeded_rng make_rng(const std::optional<std::uint64_t>& seed_flag) {
  if (seed_flag.has_value()) {
    return seeded_rng{dickesim::rng(*seed_flag), *seed_flag, "flag"};
  }
  std::random_device device;
  const std::uint64_t seed =
      (static_cast<std::uint64_t>(device()) << 32) ^ device();
  return seeded_rng{dickesim::rng(seed), seed, "entropy"};
}

json_value rng_to_value(const seeded_rng& r) {
  json_value obj = json_value::object();
  obj.set("algorithm", json_value::string(dickesim::rng::algorithm_id));
  obj.set("seed", json_value::integer(static_cast<std::int64_t>(r.seed)));
  obj.set("seed_source", json_value::string(r.source));
  return obj;
}

int run_guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const dickesim::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const dickesim::dimension_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const dickesim::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const dickesim::size_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const dickesim::error& e) {
    // degenerate_error, spectral_error, numeric_error: the input was legal
    // but the computation hit a numeric wall.
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

// ---------------------------------------------------------------------------
// prepare

struct prepare_options {
  std::string state_path;
  std::string out_path;
  double threshold = 1.0 - 1e-8;
  bool sample = false;
  std::optional<std::uint64_t> seed;
};

int cmd_prepare(const prepare_options& opt) {
  const symmetric_state target = load_state(opt.state_path);
  const dickesim::preparation_schedule schedule =
      dickesim::compile_schedule(target);
  const dickesim::schedule_run exact =
      dickesim::run_schedule(schedule, dickesim::run_mode::exact_postselect);
  const double fid = dickesim::fidelity(exact.state, target);

  json_value doc = json_value::object();
  doc.set("format_version", json_value::integer(dickesim::kFormatVersion));
  doc.set("command", json_value::string("prepare"));
  doc.set("n", json_value::integer(target.n));

  json_value sched = json_value::object();
  sched.set("length",
            json_value::integer(static_cast<std::int64_t>(
                schedule.steps.size())));
  json_value steps = json_value::array();
  for (const gate_params& g : schedule.steps) steps.push(gate_to_value(g));
  sched.set("steps", std::move(steps));
  json_value roots = json_value::array();
  for (const complex_t& r : schedule.finite_roots) {
    roots.push(json_value::complex_pair(r));
  }
  sched.set("finite_roots", std::move(roots));
  sched.set("infinity_count", json_value::integer(schedule.infinity_count));
  doc.set("schedule", std::move(sched));

  doc.set("fidelity", json_value::number(fid));
  doc.set("cumulative_probability", json_value::number(exact.probability));
  doc.set("final_state", dickesim::state_to_value(exact.state));

  bool sampled_failed = false;
  if (opt.sample) {
    seeded_rng r = make_rng(opt.seed);
    const dickesim::schedule_run sampled = dickesim::run_schedule(
        schedule, dickesim::run_mode::sampled, &r.gen);
    json_value block = json_value::object();
    block.set("failed", json_value::boolean(sampled.failed));
    block.set("failure_step", json_value::integer(sampled.failure_step));
    block.set("probability", json_value::number(sampled.probability));
    block.set("reached_state", dickesim::state_to_value(sampled.state));
    block.set("rng", rng_to_value(r));
    doc.set("sampled", std::move(block));
    sampled_failed = sampled.failed;
  } else {
    doc.set("sampled", json_value::null());
  }

  emit(doc, opt.out_path);
  if (sampled_failed) return kExitSampledFailure;
  return fid >= opt.threshold ? kExitOk : kExitNumeric;
}

// ---------------------------------------------------------------------------
// simulate

struct simulate_options {
  std::string state_path;
  std::string out_path;
  std::string protocol = "both";
  std::string gate1 = "0.7071067811865476,0.7071067811865476";
  std::string gate2 = "0.7071067811865476,0.7071067811865476";
  std::string mode = "exact";
  std::string order = "remove-then-grow";
  int rounds = 1;
  std::optional<std::uint64_t> seed;
};

int cmd_simulate(const simulate_options& opt) {
  const symmetric_state input = load_state(opt.state_path);
  const gate_params g1 = parse_gate(opt.gate1, "--gate1");
  const gate_params g2 = parse_gate(opt.gate2, "--gate2");
  if (opt.rounds < 0) {
    throw dickesim::parse_error("--rounds must be >= 0");
  }
  const bool sampled = opt.mode == "sampled";
  if (!sampled && opt.mode != "exact") {
    throw dickesim::parse_error("--mode must be 'exact' or 'sampled'");
  }
  dickesim::round_order order = dickesim::round_order::remove_then_grow;
  if (opt.order == "grow-then-remove") {
    order = dickesim::round_order::grow_then_remove;
  } else if (opt.order != "remove-then-grow") {
    throw dickesim::parse_error(
        "--order must be 'remove-then-grow' or 'grow-then-remove'");
  }

  std::optional<seeded_rng> r;
  if (sampled) r = make_rng(opt.seed);

  json_value doc = json_value::object();
  doc.set("format_version", json_value::integer(dickesim::kFormatVersion));
  doc.set("command", json_value::string("simulate"));
  doc.set("protocol", json_value::string(opt.protocol));
  doc.set("mode", json_value::string(sampled ? "sampled" : "exact"));
  doc.set("rounds_requested", json_value::integer(opt.rounds));

  int completed = 0;
  std::vector<double> probabilities;
  double cumulative = 1.0;
  bool failed = false;
  int failure_round = 0;
  std::string failure_stage;
  symmetric_state current = dickesim::normalize(input).first;

  if (opt.protocol == "both") {
    const dickesim::iteration_log log = dickesim::iterate_composed(
        input, g1, g2, opt.rounds,
        sampled ? dickesim::run_mode::sampled
                : dickesim::run_mode::exact_postselect,
        r.has_value() ? &r->gen : nullptr, order);
    completed = log.rounds_completed;
    probabilities = log.round_probabilities;
    cumulative = log.cumulative_probability;
    failed = log.failed;
    failure_round = log.failure_round;
    failure_stage = log.failure_stage;
    current = log.final_state;
  } else if (opt.protocol == "1" || opt.protocol == "2") {
    const bool removal = opt.protocol == "1";
    for (int round = 1; round <= opt.rounds; ++round) {
      const gate_params& g = removal ? g1 : g2;
      if (sampled) {
        const dickesim::protocol_outcome outcome =
            removal ? dickesim::protocol1_sample(current, g, r->gen)
                    : dickesim::protocol2_sample(current, g, r->gen);
        if (!outcome.success) {
          failed = true;
          failure_round = round;
          failure_stage = removal ? "removal" : "growth";
          break;
        }
        probabilities.push_back(outcome.probability);
        cumulative *= outcome.probability;
        current = *outcome.state;
      } else if (removal) {
        const dickesim::protocol1_split split =
            dickesim::protocol1_exact(current, g);
        if (split.success_probability <= 0.0) {
          throw dickesim::degenerate_error(
              "simulate: removal succeeds with probability zero in round " +
              std::to_string(round));
        }
        probabilities.push_back(split.success_probability);
        cumulative *= split.success_probability;
        current = split.success_state;
      } else {
        const dickesim::protocol2_result grown =
            dickesim::protocol2_exact(current, g);
        probabilities.push_back(grown.success_probability);
        cumulative *= grown.success_probability;
        current = grown.success_state;
      }
      ++completed;
    }
  } else {
    throw dickesim::parse_error("--protocol must be 'both', '1' or '2'");
  }

  doc.set("rounds_completed", json_value::integer(completed));
  json_value probs = json_value::array();
  for (const double p : probabilities) probs.push(json_value::number(p));
  doc.set("round_probabilities", std::move(probs));
  doc.set("cumulative_probability", json_value::number(cumulative));
  doc.set("failed", json_value::boolean(failed));
  doc.set("failure_round", json_value::integer(failure_round));
  doc.set("failure_stage", json_value::string(failure_stage));
  doc.set("final_state", dickesim::state_to_value(current));
  if (r.has_value()) {
    doc.set("rng", rng_to_value(*r));
  } else {
    doc.set("rng", json_value::null());
  }

  emit(doc, opt.out_path);
  return failed ? kExitSampledFailure : kExitOk;
}

// ---------------------------------------------------------------------------
// fixed-points

struct fixed_points_options {
  std::string state_path;
  std::string out_path;
  std::string gate1 = "0.7071067811865476,0.7071067811865476";
  std::string gate2 = "0.7071067811865476,0.7071067811865476";
  int n = -1;
};

int cmd_fixed_points(const fixed_points_options& opt) {
  const gate_params g1 = parse_gate(opt.gate1, "--gate1");
  const gate_params g2 = parse_gate(opt.gate2, "--gate2");

  std::optional<symmetric_state> input;
  int n = opt.n;
  if (!opt.state_path.empty()) {
    input = load_state(opt.state_path);
    if (n >= 0 && n != input->n) {
      throw dickesim::parse_error("--n disagrees with the state file");
    }
    n = input->n;
  }
  if (n < 0) {
    throw dickesim::parse_error("pass --n or --state");
  }

  const dickesim::fixed_point_basis basis =
      dickesim::build_fixed_point_basis(n, g1, g2);
  const complex_t c = g1.first * g2.first + g1.second * g2.second;

  json_value doc = json_value::object();
  doc.set("format_version", json_value::integer(dickesim::kFormatVersion));
  doc.set("command", json_value::string("fixed-points"));
  doc.set("n", json_value::integer(n));
  doc.set("gate1", gate_to_value(g1));
  doc.set("gate2", gate_to_value(g2));
  doc.set("commutator_constant", json_value::complex_pair(c));

  json_value angles = json_value::object();
  angles.set("theta", json_value::complex_pair(basis.angles.theta));
  angles.set("phi", json_value::complex_pair(basis.angles.phi));
  doc.set("rotation_angles", std::move(angles));
  doc.set("used_fallback", json_value::boolean(basis.used_fallback));

  json_value eigs = json_value::array();
  for (const complex_t& lambda : basis.eigenvalues) {
    eigs.push(json_value::complex_pair(lambda));
  }
  doc.set("eigenvalues", std::move(eigs));

  json_value columns = json_value::array();
  for (int j = 0; j <= n; ++j) {
    json_value col = json_value::object();
    col.set("index", json_value::integer(j));
    col.set("eigenvalue", json_value::complex_pair(
                              basis.eigenvalues[static_cast<std::size_t>(j)]));
    json_value amps = json_value::array();
    for (int k = 0; k <= n; ++k) {
      amps.push(json_value::complex_pair(basis.basis(k, j)));
    }
    col.set("amplitudes", std::move(amps));
    columns.push(std::move(col));
  }
  doc.set("basis_columns", std::move(columns));

  const auto unitary = dickesim::unitary_case_gate(g1, g2);
  if (unitary.has_value()) {
    json_value block = json_value::object();
    block.set("mu", json_value::complex_pair(unitary->first));
    block.set("nu", json_value::complex_pair(unitary->second));
    doc.set("unitary_case", std::move(block));
  } else {
    doc.set("unitary_case", json_value::null());
  }

  if (input.has_value()) {
    const symmetric_state normalized = dickesim::normalize(*input).first;
    Eigen::VectorXcd psi(n + 1);
    for (int k = 0; k <= n; ++k) {
      psi(k) = normalized.amps[static_cast<std::size_t>(k)];
    }
    const Eigen::VectorXcd chi = basis.basis.partialPivLu().solve(psi);
    json_value chi_arr = json_value::array();
    for (int k = 0; k <= n; ++k) {
      chi_arr.push(json_value::complex_pair(chi(k)));
    }
    doc.set("state_coefficients", std::move(chi_arr));

    const dickesim::asymptotic_prediction_result prediction =
        dickesim::asymptotic_prediction(*input, g1, g2);
    json_value pred = json_value::object();
    pred.set("k", json_value::integer(prediction.k));
    pred.set("limit_state",
             dickesim::state_to_value(prediction.limit_state));
    doc.set("prediction", std::move(pred));
  }

  emit(doc, opt.out_path);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// transform

struct transform_options {
  std::string state_path;
  std::string out_path;
};

int cmd_transform(const transform_options& opt) {
  const symmetric_state input = load_state(opt.state_path);
  const symmetric_state output = dickesim::hadamard_transform(input);
  emit(dickesim::state_to_value(output), opt.out_path);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

struct verify_options {
  std::string suite = "all";
  std::string out_path;
  std::string tolerance_file;
  int max_n = 8;
  std::optional<double> global_tolerance;
  std::optional<std::uint64_t> seed;
};

json_value report_to_value(const dickesim::check_report& report) {
  json_value obj = json_value::object();
  obj.set("suite", json_value::string(report.suite));
  json_value arr = json_value::array();
  for (const dickesim::check_result& check : report.checks) {
    json_value entry = json_value::object();
    entry.set("name", json_value::string(check.name));
    entry.set("residual", json_value::number(check.residual));
    entry.set("tolerance", json_value::number(check.tolerance));
    entry.set("pass", json_value::boolean(check.pass));
    arr.push(std::move(entry));
  }
  obj.set("checks", std::move(arr));
  obj.set("pass", json_value::boolean(report.pass));
  return obj;
}

int cmd_verify(const verify_options& opt) {
  if (opt.suite != "all" && opt.suite != "algebra" && opt.suite != "scheme" &&
      opt.suite != "qpe") {
    throw dickesim::parse_error(
        "--suite must be one of: all, algebra, scheme, qpe");
  }
  if (opt.max_n < 1) {
    throw dickesim::parse_error("--max-n must be >= 1");
  }

  dickesim::tolerance_table tols;
  if (const char* env = std::getenv("DICKESIM_TOLERANCES");
      env != nullptr && *env != '\0') {
    tols.merge(dickesim::tolerance_table::from_json(slurp(env)));
  }
  if (!opt.tolerance_file.empty()) {
    tols.merge(
        dickesim::tolerance_table::from_json(slurp(opt.tolerance_file)));
  }
  if (opt.global_tolerance.has_value()) {
    tols.set_global(*opt.global_tolerance);
  }

  seeded_rng r = make_rng(opt.seed);

  std::vector<dickesim::check_report> reports;
  if (opt.suite == "all" || opt.suite == "algebra") {
    reports.push_back(dickesim::run_algebra_checks(opt.max_n, r.gen, tols));
  }
  if (opt.suite == "all" || opt.suite == "scheme") {
    reports.push_back(dickesim::run_scheme_checks(opt.max_n, tols));
  }
  if (opt.suite == "all" || opt.suite == "qpe") {
    reports.push_back(dickesim::run_qpe_checks(r.gen, tols));
  }

  bool all_pass = true;
  json_value doc = json_value::object();
  doc.set("format_version", json_value::integer(dickesim::kFormatVersion));
  doc.set("command", json_value::string("verify"));
  doc.set("suite", json_value::string(opt.suite));
  doc.set("max_n", json_value::integer(opt.max_n));
  doc.set("rng", rng_to_value(r));
  json_value arr = json_value::array();
  for (const dickesim::check_report& report : reports) {
    if (!report.pass) all_pass = false;
    arr.push(report_to_value(report));
  }
  doc.set("suites", std::move(arr));
  doc.set("pass", json_value::boolean(all_pass));

  emit(doc, opt.out_path);
  return all_pass ? kExitOk : kExitNumeric;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Symmetric-subspace simulator for one-qubit removal and growth "
      "protocols on permutation-invariant states"};
  app.require_subcommand(1);

  prepare_options prep;
  CLI::App* prepare_cmd = app.add_subcommand(
      "prepare", "Compile and run a growth schedule targeting a state");
  prepare_cmd->add_option("state", prep.state_path, "Target state JSON file")
      ->required();
  prepare_cmd->add_option("--threshold", prep.threshold,
                          "Fidelity below this exits with code 2");
  prepare_cmd->add_flag("--sample", prep.sample,
                        "Also run the schedule in sampled mode");
  std::uint64_t prep_seed = 0;
  CLI::Option* prep_seed_opt =
      prepare_cmd->add_option("--seed", prep_seed, "Sampling seed");
  prepare_cmd->add_option("--out", prep.out_path, "Write JSON here");

  simulate_options sim;
  CLI::App* simulate_cmd = app.add_subcommand(
      "simulate", "Run removal/growth protocol rounds on a state");
  simulate_cmd->add_option("state", sim.state_path, "Input state JSON file")
      ->required();
  simulate_cmd->add_option("--protocol", sim.protocol,
                           "Which protocol to run: both, 1 or 2");
  simulate_cmd->add_option("--rounds", sim.rounds, "Number of rounds");
  simulate_cmd->add_option("--gate1", sim.gate1,
                           "Removal gate (alpha, beta) as 2 or 4 reals");
  simulate_cmd->add_option("--gate2", sim.gate2,
                           "Growth gate (gamma, delta) as 2 or 4 reals");
  simulate_cmd->add_option("--mode", sim.mode, "exact or sampled");
  simulate_cmd->add_option(
      "--order", sim.order,
      "Composed-round order: remove-then-grow or grow-then-remove");
  std::uint64_t sim_seed = 0;
  CLI::Option* sim_seed_opt =
      simulate_cmd->add_option("--seed", sim_seed, "Sampling seed");
  simulate_cmd->add_option("--out", sim.out_path, "Write JSON here");

  fixed_points_options fp;
  CLI::App* fixed_cmd = app.add_subcommand(
      "fixed-points", "Eigenbasis of the composed one-round map");
  fixed_cmd->add_option("--n", fp.n, "Qubit count");
  fixed_cmd->add_option("--state", fp.state_path,
                        "Also decompose this state over the basis");
  fixed_cmd->add_option("--gate1", fp.gate1, "Removal gate");
  fixed_cmd->add_option("--gate2", fp.gate2, "Growth gate");
  fixed_cmd->add_option("--out", fp.out_path, "Write JSON here");

  transform_options tr;
  CLI::App* transform_cmd = app.add_subcommand(
      "transform", "Apply the symmetric-subspace Hadamard transform");
  transform_cmd->add_option("state", tr.state_path, "Input state JSON file")
      ->required();
  transform_cmd->add_option("--out", tr.out_path, "Write JSON here");

  verify_options ver;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Run the invariant suites and report residuals");
  verify_cmd->add_option("--suite", ver.suite, "all, algebra, scheme or qpe");
  verify_cmd->add_option("--max-n", ver.max_n, "Largest qubit count swept");
  double global_tol = 0.0;
  CLI::Option* tol_opt = verify_cmd->add_option(
      "--tolerance", global_tol, "Global tolerance override for every check");
  verify_cmd->add_option("--tolerances", ver.tolerance_file,
                         "JSON file of per-check tolerance overrides");
  std::uint64_t ver_seed = 0;
  CLI::Option* ver_seed_opt =
      verify_cmd->add_option("--seed", ver_seed, "Seed for the random draws");
  verify_cmd->add_option("--out", ver.out_path, "Write JSON here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  if (prep_seed_opt->count() > 0) prep.seed = prep_seed;
  if (sim_seed_opt->count() > 0) sim.seed = sim_seed;
  if (ver_seed_opt->count() > 0) ver.seed = ver_seed;
  if (tol_opt->count() > 0) ver.global_tolerance = global_tol;

  if (prepare_cmd->parsed()) {
    return run_guarded([&] { return cmd_prepare(prep); });
  }
  if (simulate_cmd->parsed()) {
    return run_guarded([&] { return cmd_simulate(sim); });
  }
  if (fixed_cmd->parsed()) {
    return run_guarded([&] { return cmd_fixed_points(fp); });
  }
  if (transform_cmd->parsed()) {
    return run_guarded([&] { return cmd_transform(tr); });
  }
  if (verify_cmd->parsed()) {
    return run_guarded([&] { return cmd_verify(ver); });
  }
  std::cerr << "error: no subcommand\n";
  return kExitInput;
}
