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

#include "dickesim/protocols.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "dickesim/spectral.hpp"

namespace dickesim {

namespace {

symmetric_state zero_state(int n) {
  symmetric_state s;
  s.n = n;
  s.amps.assign(static_cast<std::size_t>(n) + 1, complex_t(0.0));
  s.normalized = false;
  return s;
}

// Normalizes a branch whose squared norm is already known; zero-probability
// branches stay the zero vector.
symmetric_state settle_branch(symmetric_state branch, double prob) {
  if (prob <= 0.0) return branch;
  const double scale = 1.0 / std::sqrt(prob);
  for (complex_t& a : branch.amps) a *= scale;
  branch.normalized = true;
  return branch;
}

}  // namespace

protocol1_split protocol1_exact(const symmetric_state& state,
                                const gate_params& g) {
  require_unit_gate(g, "protocol1");
  if (state.n < 1) {
    throw domain_error("protocol1: no qubit to remove from the vacuum");
  }
  const symmetric_state psi = normalize(state).first;
  const int n = psi.n;
  const double root_n = std::sqrt(static_cast<double>(n));
  const complex_t alpha = g.first;
  const complex_t beta = g.second;

  // Measuring the gated qubit splits the state into two symmetric
  // (n-1)-qubit branches; reading 0 keeps the first.
  symmetric_state success = zero_state(n - 1);
  symmetric_state failure = zero_state(n - 1);
  for (int i = 0; i < n; ++i) {
    const double low = std::sqrt(static_cast<double>(n - i)) / root_n;
    const double high = std::sqrt(static_cast<double>(i + 1)) / root_n;
    success.amps[i] = alpha * low * psi.amps[i] + beta * high * psi.amps[i + 1];
    failure.amps[i] = std::conj(beta) * low * psi.amps[i] -
                      std::conj(alpha) * high * psi.amps[i + 1];
  }

  protocol1_split split;
  double p = 0.0;
  for (const complex_t& a : success.amps) p += std::norm(a);
  split.success_probability = p;
  split.success_state = settle_branch(std::move(success), p);
  split.failure_state = settle_branch(std::move(failure), 1.0 - p);
  return split;
}

protocol2_result protocol2_exact(const symmetric_state& state,
                                 const gate_params& g) {
  require_unit_gate(g, "protocol2");
  const symmetric_state psi = normalize(state).first;
  const symmetric_state grown = apply_p2(g, psi);

  protocol2_result result;
  double p = 0.0;
  for (const complex_t& a : grown.amps) p += std::norm(a);
  p /= static_cast<double>(psi.n + 1);
  result.success_probability = p;

  symmetric_state success = grown;
  const double scale = 1.0 / std::sqrt(static_cast<double>(psi.n + 1));
  for (complex_t& a : success.amps) a *= scale;
  result.success_state = settle_branch(std::move(success), p);
  return result;
}

protocol_outcome protocol1_sample(const symmetric_state& state,
                                  const gate_params& g, rng& rand) {
  const protocol1_split split = protocol1_exact(state, g);
  protocol_outcome out;
  if (rand.bernoulli(split.success_probability)) {
    out.success = true;
    out.probability = split.success_probability;
    out.state = split.success_state;
  } else {
    out.success = false;
    out.probability = 1.0 - split.success_probability;
    out.state = split.failure_state;
  }
  return out;
}

protocol_outcome protocol2_sample(const symmetric_state& state,
                                  const gate_params& g, rng& rand) {
  const protocol2_result result = protocol2_exact(state, g);
  protocol_outcome out;
  if (rand.bernoulli(result.success_probability)) {
    out.success = true;
    out.probability = result.success_probability;
    out.state = result.success_state;
  } else {
    // The rejected branch leaves the symmetric subspace and is discarded.
    out.success = false;
    out.probability = 1.0 - result.success_probability;
    out.state = std::nullopt;
  }
  return out;
}

namespace {

struct stage_result {
  bool success = true;
  double probability = 1.0;
  symmetric_state state;
};

stage_result run_removal(const symmetric_state& state, const gate_params& g,
                         run_mode mode, rng* rand, int round) {
  if (state.n < 1) {
    throw degenerate_error("iterate_composed: state annihilated in round " +
                           std::to_string(round));
  }
  const protocol1_split split = protocol1_exact(state, g);
  if (mode == run_mode::exact_postselect) {
    if (split.success_probability <= 0.0) {
      throw degenerate_error("iterate_composed: state annihilated in round " +
                             std::to_string(round));
    }
    return {true, split.success_probability, split.success_state};
  }
  const bool ok = rand->bernoulli(split.success_probability);
  if (!ok) return {false, split.success_probability, split.failure_state};
  return {true, split.success_probability, split.success_state};
}

stage_result run_growth(const symmetric_state& state, const gate_params& g,
                        run_mode mode, rng* rand, int round) {
  const protocol2_result result = protocol2_exact(state, g);
  if (mode == run_mode::exact_postselect) {
    if (result.success_probability <= 0.0) {
      throw degenerate_error("iterate_composed: state annihilated in round " +
                             std::to_string(round));
    }
    return {true, result.success_probability, result.success_state};
  }
  const bool ok = rand->bernoulli(result.success_probability);
  if (!ok) return {false, result.success_probability, {}};
  return {true, result.success_probability, result.success_state};
}

}  // namespace

iteration_log iterate_composed(const symmetric_state& state,
                               const gate_params& p1, const gate_params& p2,
                               int rounds, run_mode mode, rng* rand,
                               round_order order) {
  if (rounds < 0) throw domain_error("iterate_composed: negative round count");
  if (mode == run_mode::sampled && rand == nullptr) {
    throw domain_error("iterate_composed: sampled mode needs a generator");
  }
  require_unit_gate(p1, "iterate_composed (removal gate)");
  require_unit_gate(p2, "iterate_composed (growth gate)");

  iteration_log log;
  log.rounds_requested = rounds;
  log.final_state = normalize(state).first;
  if (mode == run_mode::sampled) {
    log.rng_algorithm = rng::algorithm_id;
    log.rng_seed = rand->seed();
  }

  for (int round = 1; round <= rounds; ++round) {
    symmetric_state current = log.final_state;
    double joint = 1.0;
    for (int stage = 0; stage < 2; ++stage) {
      const bool removal_stage =
          (order == round_order::remove_then_grow) == (stage == 0);
      const stage_result result =
          removal_stage ? run_removal(current, p1, mode, rand, round)
                        : run_growth(current, p2, mode, rand, round);
      joint *= result.probability;
      if (!result.success) {
        log.failed = true;
        log.failure_round = round;
        log.failure_stage = removal_stage ? "removal" : "growth";
        return log;
      }
      current = result.state;
    }
    log.final_state = current;
    log.round_probabilities.push_back(joint);
    log.cumulative_probability *= joint;
    log.rounds_completed = round;
  }
  return log;
}

asymptotic_prediction_result asymptotic_prediction(const symmetric_state& state,
                                                   const gate_params& p1,
                                                   const gate_params& p2,
                                                   double chi_tol) {
  const symmetric_state psi = normalize(state).first;
  const fixed_point_basis basis = build_fixed_point_basis(psi.n, p1, p2);

  Eigen::VectorXcd vec(psi.n + 1);
  for (int i = 0; i <= psi.n; ++i) vec(i) = psi.amps[static_cast<std::size_t>(i)];
  const Eigen::VectorXcd chi = basis.basis.partialPivLu().solve(vec);

  // Eigenvalue magnitudes strictly decrease with the column index, so the
  // first overlapped component dominates the iteration.
  int k = -1;
  for (int i = 0; i <= psi.n; ++i) {
    if (std::abs(chi(i)) > chi_tol) {
      k = i;
      break;
    }
  }
  if (k < 0) {
    throw degenerate_error(
        "asymptotic_prediction: state has no fixed-point component");
  }

  asymptotic_prediction_result result;
  result.k = k;
  symmetric_state limit;
  limit.n = psi.n;
  limit.amps.resize(static_cast<std::size_t>(psi.n) + 1);
  for (int i = 0; i <= psi.n; ++i) limit.amps[static_cast<std::size_t>(i)] = basis.basis(i, k);
  limit.normalized = true;
  result.limit_state = std::move(limit);
  return result;
}

}  // namespace dickesim
