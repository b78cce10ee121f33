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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dickesim/algebra.hpp"
#include "dickesim/dicke.hpp"
#include "dickesim/rng.hpp"
#include "dickesim/types.hpp"

namespace dickesim {

// Protocol 1 removes one qubit: a single-qubit gate parameterized by
// (alpha, beta) is applied to one qubit of a symmetric n-qubit state and
// that qubit is measured; reading 0 is a success and leaves a symmetric
// (n-1)-qubit state.  Protocol 2 grows by one qubit: a fresh qubit is
// prepared in gamma|0> + delta|1> and the (n+1)-qubit state is projected
// onto its symmetric subspace; landing there is the success.
//
// Gates must be unit-norm (|a|^2 + |b|^2 = 1 within 1e-12) and input states
// are treated as rays: probabilities always refer to the normalized input.

// Both branches of the removal protocol.  When a branch has probability
// zero its state is the zero vector of the (n-1)-qubit space, flagged
// unnormalized; otherwise branch states are unit norm.
struct protocol1_split {
  double success_probability = 0.0;
  symmetric_state success_state;
  symmetric_state failure_state;
};

struct protocol2_result {
  double success_probability = 0.0;
  symmetric_state success_state;
};

// One sampled protocol run.  `probability` is the probability of the branch
// that was realized.  `state` is absent only when the realized branch has no
// symmetric-subspace description (the growth protocol's failure branch, which
// the protocol discards).
struct protocol_outcome {
  bool success = false;
  double probability = 0.0;
  std::optional<symmetric_state> state;
};

// Throws domain_error on the vacuum (no qubit to remove) or a non-unit gate,
// degenerate_error on the zero vector.
protocol1_split protocol1_exact(const symmetric_state& state,
                                const gate_params& g);

protocol2_result protocol2_exact(const symmetric_state& state,
                                 const gate_params& g);

protocol_outcome protocol1_sample(const symmetric_state& state,
                                  const gate_params& g, rng& rand);

protocol_outcome protocol2_sample(const symmetric_state& state,
                                  const gate_params& g, rng& rand);

// Whether a composed round removes a qubit first and then grows one back
// (the default), or the reverse.  Both preserve the qubit count; they differ
// by a multiple of the identity in the induced linear map, so they share
// fixed points but converge at different rates.
enum class round_order { remove_then_grow, grow_then_remove };

enum class run_mode { exact_postselect, sampled };

struct iteration_log {
  int rounds_requested = 0;
  int rounds_completed = 0;
  // Joint success probability of each completed round (both stages).
  std::vector<double> round_probabilities;
  // Product of the entries above.
  double cumulative_probability = 1.0;
  // State after the last completed round (the input state when none
  // completed), unit norm.
  symmetric_state final_state;
  // Sampled mode only: set when a stage failed and the run was aborted.
  bool failed = false;
  int failure_round = 0;        // 1-based; 0 when no failure
  std::string failure_stage;    // "removal" or "growth"; empty when none
  // Sampled mode only: how the randomness was produced.
  std::string rng_algorithm;
  std::uint64_t rng_seed = 0;
};

// Runs `rounds` composed rounds on the (normalized) input state.
// In exact_postselect mode every stage takes its success branch and the
// probabilities are logged; a success branch of probability zero aborts with
// a degenerate_error naming the round.  In sampled mode (which requires a
// generator) stages are sampled and the first failure ends the run with a
// partial log.
iteration_log iterate_composed(const symmetric_state& state,
                               const gate_params& p1, const gate_params& p2,
                               int rounds, run_mode mode, rng* rand = nullptr,
                               round_order order = round_order::remove_then_grow);

struct asymptotic_prediction_result {
  // Index of the fixed point the iteration converges to: the first
  // fixed-point-basis component the input state overlaps.
  int k = 0;
  symmetric_state limit_state;
};

// Predicts the limit ray of iterate_composed without iterating, by
// decomposing the input over the fixed-point basis of the composed map.
// Components with |coefficient| <= chi_tol are treated as absent.
asymptotic_prediction_result asymptotic_prediction(const symmetric_state& state,
                                                   const gate_params& p1,
                                                   const gate_params& p2,
                                                   double chi_tol = 1e-12);

}  // namespace dickesim
