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

#include <vector>

#include "dickesim/algebra.hpp"
#include "dickesim/dicke.hpp"
#include "dickesim/protocols.hpp"
#include "dickesim/rng.hpp"
#include "dickesim/types.hpp"

namespace dickesim {

// A growth-protocol program: running the steps in order from the vacuum
// reaches the compiled target ray (each step succeeding).  The factorization
// data behind the steps is kept for inspection: one finite polynomial root
// per generic step, plus `infinity_count` pure-(1,0) steps that account for
// the degree deficit of the target polynomial.
struct preparation_schedule {
  std::vector<gate_params> steps;  // each unit-norm (gamma, delta)
  std::vector<complex_t> finite_roots;
  int infinity_count = 0;
};

// The generating polynomial of a target state: coefficient i is
// amps[i] / sqrt(i! (n-i)!).  Growing the vacuum by (gamma, delta) factors
// multiplies this polynomial by (gamma - ... x) linear factors, which is why
// its roots drive the compiler.
std::vector<complex_t> target_polynomial(const symmetric_state& state);

// Roots of a complex-coefficient polynomial (coefficients in increasing
// degree order) via the balanced companion matrix, each polished by one
// Newton step.  Leading coefficients smaller than 1e-12 of the largest are
// treated as zero; the constant polynomial has no roots.
std::vector<complex_t> polynomial_roots(const std::vector<complex_t>& coeffs);

// Compiles a growth schedule for the (nonzero) target: factor the generating
// polynomial; a finite root x becomes the step
// (gamma, delta) = (-x, 1)/sqrt(1+|x|^2), and each missing degree becomes a
// (1, 0) step.  Throws degenerate_error on the zero vector.
preparation_schedule compile_schedule(const symmetric_state& target);

struct schedule_run {
  symmetric_state state;          // reached state (unit norm)
  double probability = 1.0;       // product of per-step success probabilities
  bool failed = false;            // sampled mode only
  int failure_step = 0;           // 1-based; 0 when no failure
};

// Runs the schedule from the vacuum.  Exact mode post-selects every step and
// reports the joint success probability; sampled mode (needs a generator)
// aborts at the first rejected step, returning the state reached so far.
schedule_run run_schedule(const preparation_schedule& schedule, run_mode mode,
                          rng* rand = nullptr);

}  // namespace dickesim
