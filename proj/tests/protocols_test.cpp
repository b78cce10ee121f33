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
#include <complex>

#include <doctest.h>

#include "dickesim/algebra.hpp"
#include "dickesim/checks.hpp"
#include "dickesim/dicke.hpp"
#include "dickesim/rng.hpp"
#include "dickesim/types.hpp"

namespace {

using dickesim::complex_t;
using dickesim::gate_params;
using dickesim::symmetric_state;

constexpr double kHalfRoot2 = 0.70710678118654752440;

gate_params hadamard_gate() {
  return gate_params{complex_t{kHalfRoot2, 0.0}, complex_t{kHalfRoot2, 0.0}};
}

}  // namespace

TEST_CASE("removal round on the balanced two-qubit state, worked example") {
  // Input |D_2^1>, Hadamard parameters: success probability 1/2, success
  // state (|D_1^0> + |D_1^1>)/sqrt(2), failure state orthogonal to it.
  const symmetric_state psi = dickesim::dicke_state(2, 1);
  const dickesim::protocol1_split split =
      dickesim::protocol1_exact(psi, hadamard_gate());

  CHECK(split.success_probability == doctest::Approx(0.5).epsilon(1e-12));
  REQUIRE(split.success_state.n == 1);
  CHECK(std::abs(split.success_state.amps[0] - complex_t{kHalfRoot2, 0.0}) <=
        1e-12);
  CHECK(std::abs(split.success_state.amps[1] - complex_t{kHalfRoot2, 0.0}) <=
        1e-12);
  // The two branches are orthogonal unit states.
  const complex_t cross =
      dickesim::inner_product(split.success_state, split.failure_state);
  CHECK(std::abs(cross) <= 1e-12);
  CHECK(std::abs(dickesim::inner_product(split.failure_state,
                                         split.failure_state) -
                 complex_t{1.0, 0.0}) <= 1e-12);
}

TEST_CASE("growth round on a single excited qubit, worked example") {
  // Input |D_1^1>, Hadamard parameters: acceptance probability 3/4.
  const symmetric_state psi = dickesim::dicke_state(1, 1);
  const dickesim::protocol2_result grown =
      dickesim::protocol2_exact(psi, hadamard_gate());
  CHECK(grown.success_probability == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(grown.success_state.n == 2);
  CHECK(std::abs(dickesim::inner_product(grown.success_state,
                                         grown.success_state) -
                 complex_t{1.0, 0.0}) <= 1e-12);
}

TEST_CASE("growth success state is the normalized operator image") {
  dickesim::rng rand(21);
  for (int n = 1; n <= 5; ++n) {
    const symmetric_state psi = dickesim::random_state(n, rand);
    const gate_params g = dickesim::random_unit_gate(rand);
    const dickesim::protocol2_result grown = dickesim::protocol2_exact(psi, g);
    const symmetric_state image = dickesim::apply_p2(g, psi);
    const auto [unit, norm] = dickesim::normalize(image);
    // Appending a fresh qubit and projecting accepts with probability
    // ||P2 psi||^2 / (n + 1); the kept state is the normalized image.
    CHECK(grown.success_probability ==
          doctest::Approx(norm * norm / (n + 1)).epsilon(1e-10));
    CHECK(dickesim::fidelity(grown.success_state, unit) ==
          doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("sampled branches occur at the exact branch probabilities") {
  const symmetric_state psi = dickesim::dicke_state(2, 1);
  const gate_params g = hadamard_gate();
  dickesim::rng rand(12345);
  const int trials = 2000;
  int successes = 0;
  for (int t = 0; t < trials; ++t) {
    const dickesim::protocol_outcome out =
        dickesim::protocol1_sample(psi, g, rand);
    if (out.success) {
      ++successes;
      REQUIRE(out.state.has_value());
      CHECK(out.probability == doctest::Approx(0.5).epsilon(1e-10));
    } else {
      REQUIRE(out.state.has_value());  // removal failure keeps a state
    }
  }
  // Three-sigma window around p = 1/2 for 2000 draws: ~0.5 +/- 0.034.
  const double rate = static_cast<double>(successes) / trials;
  CHECK(rate > 0.5 - 3.0 * 0.0112);
  CHECK(rate < 0.5 + 3.0 * 0.0112);

  // Growth failures discard the register: no state is reported.
  const symmetric_state one = dickesim::dicke_state(1, 1);
  int grow_succ = 0;
  for (int t = 0; t < trials; ++t) {
    const dickesim::protocol_outcome out =
        dickesim::protocol2_sample(one, g, rand);
    if (out.success) {
      ++grow_succ;
      REQUIRE(out.state.has_value());
    } else {
      CHECK_FALSE(out.state.has_value());
      CHECK(out.probability == doctest::Approx(0.25).epsilon(1e-10));
    }
  }
  const double grow_rate = static_cast<double>(grow_succ) / trials;
  CHECK(grow_rate > 0.75 - 3.0 * 0.0097);
  CHECK(grow_rate < 0.75 + 3.0 * 0.0097);
}

TEST_CASE("a removal branch can have probability zero") {
  // Gate (1, 0) on |D_2^2>: the success branch removes an unexcited qubit,
  // but every qubit is excited.
  const symmetric_state top = dickesim::dicke_state(2, 2);
  const dickesim::protocol1_split split =
      dickesim::protocol1_exact(top, gate_params{complex_t{1.0, 0.0},
                                                 complex_t{0.0, 0.0}});
  CHECK(split.success_probability == doctest::Approx(0.0).epsilon(1e-15));
  // The zero-probability branch is reported as the (unnormalizable) zero
  // vector rather than an arbitrary unit state.
  double norm2 = 0.0;
  for (const complex_t& a : split.success_state.amps) norm2 += std::norm(a);
  CHECK(norm2 <= 1e-24);
}

TEST_CASE("protocol input validation") {
  const symmetric_state vac = dickesim::vacuum_state();
  CHECK_THROWS_AS(dickesim::protocol1_exact(vac, hadamard_gate()),
                  dickesim::domain_error);
  const gate_params bad{complex_t{1.0, 0.0}, complex_t{1.0, 0.0}};
  CHECK_THROWS_AS(dickesim::protocol1_exact(dickesim::dicke_state(1, 0), bad),
                  dickesim::domain_error);
  CHECK_THROWS_AS(dickesim::protocol2_exact(dickesim::dicke_state(1, 0), bad),
                  dickesim::domain_error);
  symmetric_state zero;
  zero.n = 1;
  zero.amps = {complex_t{0.0, 0.0}, complex_t{0.0, 0.0}};
  CHECK_THROWS_AS(dickesim::protocol1_exact(zero, hadamard_gate()),
                  dickesim::degenerate_error);
}

TEST_CASE("iterated rounds log the per-round probabilities") {
  dickesim::rng rand(31);
  const symmetric_state psi = dickesim::random_state(4, rand);
  const gate_params p1 = hadamard_gate();
  const gate_params p2 = hadamard_gate();

  const dickesim::iteration_log log = dickesim::iterate_composed(
      psi, p1, p2, 3, dickesim::run_mode::exact_postselect);
  CHECK(log.rounds_requested == 3);
  CHECK(log.rounds_completed == 3);
  REQUIRE(log.round_probabilities.size() == 3);
  double product = 1.0;
  for (const double p : log.round_probabilities) product *= p;
  CHECK(log.cumulative_probability ==
        doctest::Approx(product).epsilon(1e-12));
  CHECK_FALSE(log.failed);

  // Manual reproduction round by round.
  symmetric_state cur = dickesim::normalize(psi).first;
  for (int r = 0; r < 3; ++r) {
    const dickesim::protocol1_split split = dickesim::protocol1_exact(cur, p1);
    const dickesim::protocol2_result grown =
        dickesim::protocol2_exact(split.success_state, p2);
    CHECK(log.round_probabilities[static_cast<std::size_t>(r)] ==
          doctest::Approx(split.success_probability *
                          grown.success_probability)
              .epsilon(1e-12));
    cur = grown.success_state;
  }
  CHECK(dickesim::fidelity(log.final_state, cur) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("a zero-probability stage aborts an exact run") {
  // Gate (1, 0) removal on the all-excited state has success probability 0.
  const symmetric_state top = dickesim::dicke_state(2, 2);
  CHECK_THROWS_AS(
      dickesim::iterate_composed(top,
                                 gate_params{complex_t{1.0, 0.0},
                                             complex_t{0.0, 0.0}},
                                 hadamard_gate(), 1,
                                 dickesim::run_mode::exact_postselect),
      dickesim::degenerate_error);
}

TEST_CASE("sampled runs stop at the first failed stage") {
  dickesim::rng rand(99);
  const symmetric_state psi = dickesim::dicke_state(3, 1);
  bool saw_failure = false;
  for (int attempt = 0; attempt < 50 && !saw_failure; ++attempt) {
    const dickesim::iteration_log log =
        dickesim::iterate_composed(psi, hadamard_gate(), hadamard_gate(), 5,
                                   dickesim::run_mode::sampled, &rand);
    CHECK(log.rounds_requested == 5);
    if (log.failed) {
      saw_failure = true;
      CHECK(log.failure_round >= 1);
      CHECK(log.failure_round <= 5);
      CHECK(log.rounds_completed == log.failure_round - 1);
      CHECK((log.failure_stage == "removal" || log.failure_stage == "growth"));
      CHECK(log.round_probabilities.size() ==
            static_cast<std::size_t>(log.rounds_completed));
    } else {
      CHECK(log.rounds_completed == 5);
    }
  }
  CHECK(saw_failure);  // 50 runs of 5 Hadamard rounds: failure is certain.

  CHECK_THROWS_AS(
      dickesim::iterate_composed(psi, hadamard_gate(), hadamard_gate(), 2,
                                 dickesim::run_mode::sampled, nullptr),
      dickesim::domain_error);
}

TEST_CASE("the reversed round order matches the operator composition") {
  dickesim::rng rand(41);
  for (int trial = 0; trial < 10; ++trial) {
    const symmetric_state psi = dickesim::random_state(4, rand);
    const gate_params p1 = dickesim::random_unit_gate(rand);
    const gate_params p2 = dickesim::random_unit_gate(rand);

    const dickesim::iteration_log log = dickesim::iterate_composed(
        psi, p1, p2, 1, dickesim::run_mode::exact_postselect, nullptr,
        dickesim::round_order::grow_then_remove);

    // grow first, then remove: normalized P1 P2 |psi>.
    const symmetric_state grown = dickesim::apply_p2(p2, psi);
    const dickesim::maybe_state removed = dickesim::apply_p1(p1, grown);
    REQUIRE(removed.has_value());
    const symmetric_state expected = dickesim::normalize(*removed).first;
    CHECK(dickesim::fidelity(log.final_state, expected) ==
          doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("the asymptotic prediction matches long exact runs") {
  dickesim::rng rand(55);
  const gate_params p1 = hadamard_gate();
  const gate_params p2 = hadamard_gate();
  for (int trial = 0; trial < 5; ++trial) {
    const symmetric_state psi = dickesim::random_state(5, rand);
    const dickesim::asymptotic_prediction_result pred =
        dickesim::asymptotic_prediction(psi, p1, p2);
    CHECK(pred.k == 0);  // random states overlap the leading fixed point
    const dickesim::iteration_log log = dickesim::iterate_composed(
        psi, p1, p2, 120, dickesim::run_mode::exact_postselect);
    CHECK(dickesim::fidelity(log.final_state, pred.limit_state) ==
          doctest::Approx(1.0).epsilon(1e-8));
  }
}

TEST_CASE("round statistics agree with the full-register circuits") {
  dickesim::rng rand(61);
  CHECK(dickesim::check_protocol1_oracle_gap(5, 20, rand) <= 1e-10);
  CHECK(dickesim::check_protocol2_oracle_gap(5, 20, rand) <= 1e-10);
}
