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

#include "dickesim/oracle.hpp"

#include <cmath>
#include <complex>

#include <doctest.h>

#include "dickesim/algebra.hpp"
#include "dickesim/checks.hpp"
#include "dickesim/dicke.hpp"
#include "dickesim/protocols.hpp"
#include "dickesim/rng.hpp"
#include "dickesim/types.hpp"

namespace {

using dickesim::complex_t;
using dickesim::full_state;
using dickesim::gate_params;
using dickesim::symmetric_state;

constexpr double kHalfRoot2 = 0.70710678118654752440;

gate_params hadamard_gate() {
  return gate_params{complex_t{kHalfRoot2, 0.0}, complex_t{kHalfRoot2, 0.0}};
}

full_state random_register(int m, dickesim::rng& rand) {
  full_state s;
  s.num_qubits = m;
  s.amps.assign(std::size_t{1} << m, complex_t{0.0, 0.0});
  double norm2 = 0.0;
  for (complex_t& a : s.amps) {
    a = complex_t{rand.uniform() - 0.5, rand.uniform() - 0.5};
    norm2 += std::norm(a);
  }
  const double scale = 1.0 / std::sqrt(norm2);
  for (complex_t& a : s.amps) a *= scale;
  return s;
}

}  // namespace

TEST_CASE("embedding spreads a weight state over its bit patterns") {
  const full_state full = dickesim::embed(dickesim::dicke_state(2, 1));
  REQUIRE(full.num_qubits == 2);
  REQUIRE(full.amps.size() == 4);
  CHECK(std::abs(full.amps[0]) <= 1e-15);                         // |00>
  CHECK(std::abs(full.amps[1] - complex_t{kHalfRoot2, 0.0}) <= 1e-15);  // |01>
  CHECK(std::abs(full.amps[2] - complex_t{kHalfRoot2, 0.0}) <= 1e-15);  // |10>
  CHECK(std::abs(full.amps[3]) <= 1e-15);                         // |11>
}

TEST_CASE("projection back to the symmetric subspace and its residual") {
  dickesim::rng rand(121);
  for (int n = 1; n <= 5; ++n) {
    const symmetric_state psi = dickesim::random_state(n, rand);
    const auto [back, residual] =
        dickesim::project_symmetric(dickesim::embed(psi));
    CHECK(residual <= 1e-12);
    CHECK(dickesim::fidelity(back, psi) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }

  // |01> = (symmetric + antisymmetric)/sqrt(2): residual 1/sqrt(2).
  full_state lopsided;
  lopsided.num_qubits = 2;
  lopsided.amps = {complex_t{0.0, 0.0}, complex_t{1.0, 0.0},
                   complex_t{0.0, 0.0}, complex_t{0.0, 0.0}};
  const auto [sym, residual] = dickesim::project_symmetric(lopsided);
  CHECK(residual == doctest::Approx(kHalfRoot2).epsilon(1e-12));
  // Unnormalized projection: the symmetric component of |01> has weight 1/2.
  CHECK(std::abs(sym.amps[1] - complex_t{kHalfRoot2, 0.0}) <= 1e-12);
}

TEST_CASE("qubit indexing puts qubit 1 on the top bit") {
  // X on qubit 1 of |00> gives |10> (index 2); on qubit 2 gives |01>.
  Eigen::Matrix2cd x;
  x << 0.0, 1.0, 1.0, 0.0;
  full_state zeros;
  zeros.num_qubits = 2;
  zeros.amps = {complex_t{1.0, 0.0}, complex_t{0.0, 0.0}, complex_t{0.0, 0.0},
                complex_t{0.0, 0.0}};

  full_state hit_first = zeros;
  dickesim::apply_single_qubit_gate(hit_first, x, 1);
  CHECK(std::abs(hit_first.amps[2] - complex_t{1.0, 0.0}) <= 1e-15);

  full_state hit_second = zeros;
  dickesim::apply_single_qubit_gate(hit_second, x, 2);
  CHECK(std::abs(hit_second.amps[1] - complex_t{1.0, 0.0}) <= 1e-15);
}

TEST_CASE("single-qubit measurement branches and removal") {
  // (|0> + |1>)/sqrt(2) on one qubit: both outcomes at probability 1/2.
  full_state plus;
  plus.num_qubits = 1;
  plus.amps = {complex_t{kHalfRoot2, 0.0}, complex_t{kHalfRoot2, 0.0}};
  const dickesim::measurement_result zero =
      dickesim::measure_qubit(plus, 1, 0);
  CHECK(zero.outcome == 0);
  CHECK(zero.probability == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(std::abs(zero.post.amps[0] - complex_t{1.0, 0.0}) <= 1e-12);

  // Forcing an impossible branch reports probability zero and a zero vector.
  full_state ground;
  ground.num_qubits = 1;
  ground.amps = {complex_t{1.0, 0.0}, complex_t{0.0, 0.0}};
  const dickesim::measurement_result impossible =
      dickesim::measure_qubit(ground, 1, 1);
  CHECK(impossible.probability == doctest::Approx(0.0));
  CHECK(std::abs(impossible.post.amps[0]) <= 1e-15);
  CHECK(std::abs(impossible.post.amps[1]) <= 1e-15);

  // Unforced measurement needs a generator.
  CHECK_THROWS_AS(dickesim::measure_qubit(plus, 1, std::nullopt, nullptr),
                  dickesim::domain_error);

  // Removing a measured qubit repacks the remaining amplitudes.
  const full_state embedded = dickesim::embed(dickesim::dicke_state(2, 1));
  const dickesim::measurement_result split =
      dickesim::measure_qubit(embedded, 1, 0);
  const full_state rest = dickesim::remove_qubit(split.post, 1, 0);
  CHECK(rest.num_qubits == 1);
  CHECK(std::abs(rest.amps[1] - complex_t{1.0, 0.0}) <= 1e-12);
}

TEST_CASE("scheme matrices on two qubits, exact entries") {
  const dickesim::scheme_matrix adj =
      dickesim::build_scheme_matrix(2, dickesim::scheme_kind::adjacency);
  // Edges flip one bit: (00,01), (00,10), (01,11), (10,11).
  Eigen::Matrix<std::int64_t, 4, 4> expected_adj;
  expected_adj << 0, 1, 1, 0, 1, 0, 0, 1, 1, 0, 0, 1, 0, 1, 1, 0;
  CHECK((adj.entries - expected_adj).cwiseAbs().maxCoeff() == 0);

  const dickesim::scheme_matrix dual =
      dickesim::build_scheme_matrix(2, dickesim::scheme_kind::dual_adjacency);
  Eigen::Matrix<std::int64_t, 4, 4> expected_dual;
  expected_dual << 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -2;
  CHECK((dual.entries - expected_dual).cwiseAbs().maxCoeff() == 0);

  const dickesim::scheme_matrix ident =
      dickesim::build_scheme_matrix(2, dickesim::scheme_kind::identity);
  CHECK(ident.entries.isIdentity());

  // The distance matrices resolve the all-pairs relation: their sum is the
  // all-ones matrix.
  Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> sum =
      Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>::Zero(4, 4);
  for (int d = 0; d <= 2; ++d) {
    sum += dickesim::build_scheme_matrix(2, dickesim::scheme_kind::distance, d)
               .entries;
  }
  CHECK((sum.array() == 1).all());

  // Adjacency is twice the total x angular momentum.
  const Eigen::MatrixXcd two_jx =
      2.0 * dickesim::total_angular_momentum_matrix(2, 'x');
  CHECK((adj.entries.cast<double>() - two_jx.real()).cwiseAbs().maxCoeff() <=
        1e-14);
  CHECK(two_jx.imag().cwiseAbs().maxCoeff() <= 1e-14);
}

TEST_CASE("the total Casimir resolves the spin sectors") {
  // Two qubits: triplet (j = 1, value 2) three times, singlet (j = 0) once.
  const Eigen::MatrixXcd casimir = dickesim::total_casimir_matrix(2);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(casimir);
  REQUIRE(solver.info() == Eigen::Success);
  const Eigen::VectorXd ev = solver.eigenvalues();
  CHECK(ev(0) == doctest::Approx(0.0).epsilon(1e-12));
  for (int k = 1; k < 4; ++k) {
    CHECK(ev(k) == doctest::Approx(2.0).epsilon(1e-12));
  }

  // Embedded symmetric states sit in the top sector j = n/2.
  dickesim::rng rand(131);
  for (int n = 1; n <= 4; ++n) {
    const symmetric_state psi = dickesim::random_state(n, rand);
    const full_state emb = dickesim::embed(psi);
    Eigen::VectorXcd v(static_cast<Eigen::Index>(emb.amps.size()));
    for (std::size_t k = 0; k < emb.amps.size(); ++k) {
      v(static_cast<Eigen::Index>(k)) = emb.amps[k];
    }
    const double j = n / 2.0;
    const Eigen::VectorXcd residual =
        dickesim::total_casimir_matrix(n) * v - j * (j + 1.0) * v;
    CHECK(residual.cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("cyclic shift permutes bit patterns and matches its circuit") {
  // Three qubits: |100> (index 4) -> |010> (index 2).
  full_state e4;
  e4.num_qubits = 3;
  e4.amps.assign(8, complex_t{0.0, 0.0});
  e4.amps[4] = complex_t{1.0, 0.0};
  const full_state shifted = dickesim::cyclic_shift(e4);
  CHECK(std::abs(shifted.amps[2] - complex_t{1.0, 0.0}) <= 1e-15);

  dickesim::rng rand(141);
  for (int m = 1; m <= 5; ++m) {
    const full_state psi = random_register(m, rand);
    const full_state direct = dickesim::cyclic_shift(psi);
    const full_state circuit = dickesim::cyclic_shift_circuit(psi);
    CHECK(dickesim::fidelity(direct, circuit) ==
          doctest::Approx(1.0).epsilon(1e-13));
  }
  CHECK(dickesim::check_shift_impl_agreement() <= 1e-12);

  // Embedded symmetric states are invariant.
  const full_state emb = dickesim::embed(dickesim::dicke_state(3, 2));
  CHECK(dickesim::fidelity(dickesim::cyclic_shift(emb), emb) ==
        doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("size caps on the dense constructions") {
  CHECK_THROWS_AS(dickesim::embed(dickesim::dicke_state(15, 0)),
                  dickesim::size_error);
  CHECK_THROWS_AS(
      dickesim::build_scheme_matrix(7, dickesim::scheme_kind::adjacency),
      dickesim::size_error);
  CHECK_THROWS_AS(dickesim::total_casimir_matrix(11), dickesim::size_error);
}

TEST_CASE("phase estimation accepts symmetric inputs and rejects the singlet") {
  CHECK(dickesim::check_qpe_symmetric_acceptance(4, 3) <= 1e-12);
  CHECK(dickesim::check_qpe_singlet_rejection() <= 1e-12);

  // Direct check: forced all-zeros readout on an embedded weight state has
  // probability 1 and returns the state unchanged.
  const full_state emb = dickesim::embed(dickesim::dicke_state(3, 1));
  const dickesim::qpe_result res = dickesim::qpe_angular_momentum(emb, 2, 0);
  CHECK(res.accepted);
  CHECK(res.probability == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(dickesim::fidelity(res.post, emb) ==
        doctest::Approx(1.0).epsilon(1e-12));

  // The two-qubit singlet carries shift eigenphase 1/2: one ancilla reads 1.
  full_state singlet;
  singlet.num_qubits = 2;
  singlet.amps = {complex_t{0.0, 0.0}, complex_t{kHalfRoot2, 0.0},
                  complex_t{-kHalfRoot2, 0.0}, complex_t{0.0, 0.0}};
  const dickesim::qpe_result rej = dickesim::qpe_angular_momentum(singlet, 1, 0);
  CHECK(rej.probability <= 1e-12);
}

TEST_CASE("the known lower-spin eigenphase leaks at the documented rate") {
  CHECK(dickesim::check_qpe_false_accept() <= 1e-10);
}

TEST_CASE("both shift implementations drive identical estimations") {
  dickesim::rng rand(151);
  const full_state psi = random_register(3, rand);
  const dickesim::qpe_result fast = dickesim::qpe_angular_momentum(
      psi, 2, 0, nullptr, dickesim::shift_impl::fast_permutation);
  const dickesim::qpe_result slow = dickesim::qpe_angular_momentum(
      psi, 2, 0, nullptr, dickesim::shift_impl::fredkin_chain);
  CHECK(fast.probability == doctest::Approx(slow.probability).epsilon(1e-13));
  CHECK(dickesim::fidelity(fast.post, slow.post) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("circuit-level protocols agree with the algebra-level ones") {
  dickesim::rng rand(161);
  for (int trial = 0; trial < 5; ++trial) {
    const int n = 3;
    const symmetric_state psi = dickesim::random_state(n, rand);
    const gate_params g = dickesim::random_unit_gate(rand);

    // Removal: every qubit choice gives the algebra-level statistics.
    const dickesim::protocol1_split exact = dickesim::protocol1_exact(psi, g);
    for (int q = 0; q <= n; ++q) {
      const dickesim::oracle_protocol_result res =
          dickesim::protocol1_oracle(psi, g, q);
      CHECK(res.success_probability ==
            doctest::Approx(exact.success_probability).epsilon(1e-10));
      CHECK(dickesim::fidelity(res.state, exact.success_state) ==
            doctest::Approx(1.0).epsilon(1e-10));
    }

    // Growth via the exact projector.
    const dickesim::protocol2_result grown = dickesim::protocol2_exact(psi, g);
    const dickesim::oracle_protocol_result res = dickesim::protocol2_oracle(
        psi, g, dickesim::projection_mode::exact_projector);
    CHECK(res.success_probability ==
          doctest::Approx(grown.success_probability).epsilon(1e-10));
    CHECK(dickesim::fidelity(res.state, grown.success_state) ==
          doctest::Approx(1.0).epsilon(1e-10));
    // The projection discards exactly the failure branch of the growth step,
    // so the discarded norm and the success probability are complementary.
    CHECK(res.residual * res.residual ==
          doctest::Approx(1.0 - res.success_probability).epsilon(1e-10));
  }

  // Growth via phase estimation accepts slightly more than the projector:
  // the documented 1/16 slice of the orthogonal complement at t = 2.
  const symmetric_state mid = dickesim::dicke_state(2, 1);
  CHECK(dickesim::check_qpe_growth_gap(10, rand) <= 1e-10);
  const dickesim::oracle_protocol_result qpe_grow = dickesim::protocol2_oracle(
      mid, hadamard_gate(), dickesim::projection_mode::qpe, 2);
  const dickesim::protocol2_result proj_grow =
      dickesim::protocol2_exact(mid, hadamard_gate());
  const double expected =
      proj_grow.success_probability +
      (1.0 - proj_grow.success_probability) / 16.0;
  CHECK(qpe_grow.success_probability ==
        doctest::Approx(expected).epsilon(1e-10));
}
