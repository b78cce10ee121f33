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

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dickesim/algebra.hpp"
#include "dickesim/dicke.hpp"
#include "dickesim/rng.hpp"
#include "dickesim/types.hpp"

namespace dickesim {

// Everything in this header works on unrestricted n-qubit statevectors and
// exists to cross-check the symmetric-subspace fast paths against direct
// circuit-level execution.  Sizes are capped accordingly.
inline constexpr int kMaxFullQubits = 14;

// Computational-basis statevector.  Qubit 1 is the most significant bit of
// the index: basis state |x_1 x_2 ... x_m> sits at index
// x_1 * 2^(m-1) + ... + x_m.
struct full_state {
  int num_qubits = 0;
  std::vector<complex_t> amps;  // size 2^num_qubits
};

void validate(const full_state& state);

double norm(const full_state& state);

double fidelity(const full_state& a, const full_state& b);

// The symmetric-subspace vector written out over all 2^n basis states.
// Throws size_error beyond the qubit cap.
full_state embed(const symmetric_state& state);

// Components along the weight basis plus the norm of what is left over.
std::pair<symmetric_state, double> project_symmetric(const full_state& state);

// In-place gate on one qubit (1-based).
void apply_single_qubit_gate(full_state& state, const Eigen::Matrix2cd& gate,
                             int qubit);

struct measurement_result {
  int outcome = 0;           // 0 or 1
  double probability = 0.0;  // of the realized outcome
  full_state post;           // renormalized; zero vector if probability is 0
};

// Projective measurement of one qubit.  Pass `forced` to post-select a
// branch (the generator is then unused); otherwise a generator is required.
measurement_result measure_qubit(const full_state& state, int qubit,
                                 std::optional<int> forced = std::nullopt,
                                 rng* rand = nullptr);

// Drops a qubit whose value is known (just measured), keeping the matching
// half of the amplitudes.
full_state remove_qubit(const full_state& state, int qubit, int known_outcome);

// Matrices of the Hamming association scheme on n-bit strings, kept in exact
// integers.  distance_k(x, y) = 1 iff the strings differ in exactly k bits;
// the adjacency matrix is distance 1 and the dual adjacency is the diagonal
// n - 2 * weight(x).
enum class scheme_kind { identity, adjacency, dual_adjacency, distance };

struct scheme_matrix {
  int n = 0;
  scheme_kind kind = scheme_kind::identity;
  int distance = 0;  // meaningful for scheme_kind::distance
  Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> entries;
};

// Throws size_error for n > 6: these are dense 2^n x 2^n objects meant for
// exact small-case verification only.
scheme_matrix build_scheme_matrix(int n, scheme_kind kind, int distance = 0);

// Total angular momentum component (sum of single-qubit spin operators) as a
// dense matrix on n qubits; axis is 'x', 'y' or 'z'.  Capped at n = 10.
Eigen::MatrixXcd total_angular_momentum_matrix(int n, char axis);

// Jx^2 + Jy^2 + Jz^2 on n qubits; its eigenspaces are the total-spin
// sectors.  Same cap.
Eigen::MatrixXcd total_casimir_matrix(int n);

// The cyclic shift |x_1 x_2 ... x_m> -> |x_m x_1 ... x_{m-1}>, either as a
// direct index permutation or as the ladder of adjacent transpositions
// (m-1, m), (m-2, m-1), ..., (1, 2) that a circuit would use.  Both agree.
full_state cyclic_shift(const full_state& state);
full_state cyclic_shift_circuit(const full_state& state);

// How controlled shift powers inside phase estimation are executed:
// as chains of controlled-swap (Fredkin) gates, or as one permutation pass.
enum class shift_impl { fredkin_chain, fast_permutation };

struct qpe_result {
  bool accepted = false;      // all ancillas read 0
  int ancilla_outcome = 0;    // the t ancilla bits as an integer
  double probability = 0.0;   // of the realized ancilla outcome
  full_state post;            // renormalized system register; zero if p = 0
};

// Phase estimation of the cyclic shift on `system` with t ancillas:
// Hadamards, controlled shift powers, inverse Fourier transform, ancilla
// readout.  Permutation-invariant inputs always read 0; components of lower
// total spin carry nontrivial shift eigenphases and are (mostly) rejected.
// Pass `forced` to post-select an ancilla outcome, else supply a generator.
qpe_result qpe_angular_momentum(const full_state& system, int t,
                                std::optional<int> forced = std::nullopt,
                                rng* rand = nullptr,
                                shift_impl impl = shift_impl::fast_permutation);

// Circuit-level executions of the two protocols, for cross-checking the
// symmetric-subspace implementations.
enum class projection_mode { exact_projector, qpe };

struct oracle_protocol_result {
  double success_probability = 0.0;
  symmetric_state state;   // unit norm (zero vector if the branch is empty)
  double residual = 0.0;   // what the final symmetric projection discarded
};

// Grow by one qubit: embed, append a fresh qubit, gate it into
// gamma|0> + delta|1>, then keep the symmetric component -- via the exact
// projector, or via phase estimation with t ancillas (whose acceptance also
// passes a small slice of the lower-spin component: the residual).
oracle_protocol_result protocol2_oracle(const symmetric_state& state,
                                        const gate_params& g,
                                        projection_mode mode, int t = 3,
                                        shift_impl impl = shift_impl::fast_permutation);

// Remove one qubit: embed, gate the chosen qubit (1-based; 0 means the last
// one), measure it, keep the 0 branch.  By permutation invariance the choice
// of qubit must not matter.
oracle_protocol_result protocol1_oracle(const symmetric_state& state,
                                        const gate_params& g,
                                        int measured_qubit = 0);

}  // namespace dickesim
