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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dickesim/algebra.hpp"
#include "dickesim/dicke.hpp"
#include "dickesim/rng.hpp"
#include "dickesim/types.hpp"

namespace dickesim {

// ---------------------------------------------------------------------------
// Random draws shared by the verification suites and the tests.

// Unit-norm state with independent complex-Gaussian amplitudes.
symmetric_state random_state(int n, rng& rand);

// Unit pair (a, b) of complex Gaussians.
gate_params random_unit_gate(rng& rand);

// Unit pair with real entries (the self-adjoint composed-map case).
gate_params random_real_unit_gate(rng& rand);

// A (removal, growth) parameter pair redrawn until the composed map is far
// from spectral degeneracy and the closed-form coefficient formula is
// well-posed: |alpha gamma + beta delta| >= 0.1, |beta|, |gamma|,
// |delta| >= 0.05, and the diagonalization condition ratio
// ||(vx, vy, vz)|| / |alpha gamma + beta delta| at most 2 (it is 1 for
// normal maps and diverges toward the degenerate cone, where double-
// precision eigenvector residuals become meaningless).
std::pair<gate_params, gate_params> random_protocol_pair(rng& rand,
                                                         bool complex_valued);

// ---------------------------------------------------------------------------
// Individual checks.  Each returns its worst observed deviation, so a run
// passes when the return value is within the matching tolerance.

// |[a_r, a_s+] - delta_rs| and |[a_r, a_s]| on every basis state, n <= max_n.
double check_weyl_relations(int max_n);

// [N, growth] = growth and [N, removal] = -removal on random states.
double check_number_commutators(int max_n, int draws, rng& rand);

// removal(growth(psi)) - growth(removal(psi)) = (alpha gamma + beta delta) psi.
double check_removal_growth_commutator(int max_n, int draws, rng& rand);

// Composed matrix == vx Jx + vy Jy + vz Jz + v0 n Id.
double check_symmetry_identification(int max_n, int draws, rng& rand);

// Jx^2 + Jy^2 + Jz^2 == (n/2)(n/2 + 1) Id on the symmetric subspace.
double check_casimir(int max_n);

// Residual of B^-1 M B against the diagonal of (alpha gamma + beta delta)(n-i),
// over real draws plus complex_draws non-self-adjoint draws per n.
double check_diagonalization(int max_n, int draws, int complex_draws,
                             rng& rand);

// 1 - |<basis column j | closed-form j>|^2, worst case over draws and j.
double check_closed_form_overlap_gap(int max_n, int draws, rng& rand);

// Reversed-order composed map minus default order == (alpha gamma + beta
// delta) Id: the two round orders differ by exactly that multiple.
double check_round_order_offset(int max_n, int draws, rng& rand);

// Removal protocol vs circuit-level execution: success-probability gap,
// post-state infidelity and dependence on the measured qubit, worst case.
double check_protocol1_oracle_gap(int max_n, int draws, rng& rand);

// Growth protocol vs circuit-level execution with the exact projector.
double check_protocol2_oracle_gap(int max_n, int draws, rng& rand);

// Every product of distance matrices is an exact integer combination of
// distance matrices; returns the largest entry deviation (0 when exact).
std::int64_t check_bose_mesner_closure(int max_n);

// Distance matrices equal binom(n,i) K_i((n - A)/2; 1/2, n) in exact rational
// arithmetic; returns the largest entry deviation (0 when exact).
std::int64_t check_p_polynomial_identity(int max_n);

// Column 0 of each distance matrix, scaled, is an embedded weight basis state.
double check_dicke_from_distance(int max_n);

// Hadamard layer conjugates the adjacency matrix into its dual.
double check_hadamard_conjugation(int max_n);

// The symmetric-subspace transform is an involution on random states.
double check_transform_involution(int max_n, int draws, rng& rand);

// The symmetric-subspace transform agrees with the full Hadamard layer:
// worst infidelity between embed(transform(psi)) and H-layer(embed(psi)).
double check_transform_vs_statevector(int max_n, int draws, rng& rand);

// K_i(j) = K_j(i) on the grid, several weights, n <= max_n.
double check_krawtchouk_self_duality(int max_n);

// Three-term recurrence residual on and off the grid, n <= max_n.
double check_krawtchouk_recurrence(int max_n);

// Binomially weighted orthogonality at p = 1/2, scaled to O(1).
double check_krawtchouk_orthogonality(int max_n);

// Phase estimation accepts permutation-invariant inputs: worst 1 - p over
// weight basis states with m <= max_m qubits and 1 <= t <= max_t ancillas.
double check_qpe_symmetric_acceptance(int max_m, int max_t);

// Phase estimation rejects the two-qubit singlet with one ancilla: returns p.
double check_qpe_singlet_rejection();

// The cyclic-eigenphase-1/3 state is falsely accepted with probability
// exactly |geometric sum|^2 = 1/16 at t = 2; returns the deviation.
double check_qpe_false_accept();

// Growing 2 -> 3 qubits: the QPE acceptance probability exceeds the exact
// one by (1 - p_exact)/16 at t = 2; returns the worst deviation over draws.
double check_qpe_growth_gap(int draws, rng& rand);

// Fredkin-chain and permutation-pass shift powers give identical QPE
// results: max of probability gap and post-state infidelity.
double check_shift_impl_agreement();

// ---------------------------------------------------------------------------
// Suite plumbing for the command-line verifier.

struct check_result {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct check_report {
  std::string suite;
  std::vector<check_result> checks;
  bool pass = true;
};

// Tolerance lookup: a global override beats per-check entries, which beat
// the built-in defaults.
class tolerance_table {
 public:
  void set_global(double tol) { global_ = tol; }
  void set(const std::string& name, double tol) { entries_[name] = tol; }
  double get(const std::string& name, double fallback) const;

  // Entries of `other` win over existing ones.
  void merge(const tolerance_table& other) {
    if (other.global_.has_value()) global_ = other.global_;
    for (const auto& [name, tol] : other.entries_) entries_[name] = tol;
  }

  // Parses {"check_name": tolerance, ...}.  Throws parse_error.
  static tolerance_table from_json(const std::string& text);

 private:
  std::optional<double> global_;
  std::map<std::string, double> entries_;
};

check_report run_algebra_checks(int max_n, rng& rand,
                                const tolerance_table& tols);
check_report run_scheme_checks(int max_n, const tolerance_table& tols);
check_report run_qpe_checks(rng& rand, const tolerance_table& tols);

}  // namespace dickesim
