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
#include <optional>
#include <utility>
#include <vector>

#include "dickesim/algebra.hpp"
#include "dickesim/dicke.hpp"
#include "dickesim/types.hpp"

namespace dickesim {

// The composed round map decomposes as vx*Jx + vy*Jy + vz*Jz + v0*N.  A
// rotation generated by Jz then Jy turns its angular part into a multiple of
// Jz, which diagonalizes the map; these are the two rotation angles.  They
// are complex in general and real exactly when the rotation is realized by a
// unitary.
struct rotation_angles {
  complex_t theta{0.0, 0.0};
  complex_t phi{0.0, 0.0};
};

// Basis of fixed points (eigenvectors) of the composed map on n qubits.
struct fixed_point_basis {
  int n = 0;
  // Column i is the eigenvector with eigenvalue eigenvalues[i]; every column
  // has unit norm and its first nonvanishing entry real positive.
  Eigen::MatrixXcd basis;
  // (alpha gamma + beta delta) * (n - i), strictly decreasing in magnitude.
  std::vector<complex_t> eigenvalues;
  // The rotation realizing the basis, when one was found.
  rotation_angles angles;
  // True when no rotation branch met the residual bound and the basis came
  // from a direct eigendecomposition instead.
  bool used_fallback = false;
};

// The involutive transform whose matrix on the weight basis of n qubits is
//   T[i][k] = 2^(-n/2) sqrt(binom(n,i) binom(n,k)) K_i(k; 1/2, n).
// It is the n-qubit Hadamard layer restricted to the symmetric subspace and
// exchanges the graph adjacency operator 2*Jx with its dual 2*Jz.
symmetric_state hadamard_transform(const symmetric_state& state);

// Column i of the transform above: the unit eigenvector of 2*Jx on n qubits
// with eigenvalue n - 2i.
symmetric_state adjacency_eigenvector(int n, int i);

// Principal-branch rotation angles for the given protocol parameters.
// Throws spectral_error when alpha gamma + beta delta vanishes: the composed
// map then has a fully degenerate spectrum and no fixed-point basis.
rotation_angles compute_rotation_angles(const gate_params& p1,
                                        const gate_params& p2);

// Builds the fixed-point basis on n qubits.  Tries the sign branches of the
// principal angles, validating each candidate by the residual of
// B^-1 M B against the target diagonal (bound 1e-8); when no branch passes,
// falls back to a direct eigendecomposition and flags it.
fixed_point_basis build_fixed_point_basis(int n, const gate_params& p1,
                                          const gate_params& p2);

// Closed form for the j-th fixed point on n qubits:
//   coeff_i  proportional to  (delta/gamma)^i sqrt(binom(n,i))
//                             K_i(j; beta delta / (alpha gamma + beta delta), n)
// normalized with the same phase convention as the basis columns.
// Throws domain_error when gamma = 0 or beta delta = 0 (the closed form
// degenerates; use the basis column), spectral_error when the spectrum is
// degenerate.
symmetric_state fixed_point_coefficients(int n, int j, const gate_params& p1,
                                         const gate_params& p2);

// When both rotation angles are real within imag_tol the rotation is the
// symmetric power of an actual single-qubit unitary; returns its parameters
// (mu, nu) with the gate (-i) * [[mu, nu], [conj(nu), -conj(mu)]].
// Returns nothing when the angles are genuinely complex (or no rotation
// branch exists): the non-unitary case.
std::optional<std::pair<complex_t, complex_t>> unitary_case_gate(
    const gate_params& p1, const gate_params& p2, double imag_tol = 1e-10);

// Restriction of g tensored n times to the symmetric subspace, on the weight
// basis.  Used to check that a fixed-point basis with real angles is the
// symmetric power of its single-qubit gate.
Eigen::MatrixXcd symmetric_power_matrix(const Eigen::Matrix2cd& g, int n);

}  // namespace dickesim
