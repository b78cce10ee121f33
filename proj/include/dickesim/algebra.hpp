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
#include <cmath>
#include <complex>
#include <optional>
#include <vector>

#include "dickesim/dicke.hpp"
#include "dickesim/types.hpp"

namespace dickesim {

// The pair of complex numbers parameterizing a protocol's single-qubit gate:
// (alpha, beta) for the removal protocol, (gamma, delta) for the growth
// protocol.  Physical use requires |first|^2 + |second|^2 = 1; the operator
// algebra itself accepts any values.
struct gate_params {
  complex_t first{1.0, 0.0};
  complex_t second{0.0, 0.0};
};

// True when |first|^2 + |second|^2 equals 1 within tol.
bool is_unit_gate(const gate_params& g, double tol = 1e-12);

// Throws domain_error when the gate is not unit-norm within tol.
void require_unit_gate(const gate_params& g, const char* where,
                       double tol = 1e-12);

// Coefficients (vx, vy, vz, v0) expressing the composed one-round map as
// vx*Jx + vy*Jy + vz*Jz + v0*(total number operator).
struct symmetry_coeffs {
  complex_t vx, vy, vz, v0;
};

// Empty result <=> the operator annihilated the vacuum: the image would live
// in a space with -1 qubits, which does not exist.  A zero vector inside a
// valid space is returned as an ordinary (unnormalized) symmetric_state.
using maybe_state = std::optional<symmetric_state>;

namespace detail {

// The mode actions, templated on the floating-point type so that high-
// precision instantiations run the exact same arithmetic.  These work on raw
// amplitude vectors: index i holds the weight-i Dicke coefficient, and the
// qubit count is the vector length minus one.

template <typename Real>
using amp_vector = std::vector<std::complex<Real>>;

// (alpha a1 + beta a2): n qubits -> n - 1 qubits, requires n >= 1.
// Mode a1 lowers the qubit count keeping the weight, with factor
// sqrt(n - i); mode a2 also removes one excitation, with factor sqrt(i).
template <typename Real>
amp_vector<Real> p1_amps(const std::complex<Real>& alpha,
                         const std::complex<Real>& beta,
                         const amp_vector<Real>& in) {
  const int n = static_cast<int>(in.size()) - 1;
  amp_vector<Real> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    out[i] = alpha * std::sqrt(Real(n - i)) * in[i] +
             beta * std::sqrt(Real(i + 1)) * in[i + 1];
  }
  return out;
}

// (gamma a1+ + delta a2+): n qubits -> n + 1 qubits.
template <typename Real>
amp_vector<Real> p2_amps(const std::complex<Real>& gamma,
                         const std::complex<Real>& delta,
                         const amp_vector<Real>& in) {
  const int n = static_cast<int>(in.size()) - 1;
  amp_vector<Real> out(static_cast<std::size_t>(n) + 2,
                       std::complex<Real>(Real(0)));
  for (int i = 0; i <= n; ++i) {
    out[i] += gamma * std::sqrt(Real(n + 1 - i)) * in[i];
    out[i + 1] += delta * std::sqrt(Real(i + 1)) * in[i];
  }
  return out;
}

}  // namespace detail

// Mode annihilation and creation operators.  Matrix elements on the weight
// basis of n qubits:
//   a1  |n, i> = sqrt(n - i)     |n-1, i>
//   a2  |n, i> = sqrt(i)         |n-1, i-1>
//   a1+ |n, i> = sqrt(n + 1 - i) |n+1, i>
//   a2+ |n, i> = sqrt(i + 1)     |n+1, i+1>
// The annihilators return an empty optional on the vacuum.
maybe_state apply_a1(const symmetric_state& state);
maybe_state apply_a2(const symmetric_state& state);
symmetric_state apply_a1_dag(const symmetric_state& state);
symmetric_state apply_a2_dag(const symmetric_state& state);

// Total number operator a1+ a1 + a2+ a2; multiplies every weight-basis
// vector of n qubits by n.
symmetric_state apply_number(const symmetric_state& state);

// alpha a1 + beta a2, the one-qubit-removal map.  Empty on the vacuum.
maybe_state apply_p1(const gate_params& g, const symmetric_state& state);

// gamma a1+ + delta a2+, the one-qubit-growth map.
symmetric_state apply_p2(const gate_params& g, const symmetric_state& state);

// The composed one-round map on n >= 1 qubits: removal first, then growth,
// so the qubit count is preserved.  Empty on the vacuum.
maybe_state apply_composed(const gate_params& p1, const gate_params& p2,
                           const symmetric_state& state);

// Angular momentum components of the spin-(n/2) representation carried by
// the symmetric subspace:
//   Jx |n, i> = 1/2 ( sqrt((i+1)(n-i)) |n, i+1> + sqrt(i(n-i+1)) |n, i-1> )
//   Jy |n, i> = i/2 ( sqrt((i+1)(n-i)) |n, i+1> - sqrt(i(n-i+1)) |n, i-1> )
//   Jz |n, i> = (n - 2 i) / 2 |n, i>
symmetric_state apply_jx(const symmetric_state& state);
symmetric_state apply_jy(const symmetric_state& state);
symmetric_state apply_jz(const symmetric_state& state);

// The (vx, vy, vz, v0) identification of the composed map:
//   vx = alpha delta + gamma beta
//   vy = i (gamma beta - alpha delta)
//   vz = alpha gamma - delta beta
//   v0 = (alpha gamma + delta beta) / 2
symmetry_coeffs compute_symmetry_coeffs(const gate_params& p1,
                                        const gate_params& p2);

// Dense matrices on the weight basis of n qubits, materialized on demand;
// every operator above stays a function otherwise.
Eigen::MatrixXcd composed_matrix(int n, const gate_params& p1,
                                 const gate_params& p2);
Eigen::MatrixXcd angular_momentum_matrix(int n, char axis);  // 'x', 'y', 'z'
Eigen::MatrixXcd number_matrix(int n);

}  // namespace dickesim
