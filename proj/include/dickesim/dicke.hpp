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

#include <utility>
#include <vector>

#include "dickesim/types.hpp"

namespace dickesim {

// Labels the Dicke basis state of n qubits with i excitations: the uniform
// superposition of all computational basis states of Hamming weight i.
struct dicke_index {
  int n = 0;
  int i = 0;
};

// Throws domain_error unless 0 <= i <= n.
void validate(const dicke_index& idx);

// A vector in the symmetric (permutation-invariant) subspace of n qubits,
// written in the Dicke basis: amps[i] multiplies the weight-i basis state.
// The subspace has dimension n + 1.  Unnormalized vectors are legal
// intermediates; `normalized` records whether the holder has unit norm by
// construction.
struct symmetric_state {
  int n = 0;
  std::vector<complex_t> amps;  // always of size n + 1
  bool normalized = false;
};

// Throws dimension_error unless amps.size() == n + 1 (and n >= 0).
void validate(const symmetric_state& state);

// The basis state |i excitations of n qubits>, unit norm.
symmetric_state dicke_state(const dicke_index& idx);
symmetric_state dicke_state(int n, int i);

// The zero-qubit vacuum, the seed every preparation run grows from.
symmetric_state vacuum_state();

// <a|b> with the first argument conjugated.  Throws dimension_error when the
// states live in different subspaces; vectors of different n are never mixed.
complex_t inner_product(const symmetric_state& a, const symmetric_state& b);

double norm(const symmetric_state& state);

// |<a|b>|^2 after normalizing both arguments; the standard ray comparison.
// Throws degenerate_error if either vector is zero.
double fidelity(const symmetric_state& a, const symmetric_state& b);

// Returns the unit-norm copy together with the norm that was divided out.
// Throws degenerate_error on the zero vector.
std::pair<symmetric_state, double> normalize(const symmetric_state& state);

// Splitting off the last qubit of the weight-i basis state of n qubits
// gives exactly two terms; this returns their coefficients
//   ( sqrt(i / n), sqrt((n - i) / n) )
// for the |i-1 of n-1> x |1> and |i of n-1> x |0> parts respectively.
// Throws domain_error when n < 1.
std::pair<double, double> last_qubit_split_coeffs(const dicke_index& idx);

}  // namespace dickesim
