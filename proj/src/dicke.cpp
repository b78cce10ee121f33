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

#include "dickesim/dicke.hpp"

#include <cmath>
#include <string>

namespace dickesim {

void validate(const dicke_index& idx) {
  if (idx.n < 0 || idx.i < 0 || idx.i > idx.n) {
    throw domain_error("dicke_index: (n, i) = (" + std::to_string(idx.n) +
                       ", " + std::to_string(idx.i) + ") is not a valid label");
  }
}

void validate(const symmetric_state& state) {
  if (state.n < 0) {
    throw dimension_error("symmetric_state: negative qubit count " +
                          std::to_string(state.n));
  }
  if (state.amps.size() != static_cast<std::size_t>(state.n) + 1) {
    throw dimension_error(
        "symmetric_state: amplitude vector has size " +
        std::to_string(state.amps.size()) + ", expected n + 1 = " +
        std::to_string(state.n + 1));
  }
}

symmetric_state dicke_state(const dicke_index& idx) {
  validate(idx);
  symmetric_state state;
  state.n = idx.n;
  state.amps.assign(static_cast<std::size_t>(idx.n) + 1, complex_t(0.0));
  state.amps[static_cast<std::size_t>(idx.i)] = complex_t(1.0);
  state.normalized = true;
  return state;
}

symmetric_state dicke_state(int n, int i) { return dicke_state({n, i}); }

symmetric_state vacuum_state() { return dicke_state({0, 0}); }

complex_t inner_product(const symmetric_state& a, const symmetric_state& b) {
  validate(a);
  validate(b);
  if (a.n != b.n) {
    throw dimension_error("inner_product: states of " + std::to_string(a.n) +
                          " and " + std::to_string(b.n) +
                          " qubits cannot be combined");
  }
  complex_t acc(0.0);
  for (std::size_t i = 0; i < a.amps.size(); ++i) {
    acc += std::conj(a.amps[i]) * b.amps[i];
  }
  return acc;
}

double norm(const symmetric_state& state) {
  validate(state);
  double acc = 0.0;
  for (const complex_t& a : state.amps) acc += std::norm(a);
  return std::sqrt(acc);
}

double fidelity(const symmetric_state& a, const symmetric_state& b) {
  const double na = norm(a);
  const double nb = norm(b);
  if (na == 0.0 || nb == 0.0) {
    throw degenerate_error("fidelity: zero vector has no ray");
  }
  const complex_t ip = inner_product(a, b);
  return std::norm(ip) / (na * na * nb * nb);
}

std::pair<symmetric_state, double> normalize(const symmetric_state& state) {
  const double n = norm(state);
  if (n == 0.0) {
    throw degenerate_error("normalize: zero vector");
  }
  symmetric_state out = state;
  for (complex_t& a : out.amps) a /= n;
  out.normalized = true;
  return {out, n};
}

std::pair<double, double> last_qubit_split_coeffs(const dicke_index& idx) {
  validate(idx);
  if (idx.n < 1) {
    throw domain_error("last_qubit_split_coeffs: need at least one qubit");
  }
  const double n = static_cast<double>(idx.n);
  const double i = static_cast<double>(idx.i);
  return {std::sqrt(i / n), std::sqrt((n - i) / n)};
}

}  // namespace dickesim
