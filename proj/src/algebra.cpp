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

#include "dickesim/algebra.hpp"

#include <functional>
#include <string>

namespace dickesim {

namespace {

symmetric_state make_state(int n, std::vector<complex_t> amps) {
  symmetric_state out;
  out.n = n;
  out.amps = std::move(amps);
  out.normalized = false;
  return out;
}

}  // namespace

bool is_unit_gate(const gate_params& g, double tol) {
  const double s = std::norm(g.first) + std::norm(g.second);
  return std::abs(s - 1.0) <= tol;
}

void require_unit_gate(const gate_params& g, const char* where, double tol) {
  if (!is_unit_gate(g, tol)) {
    throw domain_error(std::string(where) +
                       ": gate parameters must satisfy |a|^2 + |b|^2 = 1");
  }
}

maybe_state apply_a1(const symmetric_state& state) {
  validate(state);
  if (state.n == 0) return std::nullopt;
  const int n = state.n;
  std::vector<complex_t> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    out[i] = std::sqrt(static_cast<double>(n - i)) * state.amps[i];
  }
  return make_state(n - 1, std::move(out));
}

maybe_state apply_a2(const symmetric_state& state) {
  validate(state);
  if (state.n == 0) return std::nullopt;
  const int n = state.n;
  std::vector<complex_t> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    out[i] = std::sqrt(static_cast<double>(i + 1)) * state.amps[i + 1];
  }
  return make_state(n - 1, std::move(out));
}

symmetric_state apply_a1_dag(const symmetric_state& state) {
  validate(state);
  const int n = state.n;
  std::vector<complex_t> out(static_cast<std::size_t>(n) + 2, complex_t(0.0));
  for (int i = 0; i <= n; ++i) {
    out[i] = std::sqrt(static_cast<double>(n + 1 - i)) * state.amps[i];
  }
  return make_state(n + 1, std::move(out));
}

symmetric_state apply_a2_dag(const symmetric_state& state) {
  validate(state);
  const int n = state.n;
  std::vector<complex_t> out(static_cast<std::size_t>(n) + 2, complex_t(0.0));
  for (int i = 0; i <= n; ++i) {
    out[i + 1] = std::sqrt(static_cast<double>(i + 1)) * state.amps[i];
  }
  return make_state(n + 1, std::move(out));
}

symmetric_state apply_number(const symmetric_state& state) {
  validate(state);
  std::vector<complex_t> out = state.amps;
  for (complex_t& a : out) a *= static_cast<double>(state.n);
  return make_state(state.n, std::move(out));
}

maybe_state apply_p1(const gate_params& g, const symmetric_state& state) {
  validate(state);
  if (state.n == 0) return std::nullopt;
  return make_state(state.n - 1,
                    detail::p1_amps<double>(g.first, g.second, state.amps));
}

symmetric_state apply_p2(const gate_params& g, const symmetric_state& state) {
  validate(state);
  return make_state(state.n + 1,
                    detail::p2_amps<double>(g.first, g.second, state.amps));
}

maybe_state apply_composed(const gate_params& p1, const gate_params& p2,
                           const symmetric_state& state) {
  maybe_state lowered = apply_p1(p1, state);
  if (!lowered) return std::nullopt;
  return apply_p2(p2, *lowered);
}

symmetric_state apply_jx(const symmetric_state& state) {
  validate(state);
  const int n = state.n;
  std::vector<complex_t> out(static_cast<std::size_t>(n) + 1, complex_t(0.0));
  for (int i = 0; i <= n; ++i) {
    if (i + 1 <= n) {
      out[i + 1] += 0.5 * std::sqrt(static_cast<double>((i + 1) * (n - i))) *
                    state.amps[i];
    }
    if (i - 1 >= 0) {
      out[i - 1] += 0.5 * std::sqrt(static_cast<double>(i * (n - i + 1))) *
                    state.amps[i];
    }
  }
  return make_state(n, std::move(out));
}

symmetric_state apply_jy(const symmetric_state& state) {
  validate(state);
  const int n = state.n;
  const complex_t half_i(0.0, 0.5);
  std::vector<complex_t> out(static_cast<std::size_t>(n) + 1, complex_t(0.0));
  for (int i = 0; i <= n; ++i) {
    if (i + 1 <= n) {
      out[i + 1] += half_i * std::sqrt(static_cast<double>((i + 1) * (n - i))) *
                    state.amps[i];
    }
    if (i - 1 >= 0) {
      out[i - 1] -= half_i * std::sqrt(static_cast<double>(i * (n - i + 1))) *
                    state.amps[i];
    }
  }
  return make_state(n, std::move(out));
}

symmetric_state apply_jz(const symmetric_state& state) {
  validate(state);
  const int n = state.n;
  std::vector<complex_t> out(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    out[i] = 0.5 * static_cast<double>(n - 2 * i) * state.amps[i];
  }
  return make_state(n, std::move(out));
}

symmetry_coeffs compute_symmetry_coeffs(const gate_params& p1,
                                        const gate_params& p2) {
  const complex_t alpha = p1.first;
  const complex_t beta = p1.second;
  const complex_t gamma = p2.first;
  const complex_t delta = p2.second;
  const complex_t iu(0.0, 1.0);
  symmetry_coeffs v;
  v.vx = alpha * delta + gamma * beta;
  v.vy = iu * (gamma * beta - alpha * delta);
  v.vz = alpha * gamma - delta * beta;
  v.v0 = 0.5 * (alpha * gamma + delta * beta);
  return v;
}

namespace {

Eigen::MatrixXcd matrix_from_action(
    int n, const std::function<symmetric_state(const symmetric_state&)>& act) {
  Eigen::MatrixXcd m(n + 1, n + 1);
  for (int j = 0; j <= n; ++j) {
    const symmetric_state col = act(dicke_state({n, j}));
    for (int i = 0; i <= n; ++i) m(i, j) = col.amps[static_cast<std::size_t>(i)];
  }
  return m;
}

}  // namespace

Eigen::MatrixXcd composed_matrix(int n, const gate_params& p1,
                                 const gate_params& p2) {
  if (n < 0) throw domain_error("composed_matrix: negative qubit count");
  if (n == 0) return Eigen::MatrixXcd::Zero(1, 1);  // removal kills the vacuum
  return matrix_from_action(n, [&](const symmetric_state& basis) {
    return *apply_composed(p1, p2, basis);
  });
}

Eigen::MatrixXcd angular_momentum_matrix(int n, char axis) {
  if (n < 0) throw domain_error("angular_momentum_matrix: negative qubit count");
  switch (axis) {
    case 'x':
      return matrix_from_action(n, apply_jx);
    case 'y':
      return matrix_from_action(n, apply_jy);
    case 'z':
      return matrix_from_action(n, apply_jz);
    default:
      throw domain_error("angular_momentum_matrix: axis must be x, y or z");
  }
}

Eigen::MatrixXcd number_matrix(int n) {
  if (n < 0) throw domain_error("number_matrix: negative qubit count");
  return static_cast<double>(n) *
         Eigen::MatrixXcd::Identity(n + 1, n + 1);
}

}  // namespace dickesim
