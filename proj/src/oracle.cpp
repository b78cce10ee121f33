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

#include <bit>
#include <cmath>
#include <string>

#include "dickesim/krawtchouk.hpp"

namespace dickesim {

namespace {

int weight(std::uint32_t x) { return std::popcount(x); }

// Bit position (from the least significant end) of 1-based qubit q.
int bit_position(int num_qubits, int qubit) { return num_qubits - qubit; }

void check_qubit(const full_state& state, int qubit, const char* where) {
  if (qubit < 1 || qubit > state.num_qubits) {
    throw domain_error(std::string(where) + ": qubit " + std::to_string(qubit) +
                       " outside 1 .. " + std::to_string(state.num_qubits));
  }
}

full_state zero_full(int num_qubits) {
  full_state s;
  s.num_qubits = num_qubits;
  s.amps.assign(std::size_t{1} << num_qubits, complex_t(0.0));
  return s;
}

}  // namespace

void validate(const full_state& state) {
  if (state.num_qubits < 0 || state.num_qubits > kMaxFullQubits) {
    throw size_error("full_state: " + std::to_string(state.num_qubits) +
                     " qubits outside 0 .. " + std::to_string(kMaxFullQubits));
  }
  if (state.amps.size() != (std::size_t{1} << state.num_qubits)) {
    throw dimension_error("full_state: amplitude vector of size " +
                          std::to_string(state.amps.size()) + " for " +
                          std::to_string(state.num_qubits) + " qubits");
  }
}

double norm(const full_state& state) {
  validate(state);
  double acc = 0.0;
  for (const complex_t& a : state.amps) acc += std::norm(a);
  return std::sqrt(acc);
}

double fidelity(const full_state& a, const full_state& b) {
  validate(a);
  validate(b);
  if (a.num_qubits != b.num_qubits) {
    throw dimension_error("fidelity: different qubit counts");
  }
  const double na = norm(a);
  const double nb = norm(b);
  if (na == 0.0 || nb == 0.0) {
    throw degenerate_error("fidelity: zero vector has no ray");
  }
  complex_t ip(0.0);
  for (std::size_t i = 0; i < a.amps.size(); ++i) {
    ip += std::conj(a.amps[i]) * b.amps[i];
  }
  return std::norm(ip) / (na * na * nb * nb);
}

full_state embed(const symmetric_state& state) {
  validate(state);
  if (state.n > kMaxFullQubits) {
    throw size_error("embed: " + std::to_string(state.n) + " qubits exceed the " +
                     std::to_string(kMaxFullQubits) + "-qubit statevector cap");
  }
  full_state out = zero_full(state.n);
  for (std::uint32_t x = 0; x < out.amps.size(); ++x) {
    const int i = weight(x);
    out.amps[x] = state.amps[static_cast<std::size_t>(i)] /
                  std::sqrt(binomial(state.n, i));
  }
  return out;
}

std::pair<symmetric_state, double> project_symmetric(const full_state& state) {
  validate(state);
  const int n = state.num_qubits;
  symmetric_state proj;
  proj.n = n;
  proj.amps.assign(static_cast<std::size_t>(n) + 1, complex_t(0.0));
  for (std::uint32_t x = 0; x < state.amps.size(); ++x) {
    proj.amps[static_cast<std::size_t>(weight(x))] += state.amps[x];
  }
  // The discarded component is summed pattern by pattern against each weight
  // class's mean amplitude.  Computing it as a difference of squared norms
  // instead would cancel to sqrt(eps) on inputs that are already symmetric.
  std::vector<complex_t> mean(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    const double count = binomial(n, i);
    mean[static_cast<std::size_t>(i)] =
        proj.amps[static_cast<std::size_t>(i)] / count;
    proj.amps[static_cast<std::size_t>(i)] /= std::sqrt(count);
  }
  double residual_sq = 0.0;
  for (std::uint32_t x = 0; x < state.amps.size(); ++x) {
    residual_sq +=
        std::norm(state.amps[x] - mean[static_cast<std::size_t>(weight(x))]);
  }
  return {proj, std::sqrt(residual_sq)};
}

void apply_single_qubit_gate(full_state& state, const Eigen::Matrix2cd& gate,
                             int qubit) {
  validate(state);
  check_qubit(state, qubit, "apply_single_qubit_gate");
  const std::uint32_t mask = std::uint32_t{1}
                             << bit_position(state.num_qubits, qubit);
  for (std::uint32_t x = 0; x < state.amps.size(); ++x) {
    if (x & mask) continue;
    const complex_t a0 = state.amps[x];
    const complex_t a1 = state.amps[x | mask];
    state.amps[x] = gate(0, 0) * a0 + gate(0, 1) * a1;
    state.amps[x | mask] = gate(1, 0) * a0 + gate(1, 1) * a1;
  }
}

measurement_result measure_qubit(const full_state& state, int qubit,
                                 std::optional<int> forced, rng* rand) {
  validate(state);
  check_qubit(state, qubit, "measure_qubit");
  const std::uint32_t mask = std::uint32_t{1}
                             << bit_position(state.num_qubits, qubit);
  double p1 = 0.0;
  double total = 0.0;
  for (std::uint32_t x = 0; x < state.amps.size(); ++x) {
    const double w = std::norm(state.amps[x]);
    total += w;
    if (x & mask) p1 += w;
  }
  if (total == 0.0) throw degenerate_error("measure_qubit: zero state");
  p1 /= total;

  measurement_result result;
  if (forced) {
    if (*forced != 0 && *forced != 1) {
      throw domain_error("measure_qubit: forced outcome must be 0 or 1");
    }
    result.outcome = *forced;
  } else {
    if (rand == nullptr) {
      throw domain_error("measure_qubit: need a generator or a forced outcome");
    }
    result.outcome = rand->bernoulli(p1) ? 1 : 0;
  }
  result.probability = result.outcome == 1 ? p1 : 1.0 - p1;

  result.post = zero_full(state.num_qubits);
  if (result.probability > 0.0) {
    const double scale = 1.0 / std::sqrt(result.probability * total);
    for (std::uint32_t x = 0; x < state.amps.size(); ++x) {
      const bool is_one = (x & mask) != 0;
      if (is_one == (result.outcome == 1)) {
        result.post.amps[x] = state.amps[x] * scale;
      }
    }
  }
  return result;
}

full_state remove_qubit(const full_state& state, int qubit, int known_outcome) {
  validate(state);
  check_qubit(state, qubit, "remove_qubit");
  if (known_outcome != 0 && known_outcome != 1) {
    throw domain_error("remove_qubit: outcome must be 0 or 1");
  }
  const int pos = bit_position(state.num_qubits, qubit);
  const std::uint32_t low_mask = (std::uint32_t{1} << pos) - 1;
  full_state out = zero_full(state.num_qubits - 1);
  for (std::uint32_t x = 0; x < state.amps.size(); ++x) {
    const int bit = static_cast<int>((x >> pos) & 1u);
    if (bit != known_outcome) continue;
    const std::uint32_t packed = ((x >> (pos + 1)) << pos) | (x & low_mask);
    out.amps[packed] = state.amps[x];
  }
  return out;
}

scheme_matrix build_scheme_matrix(int n, scheme_kind kind, int distance) {
  if (n < 0 || n > 6) {
    throw size_error("scheme_matrix: n must lie in 0 .. 6 (exact dense work)");
  }
  if (kind == scheme_kind::distance && (distance < 0 || distance > n)) {
    throw domain_error("scheme_matrix: distance outside 0 .. n");
  }
  const std::int64_t dim = std::int64_t{1} << n;
  scheme_matrix out;
  out.n = n;
  out.kind = kind;
  out.distance = kind == scheme_kind::distance
                     ? distance
                     : (kind == scheme_kind::adjacency ? 1 : 0);
  out.entries =
      Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>::Zero(dim, dim);
  for (std::int64_t x = 0; x < dim; ++x) {
    for (std::int64_t y = 0; y < dim; ++y) {
      const int d = weight(static_cast<std::uint32_t>(x ^ y));
      switch (kind) {
        case scheme_kind::identity:
          out.entries(x, y) = (d == 0) ? 1 : 0;
          break;
        case scheme_kind::adjacency:
          out.entries(x, y) = (d == 1) ? 1 : 0;
          break;
        case scheme_kind::dual_adjacency:
          out.entries(x, y) =
              (d == 0) ? n - 2 * weight(static_cast<std::uint32_t>(x)) : 0;
          break;
        case scheme_kind::distance:
          out.entries(x, y) = (d == distance) ? 1 : 0;
          break;
      }
    }
  }
  return out;
}

Eigen::MatrixXcd total_angular_momentum_matrix(int n, char axis) {
  if (n < 0 || n > 10) {
    throw size_error("total_angular_momentum_matrix: n must lie in 0 .. 10");
  }
  const std::int64_t dim = std::int64_t{1} << n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  const complex_t half_i(0.0, 0.5);
  for (std::int64_t x = 0; x < dim; ++x) {
    for (int q = 1; q <= n; ++q) {
      const std::uint32_t mask = std::uint32_t{1} << bit_position(n, q);
      const bool is_one = (static_cast<std::uint32_t>(x) & mask) != 0;
      switch (axis) {
        case 'x':
          m(x ^ mask, x) += 0.5;
          break;
        case 'y':
          // spin-y flips the bit with a phase: |0> -> i|1>, |1> -> -i|0>
          m(x ^ mask, x) += is_one ? -half_i : half_i;
          break;
        case 'z':
          m(x, x) += is_one ? -0.5 : 0.5;
          break;
        default:
          throw domain_error("total_angular_momentum_matrix: axis must be x, y or z");
      }
    }
  }
  return m;
}

Eigen::MatrixXcd total_casimir_matrix(int n) {
  const Eigen::MatrixXcd jx = total_angular_momentum_matrix(n, 'x');
  const Eigen::MatrixXcd jy = total_angular_momentum_matrix(n, 'y');
  const Eigen::MatrixXcd jz = total_angular_momentum_matrix(n, 'z');
  return jx * jx + jy * jy + jz * jz;
}

namespace {

std::uint32_t rotate_left(std::uint32_t x, int shift, int m) {
  const std::uint32_t mask = (m == 32) ? ~0u : ((std::uint32_t{1} << m) - 1);
  shift %= m;
  if (shift == 0) return x & mask;
  return ((x << shift) | (x >> (m - shift))) & mask;
}

void swap_qubits(full_state& state, int q1, int q2) {
  const std::uint32_t m1 = std::uint32_t{1}
                           << bit_position(state.num_qubits, q1);
  const std::uint32_t m2 = std::uint32_t{1}
                           << bit_position(state.num_qubits, q2);
  for (std::uint32_t x = 0; x < state.amps.size(); ++x) {
    if ((x & m1) && !(x & m2)) {
      std::swap(state.amps[x], state.amps[(x & ~m1) | m2]);
    }
  }
}

void controlled_swap(full_state& state, int control, int q1, int q2) {
  const std::uint32_t mc = std::uint32_t{1}
                           << bit_position(state.num_qubits, control);
  const std::uint32_t m1 = std::uint32_t{1}
                           << bit_position(state.num_qubits, q1);
  const std::uint32_t m2 = std::uint32_t{1}
                           << bit_position(state.num_qubits, q2);
  for (std::uint32_t x = 0; x < state.amps.size(); ++x) {
    if ((x & mc) && (x & m1) && !(x & m2)) {
      std::swap(state.amps[x], state.amps[(x & ~m1) | m2]);
    }
  }
}

}  // namespace

full_state cyclic_shift(const full_state& state) {
  validate(state);
  const int m = state.num_qubits;
  if (m == 0) return state;
  full_state out = zero_full(m);
  // The shifted basis index is the input rotated right by one; gathering
  // through the inverse (left) rotation writes each slot exactly once.
  for (std::uint32_t y = 0; y < out.amps.size(); ++y) {
    out.amps[y] = state.amps[rotate_left(y, 1, m)];
  }
  return out;
}

full_state cyclic_shift_circuit(const full_state& state) {
  validate(state);
  full_state out = state;
  for (int j = out.num_qubits - 1; j >= 1; --j) {
    swap_qubits(out, j, j + 1);
  }
  return out;
}

namespace {

// Applies sigma^power to the system register (the low m bits) on the joint
// indices whose control ancilla bit is set.
void controlled_shift_power(full_state& joint, int control, int power,
                            int system_qubits, shift_impl impl) {
  const int m = system_qubits;
  const int t = joint.num_qubits - m;
  if (impl == shift_impl::fredkin_chain) {
    for (int rep = 0; rep < power; ++rep) {
      // One controlled cyclic shift as a ladder of Fredkin gates on
      // adjacent system qubits (system qubit j is joint qubit t + j).
      for (int j = m - 1; j >= 1; --j) {
        controlled_swap(joint, control, t + j, t + j + 1);
      }
    }
    return;
  }
  const std::uint32_t control_mask =
      std::uint32_t{1} << bit_position(joint.num_qubits, control);
  const std::uint32_t sys_mask = (std::uint32_t{1} << m) - 1;
  full_state out = joint;
  for (std::uint32_t x = 0; x < joint.amps.size(); ++x) {
    if (!(x & control_mask)) continue;
    const std::uint32_t sys = x & sys_mask;
    out.amps[x] = joint.amps[(x & ~sys_mask) |
                             rotate_left(sys, power % m == 0 ? 0 : power % m, m)];
  }
  joint.amps = std::move(out.amps);
}

}  // namespace

qpe_result qpe_angular_momentum(const full_state& system, int t,
                                std::optional<int> forced, rng* rand,
                                shift_impl impl) {
  validate(system);
  const int m = system.num_qubits;
  if (m < 1) throw domain_error("qpe: empty system register");
  if (t < 1) throw domain_error("qpe: need at least one ancilla");
  if (t + m > kMaxFullQubits) {
    throw size_error("qpe: " + std::to_string(t + m) + " qubits exceed the " +
                     std::to_string(kMaxFullQubits) + "-qubit cap");
  }
  const double total = norm(system);
  if (total == 0.0) throw degenerate_error("qpe: zero state");

  // Ancillas are qubits 1 .. t (the high bits), system fills the low m bits.
  const std::size_t sys_dim = std::size_t{1} << m;
  const std::size_t anc_dim = std::size_t{1} << t;
  full_state joint = zero_full(t + m);
  for (std::size_t s = 0; s < sys_dim; ++s) joint.amps[s] = system.amps[s] / total;

  const Eigen::Matrix2cd hadamard =
      (Eigen::Matrix2cd() << 1, 1, 1, -1).finished() / std::sqrt(2.0);
  for (int a = 1; a <= t; ++a) apply_single_qubit_gate(joint, hadamard, a);

  // Ancilla a holds bit 2^(t-a) of the phase readout, so it controls
  // sigma^(2^(t-a)).
  for (int a = 1; a <= t; ++a) {
    controlled_shift_power(joint, a, 1 << (t - a), m, impl);
  }

  // Inverse Fourier transform on the ancilla register.
  const double pi = std::acos(-1.0);
  const double root = std::sqrt(static_cast<double>(anc_dim));
  std::vector<complex_t> scratch(anc_dim);
  for (std::size_t s = 0; s < sys_dim; ++s) {
    for (std::size_t k = 0; k < anc_dim; ++k) {
      complex_t acc(0.0);
      for (std::size_t j = 0; j < anc_dim; ++j) {
        const double angle = -2.0 * pi * static_cast<double>(j * k) /
                             static_cast<double>(anc_dim);
        acc += std::polar(1.0, angle) * joint.amps[j * sys_dim + s];
      }
      scratch[k] = acc / root;
    }
    for (std::size_t k = 0; k < anc_dim; ++k) joint.amps[k * sys_dim + s] = scratch[k];
  }

  // Read the ancilla register.
  std::vector<double> outcome_probs(anc_dim, 0.0);
  for (std::size_t j = 0; j < anc_dim; ++j) {
    for (std::size_t s = 0; s < sys_dim; ++s) {
      outcome_probs[j] += std::norm(joint.amps[j * sys_dim + s]);
    }
  }

  qpe_result result;
  if (forced) {
    if (*forced < 0 || static_cast<std::size_t>(*forced) >= anc_dim) {
      throw domain_error("qpe: forced ancilla outcome out of range");
    }
    result.ancilla_outcome = *forced;
  } else {
    if (rand == nullptr) {
      throw domain_error("qpe: need a generator or a forced outcome");
    }
    double u = rand->uniform();
    std::size_t pick = anc_dim - 1;
    for (std::size_t j = 0; j < anc_dim; ++j) {
      if (u < outcome_probs[j]) {
        pick = j;
        break;
      }
      u -= outcome_probs[j];
    }
    result.ancilla_outcome = static_cast<int>(pick);
  }
  const std::size_t picked = static_cast<std::size_t>(result.ancilla_outcome);
  result.accepted = picked == 0;
  result.probability = outcome_probs[picked];
  result.post = zero_full(m);
  if (result.probability > 0.0) {
    const double scale = 1.0 / std::sqrt(result.probability);
    for (std::size_t s = 0; s < sys_dim; ++s) {
      result.post.amps[s] = joint.amps[picked * sys_dim + s] * scale;
    }
  }
  return result;
}

oracle_protocol_result protocol2_oracle(const symmetric_state& state,
                                        const gate_params& g,
                                        projection_mode mode, int t,
                                        shift_impl impl) {
  require_unit_gate(g, "protocol2_oracle");
  const symmetric_state psi = normalize(state).first;
  if (psi.n + 1 > kMaxFullQubits) {
    throw size_error("protocol2_oracle: grown state exceeds the qubit cap");
  }
  const full_state current = embed(psi);

  // Append the fresh qubit (least significant bit) and rotate it into
  // gamma|0> + delta|1>.
  full_state grown = zero_full(psi.n + 1);
  for (std::size_t x = 0; x < current.amps.size(); ++x) {
    grown.amps[x << 1] = current.amps[x];
  }
  Eigen::Matrix2cd u;
  u << g.first, std::conj(g.second), g.second, -std::conj(g.first);
  apply_single_qubit_gate(grown, u, grown.num_qubits);

  oracle_protocol_result result;
  if (mode == projection_mode::exact_projector) {
    auto [proj, residual] = project_symmetric(grown);
    double p = 0.0;
    for (const complex_t& a : proj.amps) p += std::norm(a);
    result.success_probability = p;
    result.residual = residual;
    result.state = p > 0.0 ? normalize(proj).first : proj;
    return result;
  }

  const qpe_result accepted = qpe_angular_momentum(grown, t, 0, nullptr, impl);
  auto [proj, residual] = project_symmetric(accepted.post);
  result.success_probability = accepted.probability;
  result.residual = residual;
  const double kept = norm(proj);
  result.state = kept > 0.0 ? normalize(proj).first : proj;
  return result;
}

oracle_protocol_result protocol1_oracle(const symmetric_state& state,
                                        const gate_params& g,
                                        int measured_qubit) {
  require_unit_gate(g, "protocol1_oracle");
  const symmetric_state psi = normalize(state).first;
  if (psi.n < 1) {
    throw domain_error("protocol1_oracle: no qubit to remove from the vacuum");
  }
  const int qubit = measured_qubit == 0 ? psi.n : measured_qubit;
  full_state current = embed(psi);
  check_qubit(current, qubit, "protocol1_oracle");

  Eigen::Matrix2cd u;
  u << g.first, g.second, std::conj(g.second), -std::conj(g.first);
  apply_single_qubit_gate(current, u, qubit);

  const measurement_result measured = measure_qubit(current, qubit, 0);
  oracle_protocol_result result;
  result.success_probability = measured.probability;
  if (measured.probability > 0.0) {
    const full_state reduced = remove_qubit(measured.post, qubit, 0);
    auto [proj, residual] = project_symmetric(reduced);
    result.residual = residual;
    const double kept = norm(proj);
    result.state = kept > 0.0 ? normalize(proj).first : proj;
  } else {
    symmetric_state empty;
    empty.n = psi.n - 1;
    empty.amps.assign(static_cast<std::size_t>(psi.n), complex_t(0.0));
    result.state = empty;
  }
  return result;
}

}  // namespace dickesim
