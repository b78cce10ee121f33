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

#include "dickesim/checks.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <utility>

#include <Eigen/Dense>
#include <json.hpp>

#include "dickesim/krawtchouk.hpp"
#include "dickesim/oracle.hpp"
#include "dickesim/protocols.hpp"
#include "dickesim/spectral.hpp"

namespace dickesim {
namespace {

double gaussian(rng& rand) {
  const double u1 = 1.0 - rand.uniform();  // in (0, 1]
  const double u2 = rand.uniform();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

complex_t complex_gaussian(rng& rand) {
  const double re = gaussian(rand);
  const double im = gaussian(rand);
  return complex_t{re, im};
}

// Difference from an optional state, treating an annihilated branch as zero.
std::vector<complex_t> as_amps(const maybe_state& state, int n) {
  if (!state.has_value()) {
    return std::vector<complex_t>(static_cast<std::size_t>(n) + 1,
                                  complex_t{0.0, 0.0});
  }
  return state->amps;
}

double max_deviation(const std::vector<complex_t>& a,
                     const std::vector<complex_t>& b) {
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    worst = std::max(worst, std::abs(a[k] - b[k]));
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Exact rational arithmetic for the association-scheme identities.

struct fraction {
  long long num = 0;
  long long den = 1;

  fraction() = default;
  fraction(long long value) : num(value), den(1) {}  // NOLINT(runtime/explicit)
  fraction(long long n, long long d) : num(n), den(d) { reduce(); }

  void reduce() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const long long g = std::gcd(std::abs(num), den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }
};

fraction operator+(const fraction& a, const fraction& b) {
  const long long g = std::gcd(a.den, b.den);
  const long long scale_a = b.den / g;
  const long long scale_b = a.den / g;
  return fraction{a.num * scale_a + b.num * scale_b, a.den * scale_a};
}

fraction operator-(const fraction& a, const fraction& b) {
  return a + fraction{-b.num, b.den};
}

fraction operator*(const fraction& a, const fraction& b) {
  // Cross-reduce before multiplying to keep magnitudes small.
  const long long g1 = std::gcd(std::abs(a.num), b.den);
  const long long g2 = std::gcd(std::abs(b.num), a.den);
  fraction out;
  out.num = (a.num / g1) * (b.num / g2);
  out.den = (a.den / g2) * (b.den / g1);
  out.reduce();
  return out;
}

using fraction_matrix = std::vector<fraction>;  // row-major, square

fraction_matrix fraction_identity(std::size_t dim) {
  fraction_matrix m(dim * dim);
  for (std::size_t r = 0; r < dim; ++r) m[r * dim + r] = fraction{1};
  return m;
}

fraction_matrix fraction_multiply(const fraction_matrix& a,
                                  const fraction_matrix& b, std::size_t dim) {
  fraction_matrix out(dim * dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      fraction acc;
      for (std::size_t k = 0; k < dim; ++k) {
        const fraction& left = a[r * dim + k];
        const fraction& right = b[k * dim + c];
        if (left.num == 0 || right.num == 0) continue;
        acc = acc + left * right;
      }
      out[r * dim + c] = acc;
    }
  }
  return out;
}

// Largest deviation of a fraction entry from an integer target: zero only
// when the entry equals the target exactly.
long long entry_deviation(const fraction& value, long long target) {
  if (value.den != 1) {
    return std::max(std::abs(value.num - target * value.den),
                    value.den - 1);
  }
  return std::abs(value.num - target);
}

Eigen::MatrixXd scheme_as_double(const scheme_matrix& m) {
  return m.entries.cast<double>();
}

Eigen::MatrixXd hadamard_layer_matrix(int n) {
  Eigen::MatrixXd h1(2, 2);
  const double s = 1.0 / std::numbers::sqrt2;
  h1 << s, s, s, -s;
  Eigen::MatrixXd out = Eigen::MatrixXd::Identity(1, 1);
  for (int q = 0; q < n; ++q) {
    Eigen::MatrixXd next(out.rows() * 2, out.cols() * 2);
    next.block(0, 0, out.rows(), out.cols()) = s * out;
    next.block(0, out.cols(), out.rows(), out.cols()) = s * out;
    next.block(out.rows(), 0, out.rows(), out.cols()) = s * out;
    next.block(out.rows(), out.cols(), out.rows(), out.cols()) = -s * out;
    out = std::move(next);
  }
  return out;
}

full_state random_full_state(int num_qubits, rng& rand) {
  full_state out;
  out.num_qubits = num_qubits;
  out.amps.resize(std::size_t{1} << num_qubits);
  double total = 0.0;
  for (auto& a : out.amps) {
    a = complex_gaussian(rand);
    total += std::norm(a);
  }
  const double scale = 1.0 / std::sqrt(total);
  for (auto& a : out.amps) a *= scale;
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Random draws.

symmetric_state random_state(int n, rng& rand) {
  symmetric_state out;
  out.n = n;
  out.amps.resize(static_cast<std::size_t>(n) + 1);
  double total = 0.0;
  for (auto& a : out.amps) {
    a = complex_gaussian(rand);
    total += std::norm(a);
  }
  if (total <= 0.0) {
    out.amps[0] = complex_t{1.0, 0.0};
    total = 1.0;
  }
  const double scale = 1.0 / std::sqrt(total);
  for (auto& a : out.amps) a *= scale;
  out.normalized = true;
  return out;
}

gate_params random_unit_gate(rng& rand) {
  complex_t a = complex_gaussian(rand);
  complex_t b = complex_gaussian(rand);
  double total = std::norm(a) + std::norm(b);
  while (total <= 1e-12) {
    a = complex_gaussian(rand);
    b = complex_gaussian(rand);
    total = std::norm(a) + std::norm(b);
  }
  const double scale = 1.0 / std::sqrt(total);
  return gate_params{a * scale, b * scale};
}

gate_params random_real_unit_gate(rng& rand) {
  double a = gaussian(rand);
  double b = gaussian(rand);
  double total = a * a + b * b;
  while (total <= 1e-12) {
    a = gaussian(rand);
    b = gaussian(rand);
    total = a * a + b * b;
  }
  const double scale = 1.0 / std::sqrt(total);
  return gate_params{complex_t{a * scale, 0.0}, complex_t{b * scale, 0.0}};
}

std::pair<gate_params, gate_params> random_protocol_pair(rng& rand,
                                                         bool complex_valued) {
  for (;;) {
    const gate_params p1 =
        complex_valued ? random_unit_gate(rand) : random_real_unit_gate(rand);
    const gate_params p2 =
        complex_valued ? random_unit_gate(rand) : random_real_unit_gate(rand);
    const complex_t c = p1.first * p2.first + p1.second * p2.second;
    if (std::abs(c) < 0.1) continue;
    if (std::abs(p1.second) < 0.05) continue;
    if (std::abs(p2.first) < 0.05) continue;
    if (std::abs(p2.second) < 0.05) continue;
    // Keep the composed map's diagonalization well conditioned.  The
    // eigenvector matrix is the n-th symmetric power of a 2x2 similarity
    // whose condition number grows with ||(vx, vy, vz)|| / |c| (1 for normal
    // maps, unbounded toward the degenerate cone c -> 0), so a state drawn
    // past this ratio makes double-precision residuals meaningless at the
    // qubit counts the suites sweep.
    const symmetry_coeffs v = compute_symmetry_coeffs(p1, p2);
    const double v_norm =
        std::sqrt(std::norm(v.vx) + std::norm(v.vy) + std::norm(v.vz));
    if (v_norm > 2.0 * std::abs(c)) continue;
    return {p1, p2};
  }
}

// ---------------------------------------------------------------------------
// Ladder-operator algebra.

double check_weyl_relations(int max_n) {
  double worst = 0.0;
  for (int n = 0; n <= max_n; ++n) {
    for (int i = 0; i <= n; ++i) {
      const symmetric_state basis = dicke_state(n, i);
      const auto lower = [&](int which, const maybe_state& in) -> maybe_state {
        if (!in.has_value()) return std::nullopt;
        return which == 1 ? apply_a1(*in) : apply_a2(*in);
      };
      const auto raise = [&](int which, const maybe_state& in) -> maybe_state {
        if (!in.has_value()) return std::nullopt;
        return which == 1 ? apply_a1_dag(*in) : apply_a2_dag(*in);
      };
      for (int r = 1; r <= 2; ++r) {
        for (int s = 1; s <= 2; ++s) {
          // [a_r, a_s+] = delta_rs on the fixed-n subspace.
          const maybe_state down_up = lower(r, raise(s, basis));
          const maybe_state up_down = raise(s, lower(r, basis));
          std::vector<complex_t> diff = as_amps(down_up, n);
          const std::vector<complex_t> second = as_amps(up_down, n);
          for (std::size_t k = 0; k < diff.size(); ++k) {
            diff[k] -= second[k];
            if (r == s) diff[k] -= basis.amps[k];
          }
          for (const complex_t& d : diff) {
            worst = std::max(worst, std::abs(d));
          }
          // [a_r, a_s] = 0 (both sides live on n - 2 when defined).
          if (n >= 2) {
            const maybe_state rs = lower(r, lower(s, basis));
            const maybe_state sr = lower(s, lower(r, basis));
            worst = std::max(
                worst, max_deviation(as_amps(rs, n - 2), as_amps(sr, n - 2)));
          }
        }
      }
    }
  }
  return worst;
}

double check_number_commutators(int max_n, int draws, rng& rand) {
  double worst = 0.0;
  for (int d = 0; d < draws; ++d) {
    const int n = 1 + static_cast<int>(rand.uniform() * max_n);
    const symmetric_state psi = random_state(std::min(n, max_n), rand);
    const gate_params p1 = random_unit_gate(rand);
    const gate_params p2 = random_unit_gate(rand);

    // [N, growth] = growth: N(P2 psi) - P2(N psi) = P2 psi.
    const symmetric_state grown = apply_p2(p2, psi);
    const symmetric_state lhs_grow = apply_number(grown);
    const symmetric_state rhs_grow = apply_p2(p2, apply_number(psi));
    for (std::size_t k = 0; k < grown.amps.size(); ++k) {
      worst = std::max(worst, std::abs(lhs_grow.amps[k] - rhs_grow.amps[k] -
                                       grown.amps[k]));
    }

    // [N, removal] = -removal: N(P1 psi) - P1(N psi) = -P1 psi.
    const maybe_state removed = apply_p1(p1, psi);
    if (removed.has_value()) {
      const symmetric_state lhs_rem = apply_number(*removed);
      const maybe_state rhs_rem = apply_p1(p1, apply_number(psi));
      const std::vector<complex_t> rhs =
          as_amps(rhs_rem, removed->n);
      for (std::size_t k = 0; k < removed->amps.size(); ++k) {
        worst = std::max(worst, std::abs(lhs_rem.amps[k] - rhs[k] +
                                         removed->amps[k]));
      }
    }
  }
  return worst;
}

double check_removal_growth_commutator(int max_n, int draws, rng& rand) {
  double worst = 0.0;
  for (int d = 0; d < draws; ++d) {
    const int n = static_cast<int>(rand.uniform() * (max_n + 1));
    const symmetric_state psi = random_state(n, rand);
    const gate_params p1 = random_unit_gate(rand);
    const gate_params p2 = random_unit_gate(rand);
    const complex_t c = p1.first * p2.first + p1.second * p2.second;

    const maybe_state forward = apply_p1(p1, apply_p2(p2, psi));
    maybe_state backward;
    {
      const maybe_state removed = apply_p1(p1, psi);
      if (removed.has_value()) backward = apply_p2(p2, *removed);
    }
    const std::vector<complex_t> lhs = as_amps(forward, n);
    const std::vector<complex_t> rhs = as_amps(backward, n);
    for (std::size_t k = 0; k < lhs.size(); ++k) {
      worst = std::max(worst, std::abs(lhs[k] - rhs[k] - c * psi.amps[k]));
    }
  }
  return worst;
}

double check_symmetry_identification(int max_n, int draws, rng& rand) {
  double worst = 0.0;
  for (int d = 0; d < draws; ++d) {
    const int n = 1 + static_cast<int>(rand.uniform() * max_n);
    const int nn = std::min(n, max_n);
    const gate_params p1 = random_unit_gate(rand);
    const gate_params p2 = random_unit_gate(rand);
    const symmetry_coeffs v = compute_symmetry_coeffs(p1, p2);

    const Eigen::MatrixXcd m = composed_matrix(nn, p1, p2);
    Eigen::MatrixXcd rebuilt =
        v.vx * angular_momentum_matrix(nn, 'x') +
        v.vy * angular_momentum_matrix(nn, 'y') +
        v.vz * angular_momentum_matrix(nn, 'z') +
        v.v0 * number_matrix(nn);
    worst = std::max(worst, (m - rebuilt).cwiseAbs().maxCoeff());

    // The coefficient vector squares to the commutator constant.
    const complex_t c = p1.first * p2.first + p1.second * p2.second;
    const complex_t vsq = v.vx * v.vx + v.vy * v.vy + v.vz * v.vz;
    worst = std::max(worst, std::abs(vsq - c * c));
  }
  return worst;
}

double check_casimir(int max_n) {
  double worst = 0.0;
  for (int n = 0; n <= max_n; ++n) {
    const Eigen::MatrixXcd jx = angular_momentum_matrix(n, 'x');
    const Eigen::MatrixXcd jy = angular_momentum_matrix(n, 'y');
    const Eigen::MatrixXcd jz = angular_momentum_matrix(n, 'z');
    const double j = n / 2.0;
    const Eigen::MatrixXcd casimir = jx * jx + jy * jy + jz * jz;
    const Eigen::MatrixXcd expected =
        j * (j + 1.0) * Eigen::MatrixXcd::Identity(n + 1, n + 1);
    worst = std::max(worst, (casimir - expected).cwiseAbs().maxCoeff());

    // su(2) commutators on the same subspace: [Jx, Jy] = i Jz and cyclic.
    const complex_t im{0.0, 1.0};
    worst = std::max(worst, (jx * jy - jy * jx - im * jz).cwiseAbs().maxCoeff());
    worst = std::max(worst, (jy * jz - jz * jy - im * jx).cwiseAbs().maxCoeff());
    worst = std::max(worst, (jz * jx - jx * jz - im * jy).cwiseAbs().maxCoeff());
  }
  return worst;
}

double check_diagonalization(int max_n, int draws, int complex_draws,
                             rng& rand) {
  double worst = 0.0;
  for (int n = 1; n <= max_n; ++n) {
    const int total = draws + complex_draws;
    for (int d = 0; d < total; ++d) {
      const bool complex_valued = d >= draws;
      const auto [p1, p2] = random_protocol_pair(rand, complex_valued);
      const fixed_point_basis basis = build_fixed_point_basis(n, p1, p2);
      const Eigen::MatrixXcd m = composed_matrix(n, p1, p2);
      const Eigen::MatrixXcd transformed =
          basis.basis.partialPivLu().solve(m * basis.basis);
      for (int r = 0; r <= n; ++r) {
        for (int c = 0; c <= n; ++c) {
          const complex_t target =
              r == c ? basis.eigenvalues[static_cast<std::size_t>(r)]
                     : complex_t{0.0, 0.0};
          worst = std::max(worst, std::abs(transformed(r, c) - target));
        }
      }
    }
  }
  return worst;
}

double check_closed_form_overlap_gap(int max_n, int draws, rng& rand) {
  double worst = 0.0;
  for (int n = 1; n <= max_n; ++n) {
    for (int d = 0; d < draws; ++d) {
      const auto [p1, p2] = random_protocol_pair(rand, (d % 2) == 1);
      const fixed_point_basis basis = build_fixed_point_basis(n, p1, p2);
      for (int j = 0; j <= n; ++j) {
        const symmetric_state closed = fixed_point_coefficients(n, j, p1, p2);
        complex_t overlap{0.0, 0.0};
        for (int k = 0; k <= n; ++k) {
          overlap += std::conj(basis.basis(k, j)) *
                     closed.amps[static_cast<std::size_t>(k)];
        }
        worst = std::max(worst, 1.0 - std::norm(overlap));
      }
    }
  }
  return worst;
}

double check_round_order_offset(int max_n, int draws, rng& rand) {
  double worst = 0.0;
  for (int d = 0; d < draws; ++d) {
    const int n = 1 + static_cast<int>(rand.uniform() * max_n);
    const int nn = std::min(n, max_n);
    const gate_params p1 = random_unit_gate(rand);
    const gate_params p2 = random_unit_gate(rand);
    const complex_t c = p1.first * p2.first + p1.second * p2.second;
    const symmetric_state psi = random_state(nn, rand);

    // Default order: remove then grow.
    const maybe_state forward = apply_composed(p1, p2, psi);
    // Reversed order: grow then remove.
    const maybe_state reversed = apply_p1(p1, apply_p2(p2, psi));

    const std::vector<complex_t> lhs = as_amps(reversed, nn);
    const std::vector<complex_t> rhs = as_amps(forward, nn);
    for (std::size_t k = 0; k < lhs.size(); ++k) {
      worst = std::max(worst, std::abs(lhs[k] - rhs[k] - c * psi.amps[k]));
    }
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Protocol vs circuit-level execution.

double check_protocol1_oracle_gap(int max_n, int draws, rng& rand) {
  double worst = 0.0;
  for (int d = 0; d < draws; ++d) {
    const int n = 1 + static_cast<int>(rand.uniform() * max_n);
    const int nn = std::min(n, max_n);
    const symmetric_state psi = random_state(nn, rand);
    const gate_params g = random_unit_gate(rand);
    const protocol1_split split = protocol1_exact(psi, g);

    double reference_prob = -1.0;
    symmetric_state reference_state;
    for (int qubit = 1; qubit <= nn; ++qubit) {
      const oracle_protocol_result circuit = protocol1_oracle(psi, g, qubit);
      worst = std::max(worst, std::abs(circuit.success_probability -
                                       split.success_probability));
      if (split.success_probability > 1e-10) {
        worst = std::max(worst,
                         1.0 - fidelity(circuit.state, split.success_state));
      }
      if (reference_prob < 0.0) {
        reference_prob = circuit.success_probability;
        reference_state = circuit.state;
      } else {
        worst = std::max(
            worst, std::abs(circuit.success_probability - reference_prob));
        if (reference_prob > 1e-10) {
          worst = std::max(worst, 1.0 - fidelity(circuit.state,
                                                 reference_state));
        }
      }
    }
  }
  return worst;
}

double check_protocol2_oracle_gap(int max_n, int draws, rng& rand) {
  double worst = 0.0;
  for (int d = 0; d < draws; ++d) {
    const int n = static_cast<int>(rand.uniform() * (max_n + 1));
    const int nn = std::min(n, max_n);
    const symmetric_state psi = random_state(nn, rand);
    const gate_params g = random_unit_gate(rand);
    const protocol2_result exact = protocol2_exact(psi, g);
    const oracle_protocol_result circuit =
        protocol2_oracle(psi, g, projection_mode::exact_projector);
    worst = std::max(worst, std::abs(circuit.success_probability -
                                     exact.success_probability));
    if (exact.success_probability > 1e-10) {
      worst = std::max(worst,
                       1.0 - fidelity(circuit.state, exact.success_state));
    }
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Association-scheme identities (exact integer / rational arithmetic).

std::int64_t check_bose_mesner_closure(int max_n) {
  std::int64_t worst = 0;
  for (int n = 1; n <= max_n; ++n) {
    const std::size_t dim = std::size_t{1} << n;
    std::vector<scheme_matrix> distance;
    distance.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
      distance.push_back(build_scheme_matrix(n, scheme_kind::distance, i));
    }
    using int_matrix =
        Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
    for (int i = 0; i <= n; ++i) {
      for (int j = 0; j <= n; ++j) {
        const int_matrix product = distance[static_cast<std::size_t>(i)]
                                       .entries *
                                   distance[static_cast<std::size_t>(j)]
                                       .entries;
        // The candidate expansion coefficient at distance k is read off a
        // representative pair: x = 0...0 and y of weight k.
        int_matrix expected = int_matrix::Zero(static_cast<Eigen::Index>(dim),
                                               static_cast<Eigen::Index>(dim));
        for (int k = 0; k <= n; ++k) {
          const Eigen::Index rep =
              static_cast<Eigen::Index>((std::size_t{1} << k) - 1);
          expected += product(0, rep) *
                      distance[static_cast<std::size_t>(k)].entries;
        }
        worst = std::max(worst, (product - expected).cwiseAbs().maxCoeff());
      }
    }
  }
  return worst;
}

std::int64_t check_p_polynomial_identity(int max_n) {
  long long worst = 0;
  for (int n = 1; n <= max_n; ++n) {
    const std::size_t dim = std::size_t{1} << n;
    const scheme_matrix adjacency =
        build_scheme_matrix(n, scheme_kind::adjacency);
    std::vector<scheme_matrix> distance;
    for (int i = 0; i <= n; ++i) {
      distance.push_back(build_scheme_matrix(n, scheme_kind::distance, i));
    }

    // X = (n Id - A) / 2, so that entries of the polynomial argument follow
    // the weight-change variable of the orthogonality weight.
    fraction_matrix x(dim * dim);
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t c = 0; c < dim; ++c) {
        const long long a = adjacency.entries(static_cast<Eigen::Index>(r),
                                              static_cast<Eigen::Index>(c));
        const long long diag = r == c ? n : 0;
        x[r * dim + c] = fraction{diag - a, 2};
      }
    }

    // Falling-factorial powers F_k = X (X - 1) ... (X - k + 1).
    std::vector<fraction_matrix> falling;
    falling.push_back(fraction_identity(dim));
    for (int k = 1; k <= n; ++k) {
      fraction_matrix shifted = x;
      for (std::size_t r = 0; r < dim; ++r) {
        shifted[r * dim + r] = shifted[r * dim + r] - fraction{k - 1};
      }
      falling.push_back(fraction_multiply(falling.back(), shifted, dim));
    }

    for (int i = 0; i <= n; ++i) {
      // K_i(x; 1/2, n) = sum_k (-i)_k (-x)_k / ((-n)_k k!) 2^k and
      // (-x)_k = (-1)^k x(x-1)...(x-k+1), evaluated on the matrix X.
      fraction_matrix value(dim * dim);
      for (int k = 0; k <= i; ++k) {
        long long rising_i = 1;   // (-i)_k
        long long rising_n = 1;   // (-n)_k
        long long factorial_k = 1;
        for (int r = 0; r < k; ++r) {
          rising_i *= -i + r;
          rising_n *= -n + r;
          factorial_k *= r + 1;
        }
        long long sign = (k % 2 == 0) ? 1 : -1;
        const fraction coef =
            fraction{sign * rising_i * (1LL << k), rising_n * factorial_k};
        if (coef.num == 0) continue;
        const fraction_matrix& fk = falling[static_cast<std::size_t>(k)];
        for (std::size_t e = 0; e < value.size(); ++e) {
          if (fk[e].num == 0) continue;
          value[e] = value[e] + coef * fk[e];
        }
      }
      // Scale by binom(n, i) and compare with the distance matrix exactly.
      long long binom = 1;
      for (int r = 0; r < i; ++r) binom = binom * (n - r) / (r + 1);
      const fraction scale{binom, 1};
      const scheme_matrix& target = distance[static_cast<std::size_t>(i)];
      for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
          const fraction scaled = scale * value[r * dim + c];
          worst = std::max(
              worst,
              entry_deviation(scaled,
                              target.entries(static_cast<Eigen::Index>(r),
                                             static_cast<Eigen::Index>(c))));
        }
      }
    }
  }
  return worst;
}

double check_dicke_from_distance(int max_n) {
  double worst = 0.0;
  for (int n = 1; n <= max_n; ++n) {
    const std::size_t dim = std::size_t{1} << n;
    for (int i = 0; i <= n; ++i) {
      const scheme_matrix m = build_scheme_matrix(n, scheme_kind::distance, i);
      const full_state expected = embed(dicke_state(n, i));
      const double scale = 1.0 / std::sqrt(binomial(n, i));
      for (std::size_t x = 0; x < dim; ++x) {
        // Column of the all-zeros string.
        const double entry =
            static_cast<double>(
                m.entries(static_cast<Eigen::Index>(x), 0)) *
            scale;
        worst = std::max(worst, std::abs(entry - expected.amps[x]));
      }
    }
  }
  return worst;
}

double check_hadamard_conjugation(int max_n) {
  double worst = 0.0;
  for (int n = 1; n <= max_n; ++n) {
    const Eigen::MatrixXd a =
        scheme_as_double(build_scheme_matrix(n, scheme_kind::adjacency));
    const Eigen::MatrixXd dual =
        scheme_as_double(build_scheme_matrix(n, scheme_kind::dual_adjacency));
    const Eigen::MatrixXd h = hadamard_layer_matrix(n);
    worst = std::max(worst, (h * a * h - dual).cwiseAbs().maxCoeff());
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Transform checks.

double check_transform_involution(int max_n, int draws, rng& rand) {
  double worst = 0.0;
  for (int d = 0; d < draws; ++d) {
    const int n = 1 + static_cast<int>(rand.uniform() * max_n);
    const int nn = std::min(n, max_n);
    const symmetric_state psi = random_state(nn, rand);
    const symmetric_state twice = hadamard_transform(hadamard_transform(psi));
    worst = std::max(worst, max_deviation(twice.amps, psi.amps));

    // Norm preservation of a single application.
    const symmetric_state once = hadamard_transform(psi);
    worst = std::max(worst, std::abs(norm(once) - 1.0));
  }
  return worst;
}

double check_transform_vs_statevector(int max_n, int draws, rng& rand) {
  double worst = 0.0;
  Eigen::Matrix2cd h;
  const double s = 1.0 / std::numbers::sqrt2;
  h << complex_t{s, 0.0}, complex_t{s, 0.0}, complex_t{s, 0.0},
      complex_t{-s, 0.0};
  for (int d = 0; d < draws; ++d) {
    const int n = 1 + static_cast<int>(rand.uniform() * max_n);
    const int nn = std::min(n, max_n);
    const symmetric_state psi = random_state(nn, rand);
    full_state circuit = embed(psi);
    for (int qubit = 1; qubit <= nn; ++qubit) {
      apply_single_qubit_gate(circuit, h, qubit);
    }
    const full_state direct = embed(hadamard_transform(psi));
    worst = std::max(worst, 1.0 - fidelity(circuit, direct));
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Polynomial-family checks.

double check_krawtchouk_self_duality(int max_n) {
  double worst = 0.0;
  for (const double p : {0.3, 0.5, 0.7}) {
    const int limit = p == 0.5 ? max_n : std::min(max_n, 12);
    for (int n = 1; n <= limit; ++n) {
      const krawtchouk_params params{p, n};
      for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= n; ++j) {
          const double lhs = krawtchouk(i, static_cast<double>(j), params);
          const double rhs = krawtchouk(j, static_cast<double>(i), params);
          const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
          worst = std::max(worst, std::abs(lhs - rhs) / scale);
        }
      }
    }
  }
  return worst;
}

double check_krawtchouk_recurrence(int max_n) {
  double worst = 0.0;
  for (const double p : {0.3, 0.5, 0.7}) {
    for (int n = 2; n <= max_n; ++n) {
      const krawtchouk_params params{p, n};
      for (int i = 1; i + 1 <= n; ++i) {
        for (int grid = 0; grid <= n; ++grid) {
          for (const double offset : {0.0, 0.37}) {
            const double x = grid + offset;
            const double prev = krawtchouk(i - 1, x, params);
            const double curr = krawtchouk(i, x, params);
            const double next = krawtchouk(i + 1, x, params);
            const double lead = p * (n - i);
            const double trail = i * (1.0 - p);
            const double residual =
                lead * next - ((lead + trail - x) * curr - trail * prev);
            const double scale = std::max(
                {1.0, std::abs(lead * next), std::abs(curr), std::abs(prev)});
            worst = std::max(worst, std::abs(residual) / scale);
          }
        }
      }
    }
  }
  return worst;
}

double check_krawtchouk_orthogonality(int max_n) {
  double worst = 0.0;
  for (int n = 1; n <= max_n; ++n) {
    const krawtchouk_params params{0.5, n};
    std::vector<std::vector<double>> rows;
    rows.reserve(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) {
      rows.push_back(krawtchouk_row(j, params));
    }
    const double weight_scale = std::exp2(-n);
    for (int i = 0; i <= n; ++i) {
      for (int j = i; j <= n; ++j) {
        double acc = 0.0;
        for (int x = 0; x <= n; ++x) {
          acc += binomial(n, x) * weight_scale *
                 rows[static_cast<std::size_t>(x)][static_cast<std::size_t>(
                     i)] *
                 rows[static_cast<std::size_t>(x)][static_cast<std::size_t>(
                     j)];
        }
        const double expected = i == j ? 1.0 / binomial(n, i) : 0.0;
        worst = std::max(worst, std::abs(acc - expected) * binomial(n, i));
      }
    }
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Phase-estimation checks.

double check_qpe_symmetric_acceptance(int max_m, int max_t) {
  double worst = 0.0;
  rng rand(777);
  for (int m = 1; m <= max_m; ++m) {
    for (int t = 1; t <= max_t; ++t) {
      if (m + t > 12) continue;
      for (int i = 0; i <= m; ++i) {
        const full_state input = embed(dicke_state(m, i));
        const qpe_result result = qpe_angular_momentum(input, t, 0);
        worst = std::max(worst, 1.0 - result.probability);
      }
      const full_state mixed = embed(random_state(m, rand));
      const qpe_result result = qpe_angular_momentum(mixed, t, 0);
      worst = std::max(worst, 1.0 - result.probability);
    }
  }
  return worst;
}

double check_qpe_singlet_rejection() {
  full_state singlet;
  singlet.num_qubits = 2;
  singlet.amps.assign(4, complex_t{0.0, 0.0});
  const double s = 1.0 / std::numbers::sqrt2;
  singlet.amps[1] = complex_t{s, 0.0};
  singlet.amps[2] = complex_t{-s, 0.0};
  const qpe_result result = qpe_angular_momentum(singlet, 1, 0);
  return result.probability;
}

double check_qpe_false_accept() {
  // Three-qubit eigenvector of the cyclic shift with eigenphase 2/3.  At
  // t = 2 the acceptance amplitude is the geometric sum
  // (1/4) sum_j exp(2 pi i (2/3) j) = 1/4, so the probability is 1/16.
  full_state input;
  input.num_qubits = 3;
  input.amps.assign(8, complex_t{0.0, 0.0});
  const double third = 2.0 * std::numbers::pi / 3.0;
  const complex_t omega = std::polar(1.0, third);
  const double s = 1.0 / std::sqrt(3.0);
  input.amps[4] = complex_t{s, 0.0};
  input.amps[2] = omega * s;
  input.amps[1] = omega * omega * s;
  const qpe_result result = qpe_angular_momentum(input, 2, 0);
  return std::abs(result.probability - 1.0 / 16.0);
}

double check_qpe_growth_gap(int draws, rng& rand) {
  double worst = 0.0;
  for (int d = 0; d < draws; ++d) {
    const symmetric_state psi = random_state(2, rand);
    const gate_params g = random_unit_gate(rand);
    const oracle_protocol_result exact =
        protocol2_oracle(psi, g, projection_mode::exact_projector);
    const oracle_protocol_result estimated =
        protocol2_oracle(psi, g, projection_mode::qpe, 2);
    const double p = exact.success_probability;
    const double expected = p + (1.0 - p) / 16.0;
    worst = std::max(worst,
                     std::abs(estimated.success_probability - expected));
    // The projected post-state must agree with the exact one.
    if (p > 1e-10) {
      worst = std::max(worst, 1.0 - fidelity(estimated.state, exact.state));
    }
  }
  return worst;
}

double check_shift_impl_agreement() {
  double worst = 0.0;
  rng rand(424242);
  for (int m = 2; m <= 4; ++m) {
    for (int trial = 0; trial < 3; ++trial) {
      const full_state input = random_full_state(m, rand);
      const qpe_result chain =
          qpe_angular_momentum(input, 2, 0, nullptr,
                               shift_impl::fredkin_chain);
      const qpe_result fast =
          qpe_angular_momentum(input, 2, 0, nullptr,
                               shift_impl::fast_permutation);
      worst = std::max(worst, std::abs(chain.probability - fast.probability));
      if (chain.probability > 1e-10) {
        worst = std::max(worst, 1.0 - fidelity(chain.post, fast.post));
      }
    }
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Suite plumbing.

double tolerance_table::get(const std::string& name, double fallback) const {
  if (global_.has_value()) return *global_;
  const auto it = entries_.find(name);
  if (it != entries_.end()) return it->second;
  return fallback;
}

tolerance_table tolerance_table::from_json(const std::string& text) {
  nlohmann::json parsed;
  try {
    parsed = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string{"tolerance table: "} + e.what());
  }
  if (!parsed.is_object()) {
    throw parse_error("tolerance table: expected a JSON object");
  }
  tolerance_table out;
  for (const auto& [key, value] : parsed.items()) {
    if (!value.is_number()) {
      throw parse_error("tolerance table: entry '" + key +
                        "' is not a number");
    }
    if (key == "*") {
      out.set_global(value.get<double>());
    } else {
      out.set(key, value.get<double>());
    }
  }
  return out;
}

namespace {

void append(check_report& report, const tolerance_table& tols,
            const std::string& name, double residual, double fallback_tol) {
  check_result result;
  result.name = name;
  result.residual = residual;
  result.tolerance = tols.get(name, fallback_tol);
  result.pass = residual <= result.tolerance;
  if (!result.pass) report.pass = false;
  report.checks.push_back(std::move(result));
}

}  // namespace

check_report run_algebra_checks(int max_n, rng& rand,
                                const tolerance_table& tols) {
  check_report report;
  report.suite = "algebra";
  const int n_cap = std::max(1, max_n);
  append(report, tols, "weyl_relations", check_weyl_relations(n_cap), 1e-10);
  append(report, tols, "number_commutators",
         check_number_commutators(n_cap, 40, rand), 1e-10);
  append(report, tols, "removal_growth_commutator",
         check_removal_growth_commutator(n_cap, 40, rand), 1e-10);
  append(report, tols, "symmetry_identification",
         check_symmetry_identification(n_cap, 40, rand), 1e-10);
  append(report, tols, "casimir", check_casimir(n_cap), 1e-10);
  append(report, tols, "fixed_point_diagonalization",
         check_diagonalization(std::min(n_cap, 8), 6, 6, rand), 1e-8);
  append(report, tols, "closed_form_fixed_points",
         check_closed_form_overlap_gap(std::min(n_cap, 8), 6, rand), 1e-8);
  append(report, tols, "round_order_offset",
         check_round_order_offset(n_cap, 20, rand), 1e-10);
  append(report, tols, "removal_protocol_circuit_agreement",
         check_protocol1_oracle_gap(std::min(n_cap, 6), 8, rand), 1e-10);
  append(report, tols, "growth_protocol_circuit_agreement",
         check_protocol2_oracle_gap(std::min(n_cap, 6), 8, rand), 1e-10);
  return report;
}

check_report run_scheme_checks(int max_n, const tolerance_table& tols) {
  check_report report;
  report.suite = "scheme";
  const int scheme_cap = std::clamp(max_n, 1, 5);
  const int embed_cap = std::clamp(max_n, 1, 6);
  rng rand(20260819);
  append(report, tols, "bose_mesner_closure",
         static_cast<double>(check_bose_mesner_closure(scheme_cap)), 0.0);
  append(report, tols, "p_polynomial_identity",
         static_cast<double>(check_p_polynomial_identity(scheme_cap)), 0.0);
  append(report, tols, "weight_states_from_distance_matrices",
         check_dicke_from_distance(embed_cap), 1e-12);
  append(report, tols, "hadamard_conjugation",
         check_hadamard_conjugation(embed_cap), 1e-10);
  append(report, tols, "transform_involution",
         check_transform_involution(std::max(max_n, 10), 20, rand), 1e-10);
  append(report, tols, "transform_matches_statevector",
         check_transform_vs_statevector(std::clamp(max_n, 1, 8), 10, rand),
         1e-10);
  append(report, tols, "krawtchouk_self_duality",
         check_krawtchouk_self_duality(std::max(max_n, 16)), 1e-10);
  append(report, tols, "krawtchouk_recurrence",
         check_krawtchouk_recurrence(std::max(max_n, 16)), 1e-10);
  append(report, tols, "krawtchouk_orthogonality",
         check_krawtchouk_orthogonality(std::max(max_n, 14)), 1e-9);
  return report;
}

check_report run_qpe_checks(rng& rand, const tolerance_table& tols) {
  check_report report;
  report.suite = "qpe";
  append(report, tols, "symmetric_acceptance",
         check_qpe_symmetric_acceptance(5, 3), 1e-10);
  append(report, tols, "singlet_rejection", check_qpe_singlet_rejection(),
         1e-12);
  append(report, tols, "cyclic_eigenphase_false_accept",
         check_qpe_false_accept(), 1e-10);
  append(report, tols, "growth_estimation_gap",
         check_qpe_growth_gap(10, rand), 1e-10);
  append(report, tols, "shift_implementation_agreement",
         check_shift_impl_agreement(), 1e-12);
  return report;
}

}  // namespace dickesim
