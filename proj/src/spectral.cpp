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

#include "dickesim/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "dickesim/krawtchouk.hpp"

namespace dickesim {

namespace {

constexpr double kDegenerateSpectrumTol = 1e-12;
constexpr double kDiagResidualTol = 1e-8;

complex_t powi(complex_t base, int exponent) {
  complex_t r(1.0);
  for (int e = 0; e < exponent; ++e) r *= base;
  return r;
}

// Worst deviation of B^-1 M B from diag(targets).
double diagonalization_residual(const Eigen::MatrixXcd& b,
                                const Eigen::MatrixXcd& m,
                                const std::vector<complex_t>& targets) {
  const int dim = static_cast<int>(b.rows());
  const Eigen::MatrixXcd d = b.partialPivLu().solve(m * b);
  double residual = 0.0;
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      const double dev = (i == j)
                             ? std::abs(d(i, j) - targets[static_cast<std::size_t>(i)])
                             : std::abs(d(i, j));
      if (dev > residual) residual = dev;
    }
  }
  if (!std::isfinite(residual)) return std::numeric_limits<double>::infinity();
  return residual;
}

// Unit column norms, first nonvanishing entry real positive.  Column
// rescaling commutes with the diagonalization, so the residual is untouched.
void fix_column_phases(Eigen::MatrixXcd& b) {
  for (int j = 0; j < b.cols(); ++j) {
    const double col_norm = b.col(j).norm();
    if (col_norm == 0.0) {
      throw spectral_error("fixed-point basis has a zero column");
    }
    b.col(j) /= col_norm;
    double top = 0.0;
    for (int i = 0; i < b.rows(); ++i) top = std::max(top, std::abs(b(i, j)));
    for (int i = 0; i < b.rows(); ++i) {
      if (std::abs(b(i, j)) > 1e-12 * top) {
        b.col(j) *= std::conj(b(i, j)) / std::abs(b(i, j));
        break;
      }
    }
  }
}

}  // namespace

symmetric_state hadamard_transform(const symmetric_state& state) {
  validate(state);
  const int n = state.n;
  const double scale = std::exp2(-0.5 * static_cast<double>(n));
  symmetric_state out;
  out.n = n;
  out.amps.assign(static_cast<std::size_t>(n) + 1, complex_t(0.0));
  for (int k = 0; k <= n; ++k) {
    // K_i(k) for every degree i in one recurrence pass.
    const std::vector<double> ki =
        detail::krawtchouk_all<double>(n, static_cast<double>(k), 0.5, n);
    const complex_t wk =
        scale * std::sqrt(binomial(n, k)) * state.amps[static_cast<std::size_t>(k)];
    for (int i = 0; i <= n; ++i) {
      out.amps[static_cast<std::size_t>(i)] +=
          std::sqrt(binomial(n, i)) * ki[static_cast<std::size_t>(i)] * wk;
    }
  }
  out.normalized = state.normalized;  // the transform is unitary
  return out;
}

symmetric_state adjacency_eigenvector(int n, int i) {
  validate(dicke_index{n, i});
  const double scale = std::exp2(-0.5 * static_cast<double>(n));
  const std::vector<double> kk =
      detail::krawtchouk_all<double>(n, static_cast<double>(i), 0.5, n);
  symmetric_state out;
  out.n = n;
  out.amps.resize(static_cast<std::size_t>(n) + 1);
  const double root_ci = std::sqrt(binomial(n, i));
  for (int k = 0; k <= n; ++k) {
    out.amps[static_cast<std::size_t>(k)] =
        scale * std::sqrt(binomial(n, k)) * root_ci * kk[static_cast<std::size_t>(k)];
  }
  out.normalized = true;
  return out;
}

rotation_angles compute_rotation_angles(const gate_params& p1,
                                        const gate_params& p2) {
  const symmetry_coeffs v = compute_symmetry_coeffs(p1, p2);
  const complex_t c = 2.0 * v.v0;
  if (std::abs(c) <= kDegenerateSpectrumTol) {
    throw spectral_error(
        "rotation angles: alpha*gamma + beta*delta = 0 makes the composed "
        "map's spectrum fully degenerate");
  }
  rotation_angles angles;
  // theta turns the (Jx, Jy) part onto Jx alone: tan(theta) = -vy/vx.
  if (std::abs(v.vx) > 0.0) {
    angles.theta = std::atan(-v.vy / v.vx);
  } else if (std::abs(v.vy) > 0.0) {
    angles.theta = std::acos(-1.0) / 2.0;
  } else {
    angles.theta = complex_t(0.0);
  }
  // phi then turns the remaining (Jx, Jz) part onto Jz: cos(phi) = vz/c.
  angles.phi = std::acos(v.vz / c);
  return angles;
}

fixed_point_basis build_fixed_point_basis(int n, const gate_params& p1,
                                          const gate_params& p2) {
  if (n < 1) {
    throw domain_error("fixed-point basis: need at least one qubit");
  }
  const symmetry_coeffs v = compute_symmetry_coeffs(p1, p2);
  const complex_t c = 2.0 * v.v0;
  const rotation_angles principal = compute_rotation_angles(p1, p2);

  const Eigen::MatrixXcd m = composed_matrix(n, p1, p2);
  std::vector<complex_t> targets(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    targets[static_cast<std::size_t>(i)] = c * static_cast<double>(n - i);
  }

  fixed_point_basis result;
  result.n = n;
  result.eigenvalues = targets;

  // Candidate sign branches of the principal angles.  The first four cover
  // every generic parameter set; the mirrored-theta four keep degenerate
  // (vx = 0) corners honest.  First branch whose conjugation residual meets
  // the bound wins, so the choice is deterministic.
  const double pi = std::acos(-1.0);
  const complex_t th = principal.theta;
  const complex_t ph = principal.phi;
  const rotation_angles candidates[] = {
      {th, ph},      {th, -ph},      {th + pi, ph},  {th + pi, -ph},
      {-th, ph},     {-th, -ph},     {-th + pi, ph}, {-th + pi, -ph},
  };
  const complex_t iu(0.0, 1.0);
  for (const rotation_angles& cand : candidates) {
    // b = exp(i theta Jz) exp(i phi Jy), assembled as the n-th symmetric
    // power of the 2x2 rotation.  The per-column binomial convolutions keep
    // every intermediate on the column's own scale; a direct matrix
    // exponential at complex angles carries absolute error on the order of
    // its largest entry, which wipes out the exponentially small ones.
    const complex_t ez = std::exp(iu * cand.theta * 0.5);
    const complex_t ch = std::cos(cand.phi * 0.5);
    const complex_t sh = std::sin(cand.phi * 0.5);
    Eigen::Matrix2cd r;
    r << ez * ch, ez * sh, -sh / ez, ch / ez;
    Eigen::MatrixXcd b = symmetric_power_matrix(r, n);
    // Equalize the column norms before judging the residual: rescaling
    // multiplies the off-diagonal entries of B^-1 M B by column-norm ratios
    // (huge for complex angles), so the bound must be enforced on the
    // normalized object that is actually returned.
    fix_column_phases(b);
    if (diagonalization_residual(b, m, targets) <= kDiagResidualTol) {
      result.basis = std::move(b);
      result.angles = cand;
      return result;
    }
  }

  // No rotation branch worked (pathological complex parameters): take the
  // eigenvectors directly and order them against the known spectrum.
  result.used_fallback = true;
  result.angles = principal;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m);
  if (es.info() != Eigen::Success) {
    throw spectral_error("fixed-point basis: eigendecomposition failed");
  }
  Eigen::MatrixXcd b(n + 1, n + 1);
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  for (int i = 0; i <= n; ++i) {
    int best = -1;
    double best_dist = std::numeric_limits<double>::infinity();
    for (int j = 0; j <= n; ++j) {
      if (used[static_cast<std::size_t>(j)]) continue;
      const double dist = std::abs(es.eigenvalues()(j) - targets[static_cast<std::size_t>(i)]);
      if (dist < best_dist) {
        best_dist = dist;
        best = j;
      }
    }
    used[static_cast<std::size_t>(best)] = true;
    b.col(i) = es.eigenvectors().col(best);
  }
  fix_column_phases(b);
  if (diagonalization_residual(b, m, targets) > kDiagResidualTol) {
    throw spectral_error(
        "fixed-point basis: even the direct eigendecomposition misses the "
        "expected spectrum");
  }
  result.basis = std::move(b);
  return result;
}

symmetric_state fixed_point_coefficients(int n, int j, const gate_params& p1,
                                         const gate_params& p2) {
  validate(dicke_index{n, j});
  const complex_t beta = p1.second;
  const complex_t gamma = p2.first;
  const complex_t delta = p2.second;
  const complex_t c = p1.first * gamma + beta * delta;
  if (std::abs(c) <= kDegenerateSpectrumTol) {
    throw spectral_error(
        "fixed-point coefficients: degenerate spectrum (alpha*gamma + "
        "beta*delta = 0)");
  }
  if (std::abs(gamma) <= kDegenerateSpectrumTol) {
    throw domain_error(
        "fixed-point coefficients: closed form needs gamma != 0; read the "
        "basis column instead");
  }
  const complex_t p = beta * delta / c;
  if (std::abs(p) <= kDegenerateSpectrumTol) {
    throw domain_error(
        "fixed-point coefficients: closed form needs beta*delta != 0; read "
        "the basis column instead");
  }

  const std::vector<complex_t> k = detail::krawtchouk_all<complex_t>(
      n, complex_t(static_cast<double>(j)), p, n);
  symmetric_state out;
  out.n = n;
  out.amps.resize(static_cast<std::size_t>(n) + 1);
  const complex_t ratio = delta / gamma;
  for (int i = 0; i <= n; ++i) {
    out.amps[static_cast<std::size_t>(i)] =
        powi(ratio, i) * std::sqrt(binomial(n, i)) * k[static_cast<std::size_t>(i)];
  }
  out = normalize(out).first;

  // Same phase convention as the basis columns.
  double top = 0.0;
  for (const complex_t& a : out.amps) top = std::max(top, std::abs(a));
  for (const complex_t& a : out.amps) {
    if (std::abs(a) > 1e-12 * top) {
      const complex_t phase = std::conj(a) / std::abs(a);
      for (complex_t& b : out.amps) b *= phase;
      break;
    }
  }
  return out;
}

std::optional<std::pair<complex_t, complex_t>> unitary_case_gate(
    const gate_params& p1, const gate_params& p2, double imag_tol) {
  const fixed_point_basis probe = build_fixed_point_basis(1, p1, p2);
  if (probe.used_fallback) return std::nullopt;
  const complex_t theta = probe.angles.theta;
  const complex_t phi = probe.angles.phi;
  if (std::abs(theta.imag()) > imag_tol || std::abs(phi.imag()) > imag_tol) {
    return std::nullopt;
  }
  const double th = theta.real();
  const double ph = phi.real();
  const complex_t iu(0.0, 1.0);
  const complex_t mu = iu * std::exp(iu * (th / 2.0)) * std::cos(ph / 2.0);
  const complex_t nu = iu * std::exp(iu * (th / 2.0)) * std::sin(ph / 2.0);
  return std::make_pair(mu, nu);
}

Eigen::MatrixXcd symmetric_power_matrix(const Eigen::Matrix2cd& g, int n) {
  if (n < 0) throw domain_error("symmetric_power_matrix: negative power");
  const complex_t a = g(0, 0);
  const complex_t b = g(0, 1);
  const complex_t c = g(1, 0);
  const complex_t d = g(1, 1);
  Eigen::MatrixXcd s(n + 1, n + 1);
  for (int k = 0; k <= n; ++k) {
    for (int j = 0; j <= n; ++j) {
      complex_t acc(0.0);
      const int lo = std::max(0, j + k - n);
      const int hi = std::min(j, k);
      for (int l = lo; l <= hi; ++l) {
        acc += binomial(j, l) * binomial(n - j, k - l) *
               powi(a, n - j - k + l) * powi(b, j - l) * powi(c, k - l) *
               powi(d, l);
      }
      s(k, j) = std::sqrt(binomial(n, j) / binomial(n, k)) * acc;
    }
  }
  return s;
}

}  // namespace dickesim
