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

#include "dickesim/preparation.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>

#include <Eigen/Dense>

#include "dickesim/krawtchouk.hpp"

namespace dickesim {
namespace {

constexpr double kCoefficientCutoff = 1e-12;  // relative to the largest

// p(z) and p'(z) by a joint Horner pass, coefficients in increasing degree.
std::pair<complex_t, complex_t> evaluate_with_derivative(
    const std::vector<complex_t>& coeffs, complex_t z) {
  complex_t value{0.0, 0.0};
  complex_t derivative{0.0, 0.0};
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    derivative = derivative * z + value;
    value = value * z + coeffs[k];
  }
  return {value, derivative};
}

// In-place EISPACK-style balancing: diagonal similarity scaling by powers of
// two so row and column norms roughly match.  Exact in floating point and a
// large accuracy win for companion matrices with wildly scaled coefficients.
void balance(Eigen::MatrixXcd& m) {
  const Eigen::Index dim = m.rows();
  constexpr double radix = 2.0;
  constexpr double radix_sq = radix * radix;
  bool converged = false;
  while (!converged) {
    converged = true;
    for (Eigen::Index i = 0; i < dim; ++i) {
      double col = 0.0;
      double row = 0.0;
      for (Eigen::Index j = 0; j < dim; ++j) {
        if (j == i) continue;
        col += std::abs(m(j, i));
        row += std::abs(m(i, j));
      }
      if (col == 0.0 || row == 0.0) continue;
      double factor = 1.0;
      const double total = col + row;
      double target = row / radix;
      while (col < target) {
        factor *= radix;
        col *= radix_sq;
      }
      target = row * radix;
      while (col >= target) {
        factor /= radix;
        col /= radix_sq;
      }
      if ((col + row) / factor < 0.95 * total) {
        converged = false;
        m.row(i) /= factor;
        m.col(i) *= factor;
      }
    }
  }
}

}  // namespace

std::vector<complex_t> target_polynomial(const symmetric_state& state) {
  validate(state);
  const int n = state.n;
  std::vector<complex_t> coeffs(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    const double scale =
        std::sqrt(factorial<double>(i) * factorial<double>(n - i));
    coeffs[static_cast<std::size_t>(i)] =
        state.amps[static_cast<std::size_t>(i)] / scale;
  }
  return coeffs;
}

std::vector<complex_t> polynomial_roots(const std::vector<complex_t>& coeffs) {
  double largest = 0.0;
  for (const complex_t& c : coeffs) largest = std::max(largest, std::abs(c));
  if (largest == 0.0) return {};

  int degree = static_cast<int>(coeffs.size()) - 1;
  while (degree > 0 &&
         std::abs(coeffs[static_cast<std::size_t>(degree)]) <=
             kCoefficientCutoff * largest) {
    --degree;
  }
  if (degree == 0) return {};

  // Monic reduction, then the companion matrix of the reduced polynomial.
  const complex_t lead = coeffs[static_cast<std::size_t>(degree)];
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(degree, degree);
  for (int r = 1; r < degree; ++r) companion(r, r - 1) = complex_t{1.0, 0.0};
  for (int r = 0; r < degree; ++r) {
    companion(r, degree - 1) = -coeffs[static_cast<std::size_t>(r)] / lead;
  }
  balance(companion);

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  if (solver.info() != Eigen::Success) {
    throw numeric_error("polynomial_roots: eigenvalue iteration failed");
  }

  std::vector<complex_t> roots;
  roots.reserve(static_cast<std::size_t>(degree));
  std::vector<complex_t> reduced(coeffs.begin(),
                                 coeffs.begin() + degree + 1);
  for (int r = 0; r < degree; ++r) {
    complex_t root = solver.eigenvalues()(r);
    const auto [value, derivative] = evaluate_with_derivative(reduced, root);
    if (std::abs(derivative) > 0.0) {
      const complex_t polished = root - value / derivative;
      if (std::isfinite(polished.real()) && std::isfinite(polished.imag())) {
        const auto [new_value, unused] =
            evaluate_with_derivative(reduced, polished);
        if (std::abs(new_value) <= std::abs(value)) root = polished;
      }
    }
    roots.push_back(root);
  }
  // Deterministic order: by real part, then imaginary part.
  std::sort(roots.begin(), roots.end(), [](complex_t a, complex_t b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return roots;
}

preparation_schedule compile_schedule(const symmetric_state& target) {
  validate(target);
  if (norm(target) <= 0.0) {
    throw degenerate_error("compile_schedule: target is the zero vector");
  }
  const std::vector<complex_t> poly = target_polynomial(target);
  preparation_schedule schedule;
  schedule.finite_roots = polynomial_roots(poly);
  schedule.infinity_count =
      target.n - static_cast<int>(schedule.finite_roots.size());

  schedule.steps.reserve(static_cast<std::size_t>(target.n));
  for (const complex_t& root : schedule.finite_roots) {
    const double scale = 1.0 / std::sqrt(1.0 + std::norm(root));
    schedule.steps.push_back(
        gate_params{-root * scale, complex_t{scale, 0.0}});
  }
  for (int k = 0; k < schedule.infinity_count; ++k) {
    schedule.steps.push_back(
        gate_params{complex_t{1.0, 0.0}, complex_t{0.0, 0.0}});
  }
  return schedule;
}

schedule_run run_schedule(const preparation_schedule& schedule, run_mode mode,
                          rng* rand) {
  if (mode == run_mode::sampled && rand == nullptr) {
    throw domain_error("run_schedule: sampled mode needs a generator");
  }
  schedule_run run;
  run.state = vacuum_state();
  for (std::size_t k = 0; k < schedule.steps.size(); ++k) {
    const gate_params& g = schedule.steps[k];
    if (mode == run_mode::exact_postselect) {
      const protocol2_result result = protocol2_exact(run.state, g);
      if (result.success_probability <= 0.0) {
        throw degenerate_error("run_schedule: step " + std::to_string(k + 1) +
                               " has zero success probability");
      }
      run.probability *= result.success_probability;
      run.state = result.success_state;
    } else {
      const protocol_outcome outcome = protocol2_sample(run.state, g, *rand);
      if (!outcome.success) {
        run.failed = true;
        run.failure_step = static_cast<int>(k) + 1;
        return run;
      }
      run.probability *= outcome.probability;
      run.state = *outcome.state;
    }
  }
  return run;
}

}  // namespace dickesim
