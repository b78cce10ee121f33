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

#include <vector>

#include "dickesim/types.hpp"

namespace dickesim {

// Parameters of a finite Krawtchouk family: n + 1 polynomials
// K_0 .. K_n orthogonal against the binomial weight binom(n,x) p^x (1-p)^(n-x)
// on the points x = 0 .. n.
struct krawtchouk_params {
  double p = 0.5;  // weight parameter, must lie strictly inside (0, 1)
  int n = 0;       // top degree / number of points minus one, must be >= 0
};

// Throws domain_error unless 0 < p < 1 and n >= 0.
void validate(const krawtchouk_params& params);

// binom(n, k) computed multiplicatively; exact in the range used here.
// Returns 0 for k < 0 or k > n.
template <typename Real = double>
Real binomial(int n, int k) {
  if (k < 0 || k > n) return Real(0);
  if (k > n - k) k = n - k;
  Real r(1);
  for (int j = 1; j <= k; ++j) r = r * Real(n - k + j) / Real(j);
  return r;
}

template <typename Real = double>
Real factorial(int n) {
  Real r(1);
  for (int j = 2; j <= n; ++j) r *= Real(j);
  return r;
}

namespace detail {

// Values K_0(x) .. K_top(x) by the three-term recurrence in the degree:
//
//   -x K_i = p (n - i) K_{i+1} - [p (n - i) + i (1 - p)] K_i + i (1 - p) K_{i-1}
//
// Scalar may be double, long double, or std::complex of either; the
// recurrence only needs p (n - i) != 0 for i < top, which holds whenever
// p != 0 and top <= n.  Complex p shows up when evaluating closed-form
// fixed-point coefficients; higher precision shows up in convergence
// measurements.
template <typename Scalar>
std::vector<Scalar> krawtchouk_all(int top, Scalar x, Scalar p, int n) {
  std::vector<Scalar> k(static_cast<std::size_t>(top) + 1);
  k[0] = Scalar(1);
  if (top >= 1) k[1] = Scalar(1) - x / (p * Scalar(n));
  for (int i = 1; i < top; ++i) {
    const Scalar lead = p * Scalar(n - i);
    const Scalar mid = lead + Scalar(i) * (Scalar(1) - p);
    const Scalar trail = Scalar(i) * (Scalar(1) - p);
    k[i + 1] = ((mid - x) * k[i] - trail * k[i - 1]) / lead;
  }
  return k;
}

}  // namespace detail

// K_i(x) for the given family.  x may be any real point, not just a grid
// point.  Throws domain_error if i is outside 0 .. n.
double krawtchouk(int i, double x, const krawtchouk_params& params);

// The full column (K_0(j), ..., K_n(j)) at the grid point j in 0 .. n.
std::vector<double> krawtchouk_row(int j, const krawtchouk_params& params);

}  // namespace dickesim
