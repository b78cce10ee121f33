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

#include "dickesim/krawtchouk.hpp"

#include <cmath>
#include <vector>

#include <doctest.h>

#include "dickesim/types.hpp"

namespace {

using dickesim::binomial;
using dickesim::krawtchouk;
using dickesim::krawtchouk_params;
using dickesim::krawtchouk_row;

// Independent oracle: the terminating hypergeometric series
//   K_i(x) = sum_{k=0}^{i} (-i)_k (-x)_k / ((-n)_k k!) p^{-k}
// evaluated term by term, no recurrence involved.
double series_oracle(int i, double x, double p, int n) {
  double sum = 1.0;
  double term = 1.0;
  for (int k = 0; k < i; ++k) {
    term *= (-i + k) * (-x + k) / ((-n + k) * (k + 1.0) * p);
    sum += term;
  }
  return sum;
}

}  // namespace

TEST_CASE("binomial coefficients are exact integers in range") {
  CHECK(binomial(0, 0) == 1.0);
  CHECK(binomial(5, 2) == 10.0);
  CHECK(binomial(10, 5) == 252.0);
  CHECK(binomial(20, 10) == 184756.0);
  CHECK(binomial(6, -1) == 0.0);
  CHECK(binomial(6, 7) == 0.0);
  CHECK(binomial<long double>(30, 15) == 155117520.0L);
}

TEST_CASE("krawtchouk matches the series oracle") {
  for (const double p : {0.3, 0.5, 0.7}) {
    for (int n = 1; n <= 12; ++n) {
      const krawtchouk_params params{p, n};
      for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= n; ++j) {
          const double expected = series_oracle(i, j, p, n);
          CHECK(krawtchouk(i, static_cast<double>(j), params) ==
                doctest::Approx(expected).epsilon(1e-10));
        }
        // Off-grid arguments are legal: the polynomial is defined everywhere.
        const double x = 0.5 + 0.25 * i;
        CHECK(krawtchouk(i, x, params) ==
              doctest::Approx(series_oracle(i, x, p, n)).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("low-degree members have their closed forms") {
  const krawtchouk_params params{0.25, 7};
  for (int j = 0; j <= 7; ++j) {
    const double x = j;
    CHECK(krawtchouk(0, x, params) == 1.0);
    CHECK(krawtchouk(1, x, params) ==
          doctest::Approx(1.0 - x / (0.25 * 7)).epsilon(1e-12));
  }
  // K_i(0) = 1 for every degree: only the k = 0 series term survives.
  for (int i = 0; i <= 7; ++i) {
    CHECK(krawtchouk(i, 0.0, params) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("self-duality on the grid") {
  for (const double p : {0.3, 0.5, 0.7}) {
    for (int n = 1; n <= 10; ++n) {
      const krawtchouk_params params{p, n};
      for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= n; ++j) {
          const double lhs = krawtchouk(i, static_cast<double>(j), params);
          const double rhs = krawtchouk(j, static_cast<double>(i), params);
          const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
          // The recurrence keeps about eleven digits at n = 10 away from
          // p = 1/2, where the values span several orders of magnitude.
          CHECK(std::abs(lhs - rhs) / scale <= 1e-11);
        }
      }
    }
  }
}

TEST_CASE("binomially weighted orthogonality at p = 1/2") {
  const int n = 9;
  const krawtchouk_params params{0.5, n};
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      double acc = 0.0;
      for (int x = 0; x <= n; ++x) {
        acc += binomial(n, x) * std::exp2(-n) *
               krawtchouk(i, static_cast<double>(x), params) *
               krawtchouk(j, static_cast<double>(x), params);
      }
      const double expected = i == j ? 1.0 / binomial(n, i) : 0.0;
      CHECK(acc == doctest::Approx(expected).epsilon(1e-10));
    }
  }
}

TEST_CASE("three-term recurrence residual stays at rounding level") {
  for (const double p : {0.3, 0.5, 0.7}) {
    const int n = 14;
    const krawtchouk_params params{p, n};
    for (int i = 1; i < n; ++i) {
      for (int j = 0; j <= n; ++j) {
        const double x = j + 0.2;
        const double prev = krawtchouk(i - 1, x, params);
        const double curr = krawtchouk(i, x, params);
        const double next = krawtchouk(i + 1, x, params);
        const double lead = p * (n - i);
        const double trail = i * (1.0 - p);
        const double residual =
            lead * next - ((lead + trail - x) * curr - trail * prev);
        const double scale =
            std::max({1.0, std::abs(lead * next), std::abs(curr)});
        CHECK(std::abs(residual) / scale <= 1e-12);
      }
    }
  }
}

TEST_CASE("krawtchouk_row returns the full column at a grid point") {
  const krawtchouk_params params{0.5, 6};
  for (int j = 0; j <= 6; ++j) {
    const std::vector<double> row = krawtchouk_row(j, params);
    REQUIRE(row.size() == 7);
    for (int i = 0; i <= 6; ++i) {
      CHECK(row[static_cast<std::size_t>(i)] ==
            doctest::Approx(krawtchouk(i, static_cast<double>(j), params))
                .epsilon(1e-13));
    }
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(krawtchouk(0, 0.0, krawtchouk_params{0.0, 3}),
                  dickesim::domain_error);
  CHECK_THROWS_AS(krawtchouk(0, 0.0, krawtchouk_params{1.0, 3}),
                  dickesim::domain_error);
  CHECK_THROWS_AS(krawtchouk(0, 0.0, krawtchouk_params{0.5, -1}),
                  dickesim::domain_error);
  CHECK_THROWS_AS(krawtchouk(-1, 0.0, krawtchouk_params{0.5, 3}),
                  dickesim::domain_error);
  CHECK_THROWS_AS(krawtchouk(4, 0.0, krawtchouk_params{0.5, 3}),
                  dickesim::domain_error);
  CHECK_THROWS_AS(krawtchouk_row(7, krawtchouk_params{0.5, 6}),
                  dickesim::domain_error);
}
