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
#include <complex>
#include <string>

#include <doctest.h>

#include "dickesim/checks.hpp"
#include "dickesim/json_io.hpp"
#include "dickesim/rng.hpp"
#include "dickesim/types.hpp"

namespace {

using dickesim::complex_t;
using dickesim::symmetric_state;

}  // namespace

TEST_CASE("dicke_state builds weight basis vectors") {
  const symmetric_state s = dickesim::dicke_state(4, 2);
  REQUIRE(s.n == 4);
  REQUIRE(s.amps.size() == 5);
  CHECK(s.normalized);
  for (int i = 0; i <= 4; ++i) {
    CHECK(s.amps[static_cast<std::size_t>(i)] ==
          (i == 2 ? complex_t{1.0, 0.0} : complex_t{0.0, 0.0}));
  }
  CHECK(dickesim::vacuum_state().n == 0);
  CHECK(dickesim::vacuum_state().amps[0] == complex_t{1.0, 0.0});
  CHECK_THROWS_AS(dickesim::dicke_state(3, 4), dickesim::domain_error);
  CHECK_THROWS_AS(dickesim::dicke_state(3, -1), dickesim::domain_error);
  CHECK_THROWS_AS(dickesim::dicke_state(-1, 0), dickesim::domain_error);
}

TEST_CASE("validate rejects mismatched amplitude counts") {
  symmetric_state s;
  s.n = 2;
  s.amps = {complex_t{1.0, 0.0}, complex_t{0.0, 0.0}};
  CHECK_THROWS_AS(dickesim::validate(s), dickesim::dimension_error);
  s.amps.push_back(complex_t{0.0, 0.0});
  CHECK_NOTHROW(dickesim::validate(s));
}

TEST_CASE("inner product conjugates its first argument") {
  symmetric_state a = dickesim::dicke_state(1, 0);
  a.amps = {complex_t{0.0, 1.0}, complex_t{0.0, 0.0}};  // i |0>
  const symmetric_state b = dickesim::dicke_state(1, 0);
  CHECK(dickesim::inner_product(a, b) == complex_t{0.0, -1.0});
  CHECK(dickesim::inner_product(b, a) == complex_t{0.0, 1.0});
  const symmetric_state c = dickesim::dicke_state(2, 0);
  CHECK_THROWS_AS(dickesim::inner_product(a, c), dickesim::dimension_error);
}

TEST_CASE("fidelity is a ray invariant") {
  dickesim::rng rand(11);
  const symmetric_state psi = dickesim::random_state(5, rand);
  symmetric_state rotated = psi;
  const complex_t phase = std::polar(3.7, 1.234);  // scale and phase
  for (auto& amp : rotated.amps) amp *= phase;
  rotated.normalized = false;
  CHECK(dickesim::fidelity(psi, rotated) == doctest::Approx(1.0).epsilon(1e-12));

  const symmetric_state other = dickesim::random_state(5, rand);
  const double f = dickesim::fidelity(psi, other);
  CHECK(f >= 0.0);
  CHECK(f <= 1.0 + 1e-12);

  symmetric_state zero;
  zero.n = 5;
  zero.amps.assign(6, complex_t{0.0, 0.0});
  CHECK_THROWS_AS(dickesim::fidelity(psi, zero), dickesim::degenerate_error);
}

TEST_CASE("normalize returns the factored-out norm") {
  symmetric_state s;
  s.n = 1;
  s.amps = {complex_t{3.0, 0.0}, complex_t{4.0, 0.0}};
  const auto [unit, factor] = dickesim::normalize(s);
  CHECK(factor == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(unit.normalized);
  CHECK(std::abs(unit.amps[0] - complex_t{0.6, 0.0}) <= 1e-15);
  CHECK(std::abs(unit.amps[1] - complex_t{0.8, 0.0}) <= 1e-15);

  symmetric_state zero;
  zero.n = 0;
  zero.amps = {complex_t{0.0, 0.0}};
  CHECK_THROWS_AS(dickesim::normalize(zero), dickesim::degenerate_error);
}

TEST_CASE("splitting off the last qubit of a weight basis state") {
  // |i of n> = sqrt(i/n) |i-1 of n-1>|1> + sqrt((n-i)/n) |i of n-1>|0>.
  const auto [one_part, zero_part] =
      dickesim::last_qubit_split_coeffs({2, 1});
  CHECK(one_part == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(zero_part == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  const auto [top_one, top_zero] = dickesim::last_qubit_split_coeffs({3, 3});
  CHECK(top_one == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(top_zero == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("state JSON round-trips bit-exactly") {
  dickesim::rng rand(99);
  for (int n = 0; n <= 8; ++n) {
    const symmetric_state original = dickesim::random_state(n, rand);
    const std::string text = dickesim::state_to_json(original);
    const symmetric_state parsed = dickesim::state_from_json(text);
    REQUIRE(parsed.n == n);
    CHECK(parsed.normalized);
    for (std::size_t k = 0; k < original.amps.size(); ++k) {
      // 17 significant digits make the decimal detour lossless.
      CHECK(parsed.amps[k].real() == original.amps[k].real());
      CHECK(parsed.amps[k].imag() == original.amps[k].imag());
    }
  }
}

TEST_CASE("state JSON parsing rejects malformed documents") {
  using dickesim::state_from_json;
  CHECK_THROWS_AS(state_from_json("not json"), dickesim::parse_error);
  CHECK_THROWS_AS(state_from_json("[1,2,3]"), dickesim::parse_error);
  CHECK_THROWS_AS(
      state_from_json(R"({"format_version":99,"n":0,"amplitudes":[[1,0]]})"),
      dickesim::parse_error);
  CHECK_THROWS_AS(
      state_from_json(R"({"format_version":1,"n":1,"amplitudes":[[1,0]]})"),
      dickesim::parse_error);
  CHECK_THROWS_AS(
      state_from_json(R"({"format_version":1,"n":0,"amplitudes":[[1]]})"),
      dickesim::parse_error);
  CHECK_THROWS_AS(
      state_from_json(R"({"format_version":1,"n":-2,"amplitudes":[]})"),
      dickesim::parse_error);
  CHECK_THROWS_AS(
      state_from_json(R"({"format_version":1,"amplitudes":[[1,0]]})"),
      dickesim::parse_error);
  // Missing format_version is accepted as the current version.
  const symmetric_state s =
      state_from_json(R"({"n":1,"amplitudes":[[0.6,0],[0,0.8]]})");
  CHECK(s.n == 1);
  CHECK(s.normalized);
}

TEST_CASE("the normalized flag follows the parsed norm") {
  const symmetric_state unit = dickesim::state_from_json(
      R"({"format_version":1,"n":0,"amplitudes":[[1,0]]})");
  CHECK(unit.normalized);
  const symmetric_state stretched = dickesim::state_from_json(
      R"({"format_version":1,"n":0,"amplitudes":[[2,0]]})");
  CHECK_FALSE(stretched.normalized);
}
