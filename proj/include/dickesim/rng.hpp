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

#include <cstdint>
#include <random>

namespace dickesim {

// Seeded random stream used by every sampling code path.
//
// The engine is std::mt19937_64, whose output sequence is pinned by the
// C++ standard, and uniform doubles are built directly from the top 53 bits
// of each draw; std::uniform_real_distribution is avoided because its
// algorithm is implementation-defined.  The same seed therefore reproduces
// the same run on any platform, which the logs advertise through
// `algorithm_id`.
class rng {
 public:
  static constexpr const char* algorithm_id = "mt19937_64+u53";

  explicit rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  // A fresh nondeterministic seed for interactive use; the caller is
  // expected to log `seed()` so the run can be replayed.
  static rng from_entropy() {
    std::random_device device;
    const std::uint64_t seed =
        (static_cast<std::uint64_t>(device()) << 32) ^
        static_cast<std::uint64_t>(device());
    return rng(seed);
  }

  std::uint64_t seed() const { return seed_; }

  std::uint64_t raw() { return engine_(); }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  bool bernoulli(double p) { return uniform() < p; }

  // An independent child stream, seeded from this stream's next output.
  rng split() { return rng(engine_()); }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace dickesim
