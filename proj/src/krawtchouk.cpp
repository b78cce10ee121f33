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

#include <string>

namespace dickesim {

void validate(const krawtchouk_params& params) {
  if (!(params.p > 0.0 && params.p < 1.0)) {
    throw domain_error("krawtchouk: p must lie strictly inside (0, 1), got " +
                       std::to_string(params.p));
  }
  if (params.n < 0) {
    throw domain_error("krawtchouk: n must be non-negative, got " +
                       std::to_string(params.n));
  }
}

double krawtchouk(int i, double x, const krawtchouk_params& params) {
  validate(params);
  if (i < 0 || i > params.n) {
    throw domain_error("krawtchouk: degree " + std::to_string(i) +
                       " outside 0 .. " + std::to_string(params.n));
  }
  return detail::krawtchouk_all<double>(i, x, params.p, params.n)[i];
}

std::vector<double> krawtchouk_row(int j, const krawtchouk_params& params) {
  validate(params);
  if (j < 0 || j > params.n) {
    throw domain_error("krawtchouk_row: point " + std::to_string(j) +
                       " outside 0 .. " + std::to_string(params.n));
  }
  return detail::krawtchouk_all<double>(params.n, static_cast<double>(j),
                                        params.p, params.n);
}

}  // namespace dickesim
