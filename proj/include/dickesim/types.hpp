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

#include <complex>
#include <stdexcept>
#include <string>

namespace dickesim {

using complex_t = std::complex<double>;

// Base class for everything this library throws on purpose.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// An argument is outside the mathematical domain of an operation
// (index out of range, parameter outside its interval, wrong mode...).
class domain_error : public error {
 public:
  explicit domain_error(const std::string& msg) : error(msg) {}
};

// Two states (or a state and an operator) that live in different spaces
// were combined.
class dimension_error : public error {
 public:
  explicit dimension_error(const std::string& msg) : error(msg) {}
};

// A zero vector appeared where a ray was required (normalizing the zero
// state, post-selecting on a branch of probability zero, ...).
class degenerate_error : public error {
 public:
  explicit degenerate_error(const std::string& msg) : error(msg) {}
};

// The composite operator has a degenerate spectrum and no fixed-point
// basis can be built from it.
class spectral_error : public error {
 public:
  explicit spectral_error(const std::string& msg) : error(msg) {}
};

// A size cap protecting full-statevector work was exceeded.
class size_error : public error {
 public:
  explicit size_error(const std::string& msg) : error(msg) {}
};

// A numeric validation failed beyond its documented tolerance.
class numeric_error : public error {
 public:
  explicit numeric_error(const std::string& msg) : error(msg) {}
};

// Malformed input given to a parser (JSON documents, CLI values).
class parse_error : public error {
 public:
  explicit parse_error(const std::string& msg) : error(msg) {}
};

}  // namespace dickesim
