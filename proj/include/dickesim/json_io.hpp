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
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "dickesim/dicke.hpp"
#include "dickesim/types.hpp"

namespace dickesim {

// Version stamped into every document this library emits.
inline constexpr int kFormatVersion = 1;

// Minimal JSON document model for *output*.  Keys keep insertion order and
// every real is printed with 17 significant digits, so that emitted files
// are byte-stable across runs and round-trip through a double losslessly.
// (Parsing is a different job and is done with an ordinary JSON parser.)
class json_value {
 public:
  json_value() : kind_(kind::null) {}

  static json_value null() { return json_value(); }
  static json_value boolean(bool b);
  static json_value number(double x);
  static json_value integer(std::int64_t i);
  static json_value string(std::string s);
  static json_value array();
  static json_value object();

  // [re, im] pair, the fixed encoding of one complex number.
  static json_value complex_pair(const complex_t& z);

  bool is_null() const { return kind_ == kind::null; }

  // Appends to an array value.
  json_value& push(json_value v);
  // Appends a key to an object value; keys are emitted in insertion order.
  json_value& set(const std::string& key, json_value v);

  // Serializes with two-space indentation and a trailing newline.
  std::string dump() const;

 private:
  enum class kind { null, boolean, number, integer, string, array, object };

  void write(std::string& out, int depth) const;

  kind kind_;
  bool bool_ = false;
  double num_ = 0.0;
  std::int64_t int_ = 0;
  std::string str_;
  std::vector<json_value> items_;
  std::vector<std::pair<std::string, json_value>> fields_;
};

// The double -> decimal conversion used everywhere: printf "%.17g".
std::string format_real(double x);

// {"format_version": 1, "n": ..., "amplitudes": [[re, im], ...]}
json_value state_to_value(const symmetric_state& state);
std::string state_to_json(const symmetric_state& state);

// Parses the document above.  Throws parse_error on malformed input,
// unsupported format_version, or an amplitude list of the wrong length.
// The normalized flag is set from the parsed norm.
symmetric_state state_from_json(const std::string& text);

}  // namespace dickesim
