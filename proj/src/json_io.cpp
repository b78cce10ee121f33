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

#include "dickesim/json_io.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

namespace dickesim {

json_value json_value::boolean(bool b) {
  json_value v;
  v.kind_ = kind::boolean;
  v.bool_ = b;
  return v;
}

json_value json_value::number(double x) {
  json_value v;
  v.kind_ = kind::number;
  v.num_ = x;
  return v;
}

json_value json_value::integer(std::int64_t i) {
  json_value v;
  v.kind_ = kind::integer;
  v.int_ = i;
  return v;
}

json_value json_value::string(std::string s) {
  json_value v;
  v.kind_ = kind::string;
  v.str_ = std::move(s);
  return v;
}

json_value json_value::array() {
  json_value v;
  v.kind_ = kind::array;
  return v;
}

json_value json_value::object() {
  json_value v;
  v.kind_ = kind::object;
  return v;
}

json_value json_value::complex_pair(const complex_t& z) {
  json_value v = array();
  v.push(number(z.real()));
  v.push(number(z.imag()));
  return v;
}

json_value& json_value::push(json_value v) {
  if (kind_ != kind::array) throw error("json_value: push on a non-array");
  items_.push_back(std::move(v));
  return *this;
}

json_value& json_value::set(const std::string& key, json_value v) {
  if (kind_ != kind::object) throw error("json_value: set on a non-object");
  fields_.emplace_back(key, std::move(v));
  return *this;
}

std::string format_real(double x) {
  if (!std::isfinite(x)) {
    // JSON has no literal for these; emitting them would be a bug upstream.
    throw numeric_error("format_real: non-finite value");
  }
  if (x == 0.0) x = 0.0;  // canonicalize the sign of zero
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

namespace {

void write_escaped(std::string& out, const std::string& s) {
  out.push_back('"');
  for (char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out.push_back(c);
        }
    }
  }
  out.push_back('"');
}

void indent(std::string& out, int depth) {
  out.append(static_cast<std::size_t>(depth) * 2, ' ');
}

}  // namespace

void json_value::write(std::string& out, int depth) const {
  switch (kind_) {
    case kind::null:
      out += "null";
      break;
    case kind::boolean:
      out += bool_ ? "true" : "false";
      break;
    case kind::number:
      out += format_real(num_);
      break;
    case kind::integer:
      out += std::to_string(int_);
      break;
    case kind::string:
      write_escaped(out, str_);
      break;
    case kind::array: {
      if (items_.empty()) {
        out += "[]";
        break;
      }
      out += "[\n";
      for (std::size_t i = 0; i < items_.size(); ++i) {
        indent(out, depth + 1);
        items_[i].write(out, depth + 1);
        if (i + 1 < items_.size()) out += ",";
        out += "\n";
      }
      indent(out, depth);
      out += "]";
      break;
    }
    case kind::object: {
      if (fields_.empty()) {
        out += "{}";
        break;
      }
      out += "{\n";
      for (std::size_t i = 0; i < fields_.size(); ++i) {
        indent(out, depth + 1);
        write_escaped(out, fields_[i].first);
        out += ": ";
        fields_[i].second.write(out, depth + 1);
        if (i + 1 < fields_.size()) out += ",";
        out += "\n";
      }
      indent(out, depth);
      out += "}";
      break;
    }
  }
}

std::string json_value::dump() const {
  std::string out;
  write(out, 0);
  out += "\n";
  return out;
}

json_value state_to_value(const symmetric_state& state) {
  validate(state);
  json_value amps = json_value::array();
  for (const complex_t& a : state.amps) amps.push(json_value::complex_pair(a));
  json_value doc = json_value::object();
  doc.set("format_version", json_value::integer(kFormatVersion));
  doc.set("n", json_value::integer(state.n));
  doc.set("amplitudes", std::move(amps));
  return doc;
}

std::string state_to_json(const symmetric_state& state) {
  return state_to_value(state).dump();
}

symmetric_state state_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("state JSON: ") + e.what());
  }
  if (!doc.is_object()) throw parse_error("state JSON: top level must be an object");
  if (doc.contains("format_version") &&
      doc["format_version"] != kFormatVersion) {
    throw parse_error("state JSON: unsupported format_version");
  }
  if (!doc.contains("n") || !doc["n"].is_number_integer()) {
    throw parse_error("state JSON: missing integer field \"n\"");
  }
  const int n = doc["n"].get<int>();
  if (n < 0) throw parse_error("state JSON: \"n\" must be non-negative");
  if (!doc.contains("amplitudes") || !doc["amplitudes"].is_array()) {
    throw parse_error("state JSON: missing array field \"amplitudes\"");
  }
  const auto& amps = doc["amplitudes"];
  if (amps.size() != static_cast<std::size_t>(n) + 1) {
    throw parse_error("state JSON: expected " + std::to_string(n + 1) +
                      " amplitudes, got " + std::to_string(amps.size()));
  }
  symmetric_state state;
  state.n = n;
  state.amps.reserve(amps.size());
  for (const auto& entry : amps) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
        !entry[1].is_number()) {
      throw parse_error("state JSON: each amplitude must be a [re, im] pair");
    }
    state.amps.emplace_back(entry[0].get<double>(), entry[1].get<double>());
  }
  state.normalized = std::abs(norm(state) - 1.0) <= 1e-9;
  return state;
}

}  // namespace dickesim
