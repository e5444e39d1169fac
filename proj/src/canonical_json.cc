// Copyright 2026 The papersum Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "papersum/canonical_json.h"

#include <cmath>

#include <fmt/format.h>

#include "papersum/errors.h"

namespace papersum {
namespace {

std::string format_float(double v, int decimals) {
  if (!std::isfinite(v)) {
    throw InvalidArgument("cannot serialize non-finite number");
  }
  std::string s = fmt::format("{:.{}f}", v, decimals);
  // "-0.000" and friends.
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) {
    s.erase(0, 1);
  }
  return s;
}

void write(const Json& v, int decimals, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (v.type()) {
    case Json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      // nlohmann::json objects are std::map backed, so iteration is sorted.
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += inner;
        out += Json(it.key()).dump(-1, ' ', false,
                                   Json::error_handler_t::replace);
        out += ": ";
        write(it.value(), decimals, indent + 1, out);
      }
      out += "\n" + pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      bool first = true;
      for (const auto& item : v) {
        if (!first) out += ",\n";
        first = false;
        out += inner;
        write(item, decimals, indent + 1, out);
      }
      out += "\n" + pad + "]";
      return;
    }
    case Json::value_t::number_float:
      out += format_float(v.get<double>(), decimals);
      return;
    default:
      out += v.dump(-1, ' ', false, Json::error_handler_t::replace);
      return;
  }
}

}  // namespace

std::string write_canonical(const Json& value, int decimals) {
  std::string out;
  write(value, decimals, 0, out);
  out += "\n";
  return out;
}

Json parse_json(std::string_view bytes, std::string_view what) {
  try {
    return Json::parse(bytes.begin(), bytes.end());
  } catch (const Json::parse_error& e) {
    throw SchemaError(std::string(what), std::string("malformed JSON: ") +
                                             e.what());
  }
}

void require_object(const Json& value, const std::string& path) {
  if (!value.is_object()) throw SchemaError(path, "expected an object");
}

const Json& require_field(const Json& obj, const char* key,
                          const std::string& path) {
  require_object(obj, path);
  auto it = obj.find(key);
  const std::string where = path.empty() ? key : path + "." + key;
  if (it == obj.end()) throw SchemaError(where, "missing required field");
  return *it;
}

double require_number(const Json& obj, const char* key,
                      const std::string& path) {
  const Json& v = require_field(obj, key, path);
  if (!v.is_number()) {
    throw SchemaError(path.empty() ? key : path + "." + key,
                      "expected a number");
  }
  const double d = v.get<double>();
  if (!std::isfinite(d)) {
    throw SchemaError(path.empty() ? key : path + "." + key,
                      "expected a finite number");
  }
  return d;
}

std::string require_string(const Json& obj, const char* key,
                           const std::string& path) {
  const Json& v = require_field(obj, key, path);
  if (!v.is_string()) {
    throw SchemaError(path.empty() ? key : path + "." + key,
                      "expected a string");
  }
  return v.get<std::string>();
}

int require_int(const Json& obj, const char* key, const std::string& path) {
  const Json& v = require_field(obj, key, path);
  if (!v.is_number_integer()) {
    throw SchemaError(path.empty() ? key : path + "." + key,
                      "expected an integer");
  }
  return v.get<int>();
}

const Json& require_array(const Json& obj, const char* key,
                          const std::string& path) {
  const Json& v = require_field(obj, key, path);
  if (!v.is_array()) {
    throw SchemaError(path.empty() ? key : path + "." + key,
                      "expected an array");
  }
  return v;
}

}  // namespace papersum
