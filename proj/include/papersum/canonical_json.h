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

#ifndef PAPERSUM_CANONICAL_JSON_H_
#define PAPERSUM_CANONICAL_JSON_H_

#include <string>
#include <string_view>

#include "json.hpp"

namespace papersum {

using Json = nlohmann::json;

// Byte-stable serialization: object keys sorted, two-space indentation,
// floating-point numbers printed with exactly `decimals` fractional digits
// (negative zero printed as zero), integers printed as integers, trailing
// newline.
std::string write_canonical(const Json& value, int decimals);

// Parses JSON text; malformed input raises SchemaError naming `what`.
Json parse_json(std::string_view bytes, std::string_view what);

// Typed accessors used by the schema loaders. `path` is the dotted location
// reported in SchemaError.
const Json& require_field(const Json& obj, const char* key,
                          const std::string& path);
double require_number(const Json& obj, const char* key,
                      const std::string& path);
std::string require_string(const Json& obj, const char* key,
                           const std::string& path);
int require_int(const Json& obj, const char* key, const std::string& path);
const Json& require_array(const Json& obj, const char* key,
                          const std::string& path);
void require_object(const Json& value, const std::string& path);

}  // namespace papersum

#endif  // PAPERSUM_CANONICAL_JSON_H_
