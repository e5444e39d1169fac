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

// PDF object model and tokenizer. Internal to the ingest module.

#ifndef PAPERSUM_PDF_OBJECT_H_
#define PAPERSUM_PDF_OBJECT_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace papersum::pdf {

struct Object;

struct Null {};
struct Name {
  std::string value;
};
// Raw bytes of a literal or hex string.
struct String {
  std::string bytes;
};
struct Ref {
  int num = 0;
  int gen = 0;
};
// Bare keyword (operators in content streams, "true"/"false" are folded).
struct Keyword {
  std::string value;
};
using Array = std::vector<Object>;
using Dict = std::vector<std::pair<std::string, Object>>;
struct Stream {
  std::shared_ptr<const Dict> dict;
  std::string raw;  // still encoded
};

struct Object {
  std::variant<Null, bool, std::int64_t, double, Name, String, Ref, Keyword,
               std::shared_ptr<const Array>, std::shared_ptr<const Dict>,
               Stream>
      value;

  bool is_null() const { return std::holds_alternative<Null>(value); }
  bool is_number() const {
    return std::holds_alternative<std::int64_t>(value) ||
           std::holds_alternative<double>(value);
  }
  std::optional<double> number() const;
  std::optional<std::int64_t> integer() const;
  const std::string* name() const;
  const std::string* string_bytes() const;
  const Ref* ref() const;
  const std::string* keyword() const;
  const Array* array() const;
  // Dictionary of a dict object or of a stream object.
  const Dict* dict() const;
  const Stream* stream() const;
};

const Object* lookup(const Dict& dict, std::string_view key);

// Tokenizes and parses PDF syntax from a byte buffer.
class Lexer {
 public:
  explicit Lexer(std::string_view data, std::size_t pos = 0)
      : data_(data), pos_(pos) {}

  std::size_t pos() const { return pos_; }
  void set_pos(std::size_t pos) { pos_ = pos; }
  bool at_end();
  std::string_view data() const { return data_; }

  // Parses one object. Integer pairs followed by 'R' become Refs when
  // `allow_refs` is set. Keywords are returned as Keyword. Returns nullopt
  // at end of input. Throws IngestError on malformed syntax.
  std::optional<Object> next(bool allow_refs = true);

  void skip_whitespace();

  static bool is_whitespace(char c);
  static bool is_delimiter(char c);

 private:
  Object parse_number_or_ref(bool allow_refs);
  Object parse_literal_string();
  Object parse_hex_string();
  Object parse_name();
  Object parse_array(bool allow_refs);
  Object parse_dict(bool allow_refs);
  std::string read_regular();

  std::string_view data_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

}  // namespace papersum::pdf

#endif  // PAPERSUM_PDF_OBJECT_H_
