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

#include "pdf/object.h"

#include <cctype>
#include <charconv>
#include <cstdlib>

#include "papersum/errors.h"

namespace papersum::pdf {
namespace {

constexpr int kMaxNesting = 256;

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

std::optional<double> Object::number() const {
  if (auto* i = std::get_if<std::int64_t>(&value)) {
    return static_cast<double>(*i);
  }
  if (auto* d = std::get_if<double>(&value)) return *d;
  return std::nullopt;
}

std::optional<std::int64_t> Object::integer() const {
  if (auto* i = std::get_if<std::int64_t>(&value)) return *i;
  if (auto* d = std::get_if<double>(&value)) {
    return static_cast<std::int64_t>(*d);
  }
  return std::nullopt;
}

const std::string* Object::name() const {
  if (auto* n = std::get_if<Name>(&value)) return &n->value;
  return nullptr;
}

const std::string* Object::string_bytes() const {
  if (auto* s = std::get_if<String>(&value)) return &s->bytes;
  return nullptr;
}

const Ref* Object::ref() const { return std::get_if<Ref>(&value); }

const std::string* Object::keyword() const {
  if (auto* k = std::get_if<Keyword>(&value)) return &k->value;
  return nullptr;
}

const Array* Object::array() const {
  if (auto* a = std::get_if<std::shared_ptr<const Array>>(&value)) {
    return a->get();
  }
  return nullptr;
}

const Dict* Object::dict() const {
  if (auto* d = std::get_if<std::shared_ptr<const Dict>>(&value)) {
    return d->get();
  }
  if (auto* s = std::get_if<Stream>(&value)) return s->dict.get();
  return nullptr;
}

const Stream* Object::stream() const { return std::get_if<Stream>(&value); }

const Object* lookup(const Dict& dict, std::string_view key) {
  for (const auto& [k, v] : dict) {
    if (k == key) return &v;
  }
  return nullptr;
}

bool Lexer::is_whitespace(char c) {
  return c == ' ' || c == '\n' || c == '\r' || c == '\t' || c == '\f' ||
         c == '\0';
}

bool Lexer::is_delimiter(char c) {
  switch (c) {
    case '(': case ')': case '<': case '>': case '[': case ']':
    case '{': case '}': case '/': case '%':
      return true;
    default:
      return false;
  }
}

void Lexer::skip_whitespace() {
  while (pos_ < data_.size()) {
    const char c = data_[pos_];
    if (is_whitespace(c)) {
      ++pos_;
    } else if (c == '%') {
      while (pos_ < data_.size() && data_[pos_] != '\n' &&
             data_[pos_] != '\r') {
        ++pos_;
      }
    } else {
      break;
    }
  }
}

bool Lexer::at_end() {
  skip_whitespace();
  return pos_ >= data_.size();
}

std::string Lexer::read_regular() {
  const std::size_t start = pos_;
  while (pos_ < data_.size() && !is_whitespace(data_[pos_]) &&
         !is_delimiter(data_[pos_])) {
    ++pos_;
  }
  return std::string(data_.substr(start, pos_ - start));
}

std::optional<Object> Lexer::next(bool allow_refs) {
  skip_whitespace();
  if (pos_ >= data_.size()) return std::nullopt;
  const char c = data_[pos_];
  switch (c) {
    case '(':
      return parse_literal_string();
    case '<':
      if (pos_ + 1 < data_.size() && data_[pos_ + 1] == '<') {
        return parse_dict(allow_refs);
      }
      return parse_hex_string();
    case '[':
      return parse_array(allow_refs);
    case '/':
      return parse_name();
    case ']':
    case '>':
    case ')':
    case '{':
    case '}':
      ++pos_;
      return Object{Keyword{std::string(1, c)}};
    default:
      break;
  }
  if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' ||
      c == '.') {
    return parse_number_or_ref(allow_refs);
  }
  std::string word = read_regular();
  if (word.empty()) {
    ++pos_;
    return Object{Keyword{std::string(1, c)}};
  }
  if (word == "true") return Object{true};
  if (word == "false") return Object{false};
  if (word == "null") return Object{Null{}};
  return Object{Keyword{std::move(word)}};
}

Object Lexer::parse_number_or_ref(bool allow_refs) {
  const std::size_t start = pos_;
  std::string token = read_regular();
  if (token.empty()) {
    ++pos_;
    return Object{Keyword{std::string(1, data_[start])}};
  }
  const bool is_int = token.find('.') == std::string::npos;
  if (is_int) {
    std::int64_t value = 0;
    const char* first = token.data() + (token.front() == '+' ? 1 : 0);
    auto [ptr, ec] = std::from_chars(first, token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      // Malformed numbers such as "--5" are read leniently as 0.
      return Object{std::int64_t{0}};
    }
    if (allow_refs && value >= 0) {
      const std::size_t after_first = pos_;
      skip_whitespace();
      const std::size_t gen_start = pos_;
      std::string gen = read_regular();
      bool gen_ok = !gen.empty();
      for (char ch : gen) {
        gen_ok = gen_ok && std::isdigit(static_cast<unsigned char>(ch));
      }
      if (gen_ok && pos_ > gen_start) {
        skip_whitespace();
        if (pos_ < data_.size() && data_[pos_] == 'R' &&
            (pos_ + 1 >= data_.size() || is_whitespace(data_[pos_ + 1]) ||
             is_delimiter(data_[pos_ + 1]))) {
          ++pos_;
          return Object{Ref{static_cast<int>(value), std::atoi(gen.c_str())}};
        }
      }
      pos_ = after_first;
    }
    return Object{value};
  }
  // Reals: strtod handles "-.5", "3." and friends.
  return Object{std::strtod(token.c_str(), nullptr)};
}

Object Lexer::parse_literal_string() {
  ++pos_;  // '('
  std::string out;
  int nesting = 1;
  while (pos_ < data_.size()) {
    char c = data_[pos_++];
    if (c == '(') {
      ++nesting;
      out.push_back(c);
    } else if (c == ')') {
      if (--nesting == 0) return Object{String{std::move(out)}};
      out.push_back(c);
    } else if (c == '\\') {
      if (pos_ >= data_.size()) break;
      c = data_[pos_++];
      switch (c) {
        case 'n': out.push_back('\n'); break;
        case 'r': out.push_back('\r'); break;
        case 't': out.push_back('\t'); break;
        case 'b': out.push_back('\b'); break;
        case 'f': out.push_back('\f'); break;
        case '\r':
          if (pos_ < data_.size() && data_[pos_] == '\n') ++pos_;
          break;
        case '\n':
          break;
        default:
          if (c >= '0' && c <= '7') {
            int value = c - '0';
            for (int i = 0; i < 2 && pos_ < data_.size() &&
                            data_[pos_] >= '0' && data_[pos_] <= '7';
                 ++i) {
              value = value * 8 + (data_[pos_++] - '0');
            }
            out.push_back(static_cast<char>(value & 0xFF));
          } else {
            out.push_back(c);
          }
      }
    } else {
      out.push_back(c);
    }
  }
  throw IngestError("unterminated string literal");
}

Object Lexer::parse_hex_string() {
  ++pos_;  // '<'
  std::string out;
  int pending = -1;
  while (pos_ < data_.size()) {
    const char c = data_[pos_++];
    if (c == '>') {
      if (pending >= 0) out.push_back(static_cast<char>(pending << 4));
      return Object{String{std::move(out)}};
    }
    const int v = hex_value(c);
    if (v < 0) continue;  // whitespace and junk are ignored
    if (pending < 0) {
      pending = v;
    } else {
      out.push_back(static_cast<char>((pending << 4) | v));
      pending = -1;
    }
  }
  throw IngestError("unterminated hex string");
}

Object Lexer::parse_name() {
  ++pos_;  // '/'
  std::string raw = read_regular();
  std::string out;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] == '#' && i + 2 < raw.size() && hex_value(raw[i + 1]) >= 0 &&
        hex_value(raw[i + 2]) >= 0) {
      out.push_back(
          static_cast<char>(hex_value(raw[i + 1]) * 16 + hex_value(raw[i + 2])));
      i += 2;
    } else {
      out.push_back(raw[i]);
    }
  }
  return Object{Name{std::move(out)}};
}

Object Lexer::parse_array(bool allow_refs) {
  if (++depth_ > kMaxNesting) throw IngestError("nesting too deep");
  ++pos_;  // '['
  auto arr = std::make_shared<Array>();
  while (true) {
    skip_whitespace();
    if (pos_ >= data_.size()) throw IngestError("unterminated array");
    if (data_[pos_] == ']') {
      ++pos_;
      break;
    }
    auto obj = next(allow_refs);
    if (!obj) throw IngestError("unterminated array");
    arr->push_back(std::move(*obj));
  }
  --depth_;
  return Object{std::shared_ptr<const Array>(std::move(arr))};
}

Object Lexer::parse_dict(bool allow_refs) {
  if (++depth_ > kMaxNesting) throw IngestError("nesting too deep");
  pos_ += 2;  // '<<'
  auto dict = std::make_shared<Dict>();
  while (true) {
    skip_whitespace();
    if (pos_ + 1 < data_.size() && data_[pos_] == '>' &&
        data_[pos_ + 1] == '>') {
      pos_ += 2;
      break;
    }
    if (pos_ >= data_.size()) throw IngestError("unterminated dictionary");
    auto key = next(allow_refs);
    if (!key) throw IngestError("unterminated dictionary");
    const std::string* name = key->name();
    if (name == nullptr) continue;  // tolerate junk keys
    skip_whitespace();
    if (pos_ + 1 < data_.size() && data_[pos_] == '>' &&
        data_[pos_ + 1] == '>') {
      dict->emplace_back(*name, Object{Null{}});
      continue;
    }
    auto value = next(allow_refs);
    if (!value) throw IngestError("unterminated dictionary");
    dict->emplace_back(*name, std::move(*value));
  }
  --depth_;
  return Object{std::shared_ptr<const Dict>(std::move(dict))};
}

}  // namespace papersum::pdf
