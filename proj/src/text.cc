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

#include "papersum/text.h"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include "papersum/errors.h"

namespace papersum {
namespace {

// Decodes the code point at `pos`, advancing it. Malformed sequences decode
// to U+FFFD.
UChar32 next_code_point(std::string_view text, std::size_t& pos) {
  UChar32 c = 0;
  int32_t i = static_cast<int32_t>(pos);
  U8_NEXT(reinterpret_cast<const uint8_t*>(text.data()), i,
          static_cast<int32_t>(text.size()), c);
  pos = static_cast<std::size_t>(i);
  return c < 0 ? 0xFFFD : c;
}

void append_code_point(std::string& out, UChar32 c) {
  char buf[U8_MAX_LENGTH];
  int32_t len = 0;
  UBool error = false;
  U8_APPEND(reinterpret_cast<uint8_t*>(buf), len, U8_MAX_LENGTH, c, error);
  if (!error) out.append(buf, static_cast<std::size_t>(len));
}

bool is_space(UChar32 c) { return u_isUWhiteSpace(c) || c == 0; }

UChar32 first_code_point(std::string_view text) {
  if (text.empty()) return -1;
  std::size_t pos = 0;
  return next_code_point(text, pos);
}

}  // namespace

std::string normalize_nfc(std::string_view text) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) throw Error("ICU NFC normalizer unavailable");
  icu::UnicodeString src = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  icu::UnicodeString dst = nfc->normalize(src, status);
  if (U_FAILURE(status)) throw Error("NFC normalization failed");
  std::string out;
  dst.toUTF8String(out);
  return out;
}

std::string trim(std::string_view text) {
  std::size_t pos = 0;
  std::size_t begin = text.size();
  std::size_t end = 0;
  while (pos < text.size()) {
    const std::size_t start = pos;
    if (!is_space(next_code_point(text, pos))) {
      if (begin == text.size()) begin = start;
      end = pos;
    }
  }
  if (begin >= end) return {};
  return std::string(text.substr(begin, end - begin));
}

std::string collapse_whitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const UChar32 c = next_code_point(text, pos);
    if (is_space(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    append_code_point(out, c);
  }
  return out;
}

bool starts_lowercase(std::string_view text) {
  const UChar32 c = first_code_point(text);
  return c >= 0 && u_islower(c);
}

bool starts_uppercase(std::string_view text) {
  const UChar32 c = first_code_point(text);
  return c >= 0 && (u_isupper(c) || u_istitle(c));
}

void append_fragment(std::string& acc, std::string_view next) {
  const std::string piece = collapse_whitespace(next);
  if (piece.empty()) return;
  if (acc.empty()) {
    acc = piece;
    return;
  }
  if (acc.back() == '-' && starts_lowercase(piece)) {
    acc.pop_back();
    acc += piece;
    return;
  }
  if (acc.back() != ' ') acc.push_back(' ');
  acc += piece;
}

std::string join_fragments(std::span<const std::string> fragments) {
  std::string out;
  for (const auto& f : fragments) append_fragment(out, f);
  return out;
}

std::vector<std::string> tokenize_words(std::string_view text,
                                        CasePolicy policy) {
  std::vector<std::string> tokens;
  std::string current;
  std::size_t pos = 0;
  while (pos < text.size()) {
    UChar32 c = next_code_point(text, pos);
    if (u_isalnum(c)) {
      if (policy == CasePolicy::kFold) c = u_tolower(c);
      append_code_point(current, c);
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

std::string to_lower(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) append_code_point(out, u_tolower(next_code_point(text, pos)));
  return out;
}

std::size_t utf8_length(std::string_view text) {
  std::size_t n = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    next_code_point(text, pos);
    ++n;
  }
  return n;
}

}  // namespace papersum
