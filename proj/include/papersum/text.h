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

// UTF-8 text helpers: normalization, whitespace handling, fragment joining
// and word tokenization. All functions take and return UTF-8.

#ifndef PAPERSUM_TEXT_H_
#define PAPERSUM_TEXT_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace papersum {

enum class CasePolicy { kFold, kPreserve };

std::string normalize_nfc(std::string_view text);

std::string trim(std::string_view text);

// Trims and collapses every run of whitespace into a single space.
std::string collapse_whitespace(std::string_view text);

// True when the first code point of `text` is a lowercase letter.
bool starts_lowercase(std::string_view text);
bool starts_uppercase(std::string_view text);

// Appends `next` to `acc` the way consecutive text fragments (lines, boxes)
// are glued: when `acc` ends in '-' and `next` starts lowercase the hyphen
// is dropped and the pieces are joined directly; otherwise a single space
// separates them. Whitespace inside the result is collapsed.
void append_fragment(std::string& acc, std::string_view next);

// Joins fragments with append_fragment.
std::string join_fragments(std::span<const std::string> fragments);

// Maximal runs of alphanumeric code points. With kFold every token is
// lowercased.
std::vector<std::string> tokenize_words(std::string_view text,
                                        CasePolicy policy);

std::string to_lower(std::string_view text);

// Number of code points.
std::size_t utf8_length(std::string_view text);

}  // namespace papersum

#endif  // PAPERSUM_TEXT_H_
