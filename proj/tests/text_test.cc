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

#include "doctest.h"
#include "papersum/text.h"

namespace papersum {
namespace {

using V = std::vector<std::string>;

TEST_CASE("tokenize keeps maximal alphanumeric runs") {
  CHECK(tokenize_words("Deep-learning, 3D nets!", CasePolicy::kFold) ==
        V{"deep", "learning", "3d", "nets"});
  CHECK(tokenize_words("The cat", CasePolicy::kPreserve) == V{"The", "cat"});
  CHECK(tokenize_words("", CasePolicy::kFold).empty());
  CHECK(tokenize_words("Ünïcode Straße", CasePolicy::kFold) ==
        V{"ünïcode", "straße"});
}

TEST_CASE("nfc normalization composes") {
  CHECK(normalize_nfc("e\xcc\x81") == "\xc3\xa9");
  CHECK(utf8_length("\xc3\xa9t\xc3\xa9") == 3);
}

TEST_CASE("fragments join with de-hyphenation") {
  std::string acc = "multi-";
  append_fragment(acc, "modal nets");
  CHECK(acc == "multimodal nets");
  acc = "Jean-";
  append_fragment(acc, "Luc");
  CHECK(acc == "Jean- Luc");
  CHECK(join_fragments(V{"Deep", "Learning"}) == "Deep Learning");
  CHECK(join_fragments(V{}).empty());
}

TEST_CASE("whitespace helpers") {
  CHECK(trim("  a b \n") == "a b");
  CHECK(collapse_whitespace(" a \t\n b  ") == "a b");
  CHECK(starts_uppercase("Hello"));
  CHECK(starts_lowercase("hello"));
  CHECK_FALSE(starts_uppercase("3D"));
  CHECK(to_lower("ÄBC") == "äbc");
}

}  // namespace
}  // namespace papersum
