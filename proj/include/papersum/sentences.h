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

#ifndef PAPERSUM_SENTENCES_H_
#define PAPERSUM_SENTENCES_H_

#include <span>
#include <string>
#include <vector>

#include "papersum/ir.h"

namespace papersum {

struct Sentence {
  std::string text;
  int page_index = 0;  // page of the first source box
  int order = 0;       // document-wide, strictly increasing
  std::vector<BoxRef> source_boxes;

  friend bool operator==(const Sentence&, const Sentence&) = default;
};

// Splits the document's text into sentences.
//
// Boxes are concatenated in (page, order) sequence, with de-hyphenation
// across box boundaries. A '.', '!' or '?' ends a sentence when it is
// followed by whitespace and an uppercase letter, or when it is the last
// character of a box. Abbreviations such as "Fig.", "et al." and "e.g." and
// single-letter initials never end a sentence.
//
// Boxes listed in `excluded` (e.g. the title and author blocks) are skipped
// and close any sentence in progress.
std::vector<Sentence> extract_sentences(const DocumentIR& ir,
                                        std::span<const BoxRef> excluded = {});

// Same splitting applied to a flat list of box texts (used by tests and by
// callers that already hold text fragments). Page and source refs are
// filled with (0, i).
std::vector<Sentence> split_sentences(const std::vector<std::string>& boxes);

}  // namespace papersum

#endif  // PAPERSUM_SENTENCES_H_
