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

#include "papersum/sentences.h"

#include <algorithm>
#include <array>
#include <set>
#include <string_view>

#include "papersum/text.h"

namespace papersum {
namespace {

constexpr auto kAbbreviations = std::to_array<std::string_view>({
    "Fig.",  "Figs.",  "fig.",   "figs.",  "Eq.",   "Eqs.",  "eq.",
    "eqs.",  "Eqn.",   "Sec.",   "Sect.",  "sec.",  "Tab.",  "tab.",
    "Ref.",  "Refs.",  "al.",    "e.g.",   "i.e.",  "cf.",   "Cf.",
    "vs.",   "Dr.",    "Mr.",    "Mrs.",   "Ms.",   "Prof.", "No.",
    "no.",   "approx.", "resp.", "pp.",    "Vol.",  "vol.",  "viz.",
    "Ch."});

struct Fragment {
  BoxRef ref;
  std::string_view text;
  bool excluded = false;
};

bool is_terminator(char c) { return c == '.' || c == '!' || c == '?'; }

// Whether the terminator at `pos` belongs to an abbreviation or initial.
bool is_guarded(const std::string& text, std::size_t pos) {
  if (text[pos] != '.') return false;
  std::size_t start = pos;
  while (start > 0 && text[start - 1] != ' ') --start;
  std::string_view word(text.data() + start, pos + 1 - start);
  while (!word.empty() && std::string_view("([{\"'").find(word.front()) !=
                              std::string_view::npos) {
    word.remove_prefix(1);
  }
  if (std::find(kAbbreviations.begin(), kAbbreviations.end(), word) !=
      kAbbreviations.end()) {
    return true;
  }
  // Single-letter initial such as "J." in "J. Smith".
  return word.size() == 2 && word[0] >= 'A' && word[0] <= 'Z';
}

class Splitter {
 public:
  explicit Splitter(std::vector<Sentence>& out) : out_(out) {}

  void add(const Fragment& f) {
    if (f.excluded) {
      flush();
      return;
    }
    const std::string piece = collapse_whitespace(f.text);
    if (piece.empty()) return;
    const std::size_t scan_from = current_.size();
    append_fragment(current_, piece);
    if (sources_.empty() || sources_.back() != f.ref) sources_.push_back(f.ref);

    std::size_t pos = scan_from;
    while (pos < current_.size()) {
      if (is_terminator(current_[pos]) && pos + 2 < current_.size() &&
          current_[pos + 1] == ' ' &&
          starts_uppercase(std::string_view(current_).substr(pos + 2)) &&
          !is_guarded(current_, pos)) {
        std::string rest = current_.substr(pos + 2);
        current_.resize(pos + 1);
        emit();
        current_ = std::move(rest);
        sources_ = {f.ref};
        pos = 0;
        continue;
      }
      ++pos;
    }
    if (!current_.empty() && is_terminator(current_.back()) &&
        !is_guarded(current_, current_.size() - 1)) {
      flush();
    }
  }

  void flush() {
    emit();
    current_.clear();
    sources_.clear();
  }

 private:
  void emit() {
    std::string text = trim(current_);
    if (text.empty()) return;
    Sentence s;
    s.text = std::move(text);
    s.page_index = sources_.empty() ? 0 : sources_.front().page;
    s.order = static_cast<int>(out_.size());
    s.source_boxes = sources_;
    out_.push_back(std::move(s));
  }

  std::vector<Sentence>& out_;
  std::string current_;
  std::vector<BoxRef> sources_;
};

}  // namespace

std::vector<Sentence> extract_sentences(const DocumentIR& ir,
                                        std::span<const BoxRef> excluded) {
  const std::set<BoxRef> skip(excluded.begin(), excluded.end());
  std::vector<Sentence> out;
  Splitter splitter(out);
  for (const Page& page : ir.pages) {
    std::vector<const TextBox*> boxes;
    for (const auto& b : page.text_boxes) boxes.push_back(&b);
    std::stable_sort(boxes.begin(), boxes.end(),
                     [](const TextBox* a, const TextBox* b) {
                       return a->order < b->order;
                     });
    for (const TextBox* b : boxes) {
      const BoxRef ref = ref_of(*b);
      splitter.add(Fragment{ref, b->text, skip.contains(ref)});
    }
  }
  splitter.flush();
  return out;
}

std::vector<Sentence> split_sentences(const std::vector<std::string>& boxes) {
  std::vector<Sentence> out;
  Splitter splitter(out);
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    splitter.add(Fragment{BoxRef{0, static_cast<int>(i)}, boxes[i], false});
  }
  splitter.flush();
  return out;
}

}  // namespace papersum
