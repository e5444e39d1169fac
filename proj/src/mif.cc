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

#include "papersum/mif.h"

#include <algorithm>
#include <set>
#include <string>

#include "papersum/text.h"

namespace papersum {
namespace {

std::set<std::string> content_words(std::string_view text,
                                    const StopwordList& stopwords) {
  std::set<std::string> out;
  for (auto& token : tokenize_words(text, CasePolicy::kFold)) {
    if (utf8_length(token) < 2 || stopwords.contains(token)) continue;
    out.insert(std::move(token));
  }
  return out;
}

}  // namespace

int overlap_score(std::string_view abstract_text, std::string_view caption_text,
                  const StopwordList& stopwords) {
  const auto a = content_words(abstract_text, stopwords);
  const auto b = content_words(caption_text, stopwords);
  int shared = 0;
  for (const auto& w : a) shared += b.contains(w);
  return shared;
}

MifResult select_mif(std::span<const CaptionedFigure> figures,
                     std::string_view abstract_text,
                     const StopwordList& stopwords) {
  MifResult result;
  const auto abstract_words = content_words(abstract_text, stopwords);
  for (const auto& fig : figures) {
    int score = 0;
    if (fig.caption) {
      for (const auto& w : content_words(fig.caption->text, stopwords)) {
        score += abstract_words.contains(w);
      }
    }
    result.scores.emplace_back(fig.order, score);
    const bool better =
        !result.chosen || score > result.chosen_score ||
        (score == result.chosen_score && fig.order < result.chosen->order);
    if (better) {
      result.chosen = fig;
      result.chosen_score = score;
    }
  }
  std::sort(result.scores.begin(), result.scores.end());
  return result;
}

std::vector<CaptionedFigure> caption_figures(std::span<const Detection> figures,
                                             const DocumentIR& ir,
                                             double max_gap) {
  std::vector<CaptionedFigure> out;
  int order = 0;
  for (const auto& det : figures) {
    CaptionedFigure fig;
    fig.detection = det;
    fig.order = order++;
    const int p = det.rect.page_index;
    if (p >= 0 && p < static_cast<int>(ir.pages.size())) {
      fig.caption = associate_caption(det, ir.pages[p].text_boxes, max_gap);
    }
    out.push_back(std::move(fig));
  }
  return out;
}

}  // namespace papersum
