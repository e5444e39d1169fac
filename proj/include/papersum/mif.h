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

// Most informative figure: the figure whose caption shares the most words
// with the abstract.

#ifndef PAPERSUM_MIF_H_
#define PAPERSUM_MIF_H_

#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "papersum/detect.h"
#include "papersum/ir.h"
#include "papersum/match.h"
#include "papersum/stopwords.h"

namespace papersum {

struct CaptionedFigure {
  Detection detection;
  std::optional<Caption> caption;
  int order = 0;  // document order among figures
};

struct MifResult {
  std::optional<CaptionedFigure> chosen;
  int chosen_score = 0;
  std::vector<std::pair<int, int>> scores;  // (order, score), by order
};

// Number of distinct words shared by both texts. Words are lowercased
// alphanumeric runs of at least two code points that are not stopwords.
int overlap_score(std::string_view abstract_text, std::string_view caption_text,
                  const StopwordList& stopwords = StopwordList::english());

// Highest-scoring figure; ties and the all-zero case go to the lowest order.
MifResult select_mif(std::span<const CaptionedFigure> figures,
                     std::string_view abstract_text,
                     const StopwordList& stopwords = StopwordList::english());

// Pairs each figure detection with its caption. `figures` must be in
// document order; their position becomes `order`.
std::vector<CaptionedFigure> caption_figures(
    std::span<const Detection> figures, const DocumentIR& ir,
    double max_gap = kDefaultCaptionMaxGap);

}  // namespace papersum

#endif  // PAPERSUM_MIF_H_
