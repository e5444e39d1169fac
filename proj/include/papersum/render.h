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

// Single-page summary: data model, JSON form and HTML rendering.
//
// summary.json (summary_version 1) mirrors SummaryPage. Absent fields are
// null. "field_boxes" lists the [page, order] text boxes each field was
// assembled from, so extraction can be scored against ground truth later.

#ifndef PAPERSUM_RENDER_H_
#define PAPERSUM_RENDER_H_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "papersum/geometry.h"
#include "papersum/ir.h"

namespace papersum {

inline constexpr int kSummaryVersion = 1;
inline constexpr int kSummaryDecimals = 6;
inline constexpr char kNotDetected[] = "[not detected]";

struct MifInfo {
  int page_index = 0;
  Rect rect;
  std::string caption_text;
  int figure_order = 0;  // position among the document's figures
  int score = 0;         // words shared with the abstract

  friend bool operator==(const MifInfo&, const MifInfo&) = default;
};

struct Provenance {
  std::string detector;  // "heuristic" or "external"
  double tau = 0.0;
  double conf_threshold = 0.0;
  double caption_max_gap = 0.0;
  long min_freq = 0;  // threshold actually used
  int max_gap = 0;
  int num_sentences = 0;
  std::string stopwords;  // list source

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct SummaryPage {
  std::string doc_id;
  std::optional<std::string> title;
  std::optional<std::string> authors;
  std::optional<std::string> abstract;
  std::optional<MifInfo> mif;
  std::vector<std::string> sentences;
  Provenance provenance;
  // "title", "author", "abstract" -> source boxes.
  std::map<std::string, std::vector<BoxRef>> field_boxes;

  friend bool operator==(const SummaryPage&, const SummaryPage&) = default;
};

std::string summary_to_json(const SummaryPage& page);

// Throws SchemaError naming the failing field.
SummaryPage summary_from_json(std::string_view json);

// Supplies a rendered crop of a page region, e.g. from a rasterizer.
class ImageProvider {
 public:
  virtual ~ImageProvider() = default;
  // A data: URI for the crop, or nullopt when unavailable.
  virtual std::optional<std::string> crop(const DocumentIR& ir, int page_index,
                                          const Rect& rect) = 0;
};

struct RenderedSummary {
  std::string html;
  std::string json;
};

// Self-contained HTML (inline styles, no external references) plus the
// canonical JSON. Throws InvalidArgument when the page does not fit the IR
// (unknown page for the figure, empty sentence).
RenderedSummary render_summary(const SummaryPage& page, const DocumentIR& ir,
                               ImageProvider* assets = nullptr);

// Index linking <doc_id>/summary.html for every page, sorted by doc_id.
// Throws InvalidArgument on duplicate ids.
std::string render_index(std::span<const SummaryPage> pages);

std::string html_escape(std::string_view text);

}  // namespace papersum

#endif  // PAPERSUM_RENDER_H_
