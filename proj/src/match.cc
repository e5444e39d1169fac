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

#include "papersum/match.h"

#include <algorithm>
#include <cmath>
#include <set>

#include <fmt/format.h>

#include "papersum/canonical_json.h"
#include "papersum/errors.h"
#include "papersum/text.h"

namespace papersum {
namespace {

constexpr double kCaptionTopSlack = 2.0;
constexpr double kMinHorizontalOverlap = 0.3;
constexpr double kLinePitchFactor = 1.5;
constexpr double kFontSizeJump = 0.5;

double horizontal_overlap(const Rect& a, const Rect& b) {
  const double narrow = std::min(a.width(), b.width());
  if (narrow <= 0) return 0.0;
  const double w = std::min(a.x1, b.x1) - std::max(a.x0, b.x0);
  return std::max(0.0, w) / narrow;
}

bool by_order(const TextBox& a, const TextBox& b) { return a.order < b.order; }

bool by_position(const TextBox* a, const TextBox* b) {
  if (a->rect.y0 != b->rect.y0) return a->rect.y0 < b->rect.y0;
  if (a->rect.x0 != b->rect.x0) return a->rect.x0 < b->rect.x0;
  return a->order < b->order;
}

bool same_line(const Rect& line, const Rect& r) {
  const double centre = (r.y0 + r.y1) / 2.0;
  return centre >= line.y0 && centre <= line.y1;
}

}  // namespace

std::vector<TextBox> match_text_boxes(const Detection& det,
                                      std::span<const TextBox> boxes,
                                      double tau,
                                      std::vector<std::string>* warnings) {
  return match_field(det, boxes, tau, warnings).boxes;
}

FieldText match_field(const Detection& det, std::span<const TextBox> boxes,
                      double tau, std::vector<std::string>* warnings) {
  if (!(tau > 0.0 && tau <= 1.0)) {
    throw InvalidArgument(fmt::format("tau {} outside (0, 1]", tau));
  }
  FieldText field;
  field.klass = det.klass;
  std::vector<TextBox> sorted(boxes.begin(), boxes.end());
  std::stable_sort(sorted.begin(), sorted.end(), by_order);
  for (const auto& box : sorted) {
    if (box.rect.page_index != det.rect.page_index) continue;
    if (box.rect.is_degenerate()) {
      if (warnings) {
        warnings->push_back(fmt::format("skipped zero-area text box {}:{}",
                                        box.rect.page_index, box.order));
      }
      continue;
    }
    const double recall = recall_coverage(det.rect, box.rect);
    if (recall >= tau) {
      field.boxes.push_back(box);
      field.recall_values.push_back(recall);
    }
  }
  field.text = assemble_field_text(field.boxes);
  return field;
}

std::string assemble_field_text(std::span<const TextBox> boxes) {
  std::string acc;
  for (const auto& box : boxes) append_fragment(acc, box.text);
  return collapse_whitespace(acc);
}

std::optional<Caption> associate_caption(const Detection& owner,
                                         std::span<const TextBox> boxes,
                                         double max_gap) {
  const Rect& o = owner.rect;
  std::vector<const TextBox*> column;
  for (const auto& box : boxes) {
    if (box.rect.page_index != o.page_index) continue;
    if (box.rect.y0 < o.y1 - kCaptionTopSlack) continue;
    if (horizontal_overlap(o, box.rect) < kMinHorizontalOverlap) continue;
    column.push_back(&box);
  }
  if (column.empty()) return std::nullopt;
  std::sort(column.begin(), column.end(), by_position);
  const TextBox* first = column.front();
  const double gap = first->rect.y0 - o.y1;
  if (gap > max_gap) return std::nullopt;

  std::vector<const TextBox*> chosen{first};
  Rect line = first->rect;
  double line_size = first->font_size;
  for (std::size_t i = 1; i < column.size(); ++i) {
    const TextBox* next = column[i];
    if (same_line(line, next->rect)) {
      chosen.push_back(next);
      line = bounding_union(line, next->rect);
      continue;
    }
    const double pitch = next->rect.y0 - line.y0;
    if (pitch > kLinePitchFactor * line.height()) break;
    if (line_size > 0 && next->font_size > 0 &&
        std::abs(next->font_size - line_size) > kFontSizeJump) {
      break;
    }
    chosen.push_back(next);
    line = next->rect;
    line_size = next->font_size;
  }

  Caption caption;
  caption.owner = owner;
  caption.vertical_gap = std::max(0.0, gap);
  for (const TextBox* b : chosen) caption.boxes.push_back(*b);
  std::stable_sort(caption.boxes.begin(), caption.boxes.end(), by_order);
  caption.text = assemble_field_text(caption.boxes);
  return caption;
}

std::string_view to_string(ExtractionOutcome outcome) {
  switch (outcome) {
    case ExtractionOutcome::kComplete: return "complete";
    case ExtractionOutcome::kPartial: return "partial";
    case ExtractionOutcome::kFail: return "fail";
  }
  return "fail";
}

ExtractionOutcome classify_extraction(std::span<const BoxRef> extracted,
                                      std::span<const BoxRef> ground_truth) {
  if (ground_truth.empty()) {
    throw InvalidArgument("classify_extraction: empty ground truth");
  }
  const std::set<BoxRef> ex(extracted.begin(), extracted.end());
  const std::set<BoxRef> gt(ground_truth.begin(), ground_truth.end());
  if (ex == gt) return ExtractionOutcome::kComplete;
  std::size_t hit = 0;
  for (const auto& ref : gt) hit += ex.contains(ref);
  // Both partial conditions reduce to half of the ground truth recovered:
  // a superset recovers all of it.
  if (2 * hit >= gt.size()) return ExtractionOutcome::kPartial;
  return ExtractionOutcome::kFail;
}

ExtractionOutcome classify_extraction(std::span<const TextBox> extracted,
                                      std::span<const TextBox> ground_truth) {
  std::vector<BoxRef> ex, gt;
  for (const auto& b : extracted) ex.push_back(ref_of(b));
  for (const auto& b : ground_truth) gt.push_back(ref_of(b));
  return classify_extraction(std::span<const BoxRef>(ex),
                             std::span<const BoxRef>(gt));
}

std::vector<FieldGroundTruth> load_field_ground_truth(std::string_view json) {
  const Json root = parse_json(json, "ground truth");
  std::vector<const Json*> items;
  if (root.is_array()) {
    for (const auto& item : root) items.push_back(&item);
  } else {
    items.push_back(&root);
  }
  std::vector<FieldGroundTruth> out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const std::string path = root.is_array() ? fmt::format("[{}]", i) : "";
    const Json& item = *items[i];
    require_object(item, path);
    FieldGroundTruth gt;
    gt.doc_id = require_string(item, "doc_id", path);
    const std::string field = require_string(item, "field", path);
    const auto klass = parse_detection_class(field);
    if (!klass || (*klass != DetectionClass::kTitle &&
                   *klass != DetectionClass::kAuthor &&
                   *klass != DetectionClass::kAbstract)) {
      throw SchemaError(path.empty() ? "field" : path + ".field",
                        "unknown field \"" + field + "\"");
    }
    gt.field = *klass;
    const Json& refs = require_array(item, "box_refs", path);
    for (std::size_t r = 0; r < refs.size(); ++r) {
      const std::string rpath =
          fmt::format("{}box_refs[{}]", path.empty() ? "" : path + ".", r);
      const Json& ref = refs[r];
      if (!ref.is_array() || ref.size() != 2 || !ref[0].is_number_integer() ||
          !ref[1].is_number_integer() || ref[0].get<int>() < 0 ||
          ref[1].get<int>() < 0) {
        throw SchemaError(rpath, "expected [page, order]");
      }
      gt.box_refs.push_back(BoxRef{ref[0].get<int>(), ref[1].get<int>()});
    }
    out.push_back(std::move(gt));
  }
  return out;
}

}  // namespace papersum
