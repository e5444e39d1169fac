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

// Turning detections into text: box selection by recall coverage, field
// assembly, caption association and extraction scoring.

#ifndef PAPERSUM_MATCH_H_
#define PAPERSUM_MATCH_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "papersum/detect.h"
#include "papersum/ir.h"

namespace papersum {

inline constexpr double kDefaultTau = 0.5;
inline constexpr double kDefaultCaptionMaxGap = 30.0;

struct FieldText {
  DetectionClass klass = DetectionClass::kTitle;
  std::string text;
  std::vector<TextBox> boxes;         // reading order
  std::vector<double> recall_values;  // aligned with boxes
};

struct Caption {
  std::string text;
  std::vector<TextBox> boxes;
  double vertical_gap = 0.0;  // points, >= 0
  Detection owner;
};

// Boxes on det's page whose recall coverage by det.rect is >= tau, in
// reading order. Zero-area boxes are skipped and reported in `warnings`
// when given. Throws InvalidArgument unless 0 < tau <= 1.
std::vector<TextBox> match_text_boxes(const Detection& det,
                                      std::span<const TextBox> boxes,
                                      double tau,
                                      std::vector<std::string>* warnings =
                                          nullptr);

// match_text_boxes plus the assembled text and recall values.
FieldText match_field(const Detection& det, std::span<const TextBox> boxes,
                      double tau,
                      std::vector<std::string>* warnings = nullptr);

// Joins box texts with single spaces, collapsing whitespace and undoing
// end-of-line hyphenation.
std::string assemble_field_text(std::span<const TextBox> boxes);

// Finds the caption directly below a figure or table. Candidates start no
// higher than 2pt above the owner's bottom edge and overlap it horizontally
// by at least 30% of the narrower width. The nearest candidate wins when its
// gap is <= max_gap; following lines of the same block are appended.
std::optional<Caption> associate_caption(
    const Detection& owner, std::span<const TextBox> boxes,
    double max_gap = kDefaultCaptionMaxGap);

enum class ExtractionOutcome { kComplete, kPartial, kFail };

std::string_view to_string(ExtractionOutcome outcome);

// Compares box sets by identity (page, order). Throws InvalidArgument when
// the ground truth is empty.
ExtractionOutcome classify_extraction(std::span<const BoxRef> extracted,
                                      std::span<const BoxRef> ground_truth);
ExtractionOutcome classify_extraction(std::span<const TextBox> extracted,
                                      std::span<const TextBox> ground_truth);

// Ground-truth field boxes:
//   {"doc_id": "paper-001", "field": "abstract", "box_refs": [[0, 4], ...]}
// A file holds one such object or an array of them. Each ref is
// [page, order].
struct FieldGroundTruth {
  std::string doc_id;
  DetectionClass field = DetectionClass::kTitle;
  std::vector<BoxRef> box_refs;
};

std::vector<FieldGroundTruth> load_field_ground_truth(std::string_view json);

}  // namespace papersum

#endif  // PAPERSUM_MATCH_H_
