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

// Evaluation: per-class detection IoU, extraction outcome tables and corpus
// word frequencies. Every report is written as canonical JSON plus an
// aligned plain-text table.

#ifndef PAPERSUM_EVAL_H_
#define PAPERSUM_EVAL_H_

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "papersum/detect.h"
#include "papersum/match.h"
#include "papersum/render.h"

namespace papersum {

inline constexpr int kReportDecimals = 12;

// Regions carry normalized page coordinates; IoU does not change under the
// per-axis scaling to points, so no IR is needed.
struct Annotation {
  std::string doc_id;
  DetectionClass klass = DetectionClass::kTitle;
  Rect rect;
};

struct Prediction {
  std::string doc_id;
  DetectionClass klass = DetectionClass::kTitle;
  Rect rect;
  double confidence = 0.0;
};

std::vector<Annotation> load_annotations(std::string_view json);
std::vector<Prediction> load_predictions(std::string_view json);

struct ClassCounts {
  int matched = 0;
  int unmatched_gt = 0;
  int unmatched_pred = 0;

  friend bool operator==(const ClassCounts&, const ClassCounts&) = default;
};

struct EvalReport {
  std::map<DetectionClass, double> per_class_iou;  // classes with ground truth
  double overall_iou = 0.0;
  std::map<DetectionClass, ClassCounts> counts;    // all five classes
  int num_gt = 0;
};

// Greedy one-to-one matching per (document, page, class): the pair with the
// highest positive IoU is matched first. Unmatched ground truth counts as
// IoU 0. Class IoU is the mean over that class's ground truth; the overall
// value pools all ground truth.
EvalReport evaluate_detections(std::span<const Prediction> preds,
                               std::span<const Annotation> gts);

struct ExtractionResult {
  std::string doc_id;
  DetectionClass field = DetectionClass::kTitle;
  ExtractionOutcome outcome = ExtractionOutcome::kFail;
};

struct OutcomeCounts {
  int complete = 0;
  int partial = 0;
  int fail = 0;

  int total() const { return complete + partial + fail; }
  friend bool operator==(const OutcomeCounts&, const OutcomeCounts&) = default;
};

struct ExtractionReport {
  // abstract, author and title rows are always present.
  std::map<DetectionClass, OutcomeCounts> per_field;
};

ExtractionReport tabulate_extraction(std::span<const ExtractionResult> results);

// Classifies each ground-truth field against the boxes recorded in the
// matching summary. Documents without a summary fail every field.
std::vector<ExtractionResult> score_extraction(
    std::span<const FieldGroundTruth> ground_truth,
    std::span<const SummaryPage> summaries);

// Case-preserving counts over all summary sentences, no stopwords, sorted by
// count descending then token ascending; at most k entries.
std::vector<std::pair<std::string, long>> corpus_word_frequency(
    std::span<const SummaryPage> summaries, int k);

std::string detection_report_json(const EvalReport& report);
std::string detection_report_text(const EvalReport& report);
std::string extraction_report_json(const ExtractionReport& report);
std::string extraction_report_text(const ExtractionReport& report);
std::string word_frequency_json(
    const std::vector<std::pair<std::string, long>>& rows);
std::string word_frequency_text(
    const std::vector<std::pair<std::string, long>>& rows);

}  // namespace papersum

#endif  // PAPERSUM_EVAL_H_
