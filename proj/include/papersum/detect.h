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

// Component detections: title, author, abstract, figure and table regions.
//
// Detections JSON (detections_version 1). A file holds one document or a
// {"documents": [...]} list of them:
//
//   {
//     "detections_version": 1,
//     "doc_id": "paper-001",
//     "pages": [
//       {"page_index": 0,
//        "coord_space": "normalized",        // or "pixel"
//        "render_size": [1224, 1584],        // required for "pixel"
//        "detections": [
//          {"class": "title", "bbox": [x0, y0, x1, y1], "confidence": 0.9}
//        ]}
//     ]
//   }
//
// A detection may override "coord_space" and "render_size" for itself.
// Normalized boxes are fractions of the page size, origin top-left. Ground
// truth annotations use the same layout without "confidence".

#ifndef PAPERSUM_DETECT_H_
#define PAPERSUM_DETECT_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "papersum/geometry.h"
#include "papersum/ir.h"

namespace papersum {

inline constexpr int kDetectionsVersion = 1;
inline constexpr double kDefaultConfThreshold = 0.5;

enum class DetectionClass { kAbstract, kAuthor, kFigure, kTable, kTitle };

inline constexpr DetectionClass kAllClasses[] = {
    DetectionClass::kAbstract, DetectionClass::kAuthor,
    DetectionClass::kFigure, DetectionClass::kTable, DetectionClass::kTitle};

std::string_view to_string(DetectionClass klass);
std::optional<DetectionClass> parse_detection_class(std::string_view name);

enum class DetectionSource { kExternal, kHeuristic };

std::string_view to_string(DetectionSource source);

struct Detection {
  DetectionClass klass = DetectionClass::kTitle;
  Rect rect;
  double confidence = 0.0;
  DetectionSource source = DetectionSource::kExternal;

  friend bool operator==(const Detection&, const Detection&) = default;
};

struct FirstPageFields {
  std::optional<Detection> title;
  std::optional<Detection> author;
  std::optional<Detection> abstract;
};

// One region from a detections or annotations file, in normalized page
// coordinates (rect in [0,1]², page_index from the file).
struct RegionRecord {
  DetectionClass klass = DetectionClass::kTitle;
  Rect rect;
  std::optional<double> confidence;
};

struct RegionDocument {
  std::string doc_id;
  std::vector<RegionRecord> regions;
};

// Parses a detections/annotations file. With `require_confidence` every
// region needs a confidence in [0,1]; otherwise confidence is optional.
// Throws SchemaError naming the failing field ("unknown class" for class
// names outside the five known ones).
std::vector<RegionDocument> parse_region_file(std::string_view json,
                                              bool require_confidence);

// Loads the detections of `ir.doc_id` and converts them to PDF points on
// the IR's pages. Rects leaving the page are clamped.
std::vector<Detection> load_detections(std::string_view json,
                                       const DocumentIR& ir);

// Serializes detections in normalized coordinates.
std::string save_detections(std::span<const Detection> dets,
                            const DocumentIR& ir);

// Rule-based layout detector. Fixed confidences: title 0.9, abstract 0.8,
// figure 0.7, author 0.6. Tables are not detected.
std::vector<Detection> detect_heuristic(const DocumentIR& ir);

// True for "Abstract", "ABSTRACT." and dash-terminated variants.
bool is_abstract_heading(std::string_view text);

// True for text that looks like a section heading ("1. Introduction",
// "II. RELATED WORK", "Keywords: ...").
bool is_section_heading(std::string_view text);

// Highest-confidence page-0 detection per field; ties go to the smaller
// (y0, x0).
FirstPageFields select_first_page_fields(std::span<const Detection> dets);

// Figure and table detections with confidence >= conf_threshold, sorted by
// (page, y0, x0).
std::vector<Detection> select_figures_tables(
    std::span<const Detection> dets,
    double conf_threshold = kDefaultConfThreshold);

}  // namespace papersum

#endif  // PAPERSUM_DETECT_H_
