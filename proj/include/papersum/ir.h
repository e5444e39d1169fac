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

// DocumentIR: the structured form of one paper.
//
// JSON form (ir_version 1):
//
//   {
//     "doc_id": "paper-001",
//     "ir_version": 1,
//     "pages": [
//       {
//         "width": 612.000, "height": 792.000,        // points, > 0
//         "text_boxes": [
//           {"font_size": 9.000,                     // optional, 0 = unknown
//            "order": 0,                             // reading order, unique
//            "rect": {"x0": .., "y0": .., "x1": .., "y1": ..},
//            "text": "..."}                          // non-empty, NFC
//         ],
//         "image_regions": [                          // optional
//           {"kind": "raster" | "vector-group", "rect": {...}}
//         ]
//       }
//     ],
//     "warnings": ["no extractable text"]             // optional
//   }
//
// Coordinates are PDF points, origin top-left, y downward; the page index of
// every rect is the position of its page in "pages". Rects are clamped to
// the page on load. The canonical form sorts keys, prints floats with three
// decimals and lists text boxes by reading order.

#ifndef PAPERSUM_IR_H_
#define PAPERSUM_IR_H_

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "papersum/geometry.h"

namespace papersum {

inline constexpr int kIrVersion = 1;
inline constexpr int kIrDecimals = 3;
inline constexpr char kWarningNoText[] = "no extractable text";

struct TextBox {
  Rect rect;
  std::string text;
  double font_size = 0.0;  // points; 0 means unknown
  int order = 0;           // reading-order index within the page

  friend bool operator==(const TextBox&, const TextBox&) = default;
};

// Identity of a text box inside its document.
struct BoxRef {
  int page = 0;
  int order = 0;

  friend auto operator<=>(const BoxRef&, const BoxRef&) = default;
};

inline BoxRef ref_of(const TextBox& box) {
  return BoxRef{box.rect.page_index, box.order};
}

enum class ImageKind { kRaster, kVectorGroup };

std::string_view to_string(ImageKind kind);

struct ImageRegion {
  Rect rect;
  ImageKind kind = ImageKind::kRaster;

  friend bool operator==(const ImageRegion&, const ImageRegion&) = default;
};

struct Page {
  double width = 0.0;
  double height = 0.0;
  std::vector<TextBox> text_boxes;  // sorted by `order`
  std::vector<ImageRegion> image_regions;

  friend bool operator==(const Page&, const Page&) = default;
};

struct DocumentIR {
  std::string doc_id;
  std::vector<Page> pages;
  std::vector<std::string> warnings;

  const TextBox* find_box(const BoxRef& ref) const;

  friend bool operator==(const DocumentIR&, const DocumentIR&) = default;
};

// Parses and validates IR JSON. Throws SchemaError naming the failing field.
DocumentIR load_ir(std::string_view json);

// Canonical serialization (see file comment).
std::string save_ir(const DocumentIR& ir);

// Checks the structural invariants. Throws SchemaError.
void validate_ir(const DocumentIR& ir);

// Assigns `order` on every page and sorts boxes accordingly.
//
// A page is treated as two-column when at least 60% of its boxes fit
// entirely in one half of the page (split at the vertical midline). Boxes
// crossing the midline then act as band separators: within each band the
// left column is read top to bottom, then the right column. Other pages are
// read top to bottom, left to right.
void assign_reading_order(Page& page);

}  // namespace papersum

#endif  // PAPERSUM_IR_H_
