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

// Page geometry shared by every stage of the pipeline.
//
// Coordinates are PDF points with the origin at the top-left corner of the
// page and y growing downward. Areas are continuous (points squared), so a
// region's "size" does not depend on any rendering resolution.

#ifndef PAPERSUM_GEOMETRY_H_
#define PAPERSUM_GEOMETRY_H_

#include <compare>
#include <string>

namespace papersum {

// Non-negative area in points squared.
class Area {
 public:
  constexpr Area() = default;
  explicit Area(double value);

  constexpr double value() const { return value_; }

  friend constexpr auto operator<=>(const Area&, const Area&) = default;

 private:
  double value_ = 0.0;
};

// Axis-aligned rectangle on one page. Zero-area rectangles are allowed.
struct Rect {
  double x0 = 0.0;
  double y0 = 0.0;
  double x1 = 0.0;
  double y1 = 0.0;
  int page_index = 0;

  // Throws GeometryError when x0 > x1, y0 > y1, page_index < 0 or any
  // coordinate is not finite.
  static Rect make(double x0, double y0, double x1, double y1,
                   int page_index = 0);

  double width() const { return x1 - x0; }
  double height() const { return y1 - y0; }
  Area area() const { return Area(width() * height()); }
  bool is_degenerate() const { return width() <= 0.0 || height() <= 0.0; }

  // True when `other` lies entirely inside this rectangle (same page).
  bool contains(const Rect& other) const;

  friend bool operator==(const Rect&, const Rect&) = default;
};

bool is_valid(const Rect& r);

// Smallest rectangle covering both inputs. Both must be on the same page.
Rect bounding_union(const Rect& a, const Rect& b);

// Clamp `r` into [0,width]x[0,height], keeping it valid.
Rect clamp_to_page(const Rect& r, double width, double height);

std::string to_string(const Rect& r);

// |a ∩ b|. Throws GeometryError for rects on different pages.
Area intersection_area(const Rect& a, const Rect& b);

// |a ∩ b| / |a ∪ b|, 0 when the union is empty.
double iou(const Rect& a, const Rect& b);

// Fraction of `text` covered by `det`: |det ∩ text| / |text|.
// Throws GeometryError when `text` has zero area.
double recall_coverage(const Rect& det, const Rect& text);

}  // namespace papersum

#endif  // PAPERSUM_GEOMETRY_H_
