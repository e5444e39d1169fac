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

#include "papersum/geometry.h"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "papersum/errors.h"

namespace papersum {
namespace {

void require_same_page(const Rect& a, const Rect& b) {
  if (a.page_index != b.page_index) {
    throw GeometryError(fmt::format("rects on different pages ({} vs {})",
                                    a.page_index, b.page_index));
  }
}

}  // namespace

Area::Area(double value) : value_(value) {
  if (!(value >= 0.0)) {
    throw GeometryError(fmt::format("negative area {}", value));
  }
}

Rect Rect::make(double x0, double y0, double x1, double y1, int page_index) {
  Rect r{x0, y0, x1, y1, page_index};
  if (!is_valid(r)) {
    throw GeometryError("invalid rect " + to_string(r));
  }
  return r;
}

bool Rect::contains(const Rect& other) const {
  return page_index == other.page_index && x0 <= other.x0 &&
         y0 <= other.y0 && other.x1 <= x1 && other.y1 <= y1;
}

bool is_valid(const Rect& r) {
  return std::isfinite(r.x0) && std::isfinite(r.y0) && std::isfinite(r.x1) &&
         std::isfinite(r.y1) && r.x0 <= r.x1 && r.y0 <= r.y1 &&
         r.page_index >= 0;
}

Rect bounding_union(const Rect& a, const Rect& b) {
  require_same_page(a, b);
  return Rect{std::min(a.x0, b.x0), std::min(a.y0, b.y0),
              std::max(a.x1, b.x1), std::max(a.y1, b.y1), a.page_index};
}

Rect clamp_to_page(const Rect& r, double width, double height) {
  auto clamp = [](double v, double hi) { return std::clamp(v, 0.0, hi); };
  Rect out{clamp(r.x0, width), clamp(r.y0, height), clamp(r.x1, width),
           clamp(r.y1, height), r.page_index};
  if (out.x0 > out.x1) std::swap(out.x0, out.x1);
  if (out.y0 > out.y1) std::swap(out.y0, out.y1);
  return out;
}

std::string to_string(const Rect& r) {
  return fmt::format("[page {}: ({:.3f}, {:.3f}) - ({:.3f}, {:.3f})]",
                     r.page_index, r.x0, r.y0, r.x1, r.y1);
}

Area intersection_area(const Rect& a, const Rect& b) {
  require_same_page(a, b);
  const double w = std::min(a.x1, b.x1) - std::max(a.x0, b.x0);
  const double h = std::min(a.y1, b.y1) - std::max(a.y0, b.y0);
  if (w <= 0.0 || h <= 0.0) return Area();
  return Area(w * h);
}

double iou(const Rect& a, const Rect& b) {
  const double inter = intersection_area(a, b).value();
  const double uni = a.area().value() + b.area().value() - inter;
  if (uni <= 0.0) return 0.0;
  return std::clamp(inter / uni, 0.0, 1.0);
}

double recall_coverage(const Rect& det, const Rect& text) {
  require_same_page(det, text);
  const double denom = text.area().value();
  if (denom <= 0.0) {
    throw GeometryError("recall undefined for zero-area text box " +
                        to_string(text));
  }
  return std::clamp(intersection_area(det, text).value() / denom, 0.0, 1.0);
}

}  // namespace papersum
