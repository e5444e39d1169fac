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

#include "papersum/ir.h"

#include <algorithm>
#include <set>

#include <fmt/format.h>

#include "papersum/canonical_json.h"
#include "papersum/errors.h"
#include "papersum/text.h"

namespace papersum {
namespace {

constexpr double kTwoColumnShare = 0.6;

Rect parse_rect(const Json& obj, const std::string& path, int page_index,
                const Page& page) {
  const Json& r = require_field(obj, "rect", path);
  const std::string rpath = path + ".rect";
  require_object(r, rpath);
  Rect rect{require_number(r, "x0", rpath), require_number(r, "y0", rpath),
            require_number(r, "x1", rpath), require_number(r, "y1", rpath),
            page_index};
  if (rect.x1 < rect.x0 || rect.y1 < rect.y0) {
    throw SchemaError(rpath, "inverted rect (x1 < x0 or y1 < y0)");
  }
  return clamp_to_page(rect, page.width, page.height);
}

Json rect_json(const Rect& r) {
  return Json{{"x0", r.x0}, {"y0", r.y0}, {"x1", r.x1}, {"y1", r.y1}};
}

ImageKind parse_kind(const std::string& s, const std::string& path) {
  if (s == "raster") return ImageKind::kRaster;
  if (s == "vector-group") return ImageKind::kVectorGroup;
  throw SchemaError(path, "unknown image kind '" + s + "'");
}

bool sort_by_position(const TextBox& a, const TextBox& b) {
  if (a.rect.y0 != b.rect.y0) return a.rect.y0 < b.rect.y0;
  if (a.rect.x0 != b.rect.x0) return a.rect.x0 < b.rect.x0;
  return a.order < b.order;
}

}  // namespace

std::string_view to_string(ImageKind kind) {
  return kind == ImageKind::kRaster ? "raster" : "vector-group";
}

const TextBox* DocumentIR::find_box(const BoxRef& ref) const {
  if (ref.page < 0 || ref.page >= static_cast<int>(pages.size())) {
    return nullptr;
  }
  const auto& boxes = pages[static_cast<std::size_t>(ref.page)].text_boxes;
  auto it = std::lower_bound(
      boxes.begin(), boxes.end(), ref.order,
      [](const TextBox& b, int order) { return b.order < order; });
  if (it == boxes.end() || it->order != ref.order) return nullptr;
  return &*it;
}

DocumentIR load_ir(std::string_view json) {
  const Json root = parse_json(json, "ir");
  require_object(root, "ir");
  const int version = require_int(root, "ir_version", "");
  if (version != kIrVersion) {
    throw SchemaError("ir_version",
                      fmt::format("unsupported version {}", version));
  }
  DocumentIR ir;
  ir.doc_id = require_string(root, "doc_id", "");
  const Json& pages = require_array(root, "pages", "");
  for (std::size_t p = 0; p < pages.size(); ++p) {
    const std::string path = fmt::format("pages[{}]", p);
    const Json& pj = pages[p];
    require_object(pj, path);
    Page page;
    page.width = require_number(pj, "width", path);
    page.height = require_number(pj, "height", path);
    if (page.width <= 0.0 || page.height <= 0.0) {
      throw SchemaError(path + ".width", "page dimensions must be positive");
    }
    const int page_index = static_cast<int>(p);
    const Json& boxes = require_array(pj, "text_boxes", path);
    for (std::size_t b = 0; b < boxes.size(); ++b) {
      const std::string bpath = fmt::format("{}.text_boxes[{}]", path, b);
      const Json& bj = boxes[b];
      require_object(bj, bpath);
      TextBox box;
      box.rect = parse_rect(bj, bpath, page_index, page);
      box.text = normalize_nfc(require_string(bj, "text", bpath));
      if (auto it = bj.find("font_size"); it != bj.end()) {
        box.font_size = require_number(bj, "font_size", bpath);
      }
      box.order = require_int(bj, "order", bpath);
      page.text_boxes.push_back(std::move(box));
    }
    std::sort(page.text_boxes.begin(), page.text_boxes.end(),
              [](const TextBox& a, const TextBox& b) {
                return a.order < b.order;
              });
    if (auto it = pj.find("image_regions"); it != pj.end()) {
      const Json& regions = require_array(pj, "image_regions", path);
      for (std::size_t i = 0; i < regions.size(); ++i) {
        const std::string ipath = fmt::format("{}.image_regions[{}]", path, i);
        require_object(regions[i], ipath);
        ImageRegion region;
        region.rect = parse_rect(regions[i], ipath, page_index, page);
        region.kind = parse_kind(require_string(regions[i], "kind", ipath),
                                 ipath + ".kind");
        page.image_regions.push_back(region);
      }
    }
    ir.pages.push_back(std::move(page));
  }
  if (auto it = root.find("warnings"); it != root.end()) {
    const Json& warnings = require_array(root, "warnings", "");
    for (std::size_t i = 0; i < warnings.size(); ++i) {
      if (!warnings[i].is_string()) {
        throw SchemaError(fmt::format("warnings[{}]", i), "expected a string");
      }
      ir.warnings.push_back(warnings[i].get<std::string>());
    }
  }
  validate_ir(ir);
  return ir;
}

void validate_ir(const DocumentIR& ir) {
  if (ir.pages.empty()) throw SchemaError("pages", "document has no pages");
  for (std::size_t p = 0; p < ir.pages.size(); ++p) {
    const Page& page = ir.pages[p];
    const std::string path = fmt::format("pages[{}]", p);
    if (!(page.width > 0.0) || !(page.height > 0.0)) {
      throw SchemaError(path + ".width", "page dimensions must be positive");
    }
    std::set<int> orders;
    for (std::size_t b = 0; b < page.text_boxes.size(); ++b) {
      const TextBox& box = page.text_boxes[b];
      const std::string bpath = fmt::format("{}.text_boxes[{}]", path, b);
      if (!is_valid(box.rect) ||
          box.rect.page_index != static_cast<int>(p)) {
        throw SchemaError(bpath + ".rect", "invalid rect");
      }
      if (trim(box.text).empty()) {
        throw SchemaError(bpath + ".text", "text is empty");
      }
      if (box.font_size < 0.0) {
        throw SchemaError(bpath + ".font_size", "negative font size");
      }
      if (!orders.insert(box.order).second) {
        throw SchemaError(bpath + ".order",
                          fmt::format("duplicate order {}", box.order));
      }
    }
    for (std::size_t i = 0; i < page.image_regions.size(); ++i) {
      const Rect& r = page.image_regions[i].rect;
      if (!is_valid(r) || r.is_degenerate() ||
          r.page_index != static_cast<int>(p)) {
        throw SchemaError(fmt::format("{}.image_regions[{}].rect", path, i),
                          "image region must have positive area");
      }
    }
  }
}

std::string save_ir(const DocumentIR& ir) {
  Json pages = Json::array();
  for (const Page& page : ir.pages) {
    Json boxes = Json::array();
    std::vector<const TextBox*> sorted;
    for (const auto& b : page.text_boxes) sorted.push_back(&b);
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const TextBox* a, const TextBox* b) {
                       return a->order < b->order;
                     });
    for (const TextBox* b : sorted) {
      boxes.push_back(Json{{"rect", rect_json(b->rect)},
                           {"text", b->text},
                           {"font_size", b->font_size},
                           {"order", b->order}});
    }
    Json regions = Json::array();
    for (const auto& r : page.image_regions) {
      regions.push_back(
          Json{{"rect", rect_json(r.rect)}, {"kind", to_string(r.kind)}});
    }
    pages.push_back(Json{{"width", page.width},
                         {"height", page.height},
                         {"text_boxes", std::move(boxes)},
                         {"image_regions", std::move(regions)}});
  }
  Json root{{"ir_version", kIrVersion},
            {"doc_id", ir.doc_id},
            {"pages", std::move(pages)},
            {"warnings", ir.warnings}};
  return write_canonical(root, kIrDecimals);
}

void assign_reading_order(Page& page) {
  auto& boxes = page.text_boxes;
  if (boxes.empty()) return;
  const double mid = page.width / 2.0;
  auto side = [mid](const TextBox& b) {
    if (b.rect.x1 <= mid) return 0;  // left
    if (b.rect.x0 >= mid) return 1;  // right
    return 2;                        // spans the midline
  };
  std::size_t in_half = 0;
  for (const auto& b : boxes) {
    if (side(b) != 2) ++in_half;
  }
  const bool two_column =
      static_cast<double>(in_half) >=
      kTwoColumnShare * static_cast<double>(boxes.size());

  std::vector<TextBox> ordered;
  ordered.reserve(boxes.size());
  if (!two_column) {
    ordered = boxes;
    std::sort(ordered.begin(), ordered.end(), sort_by_position);
  } else {
    std::vector<TextBox> spanning;
    for (const auto& b : boxes) {
      if (side(b) == 2) spanning.push_back(b);
    }
    std::sort(spanning.begin(), spanning.end(), sort_by_position);
    // Band i holds the column boxes above spanning[i]; the last band holds
    // everything below the final spanning box.
    std::vector<std::vector<TextBox>> bands(spanning.size() + 1);
    for (const auto& b : boxes) {
      if (side(b) == 2) continue;
      std::size_t band = 0;
      while (band < spanning.size() && b.rect.y0 >= spanning[band].rect.y0) {
        ++band;
      }
      bands[band].push_back(b);
    }
    for (std::size_t i = 0; i < bands.size(); ++i) {
      auto& band = bands[i];
      std::stable_sort(band.begin(), band.end(),
                       [&](const TextBox& a, const TextBox& b) {
                         if (side(a) != side(b)) return side(a) < side(b);
                         return sort_by_position(a, b);
                       });
      ordered.insert(ordered.end(), band.begin(), band.end());
      if (i < spanning.size()) ordered.push_back(spanning[i]);
    }
  }
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    ordered[i].order = static_cast<int>(i);
  }
  boxes = std::move(ordered);
}

}  // namespace papersum
