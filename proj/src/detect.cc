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

#include "papersum/detect.h"

#include <algorithm>
#include <cmath>
#include <regex>

#include <fmt/format.h>

#include "papersum/canonical_json.h"
#include "papersum/errors.h"
#include "papersum/text.h"

namespace papersum {
namespace {

constexpr double kTitleConfidence = 0.9;
constexpr double kAbstractConfidence = 0.8;
constexpr double kFigureConfidence = 0.7;
constexpr double kAuthorConfidence = 0.6;
constexpr double kTitleBand = 0.4;         // share of page height
constexpr double kFontTolerance = 0.25;    // points
constexpr double kEdgeSlack = 1.0;         // points
constexpr std::size_t kMaxHeadingLength = 60;

struct CoordSpace {
  bool pixel = false;
  double render_w = 0.0;
  double render_h = 0.0;
};

CoordSpace read_coord_space(const Json& obj, const std::string& path,
                            const CoordSpace& inherited) {
  CoordSpace cs = inherited;
  if (auto it = obj.find("coord_space"); it != obj.end()) {
    if (!it->is_string()) {
      throw SchemaError(path + ".coord_space", "expected a string");
    }
    const auto name = it->get<std::string>();
    if (name == "pixel") {
      cs.pixel = true;
    } else if (name == "normalized") {
      cs.pixel = false;
    } else {
      throw SchemaError(path + ".coord_space",
                        "expected \"normalized\" or \"pixel\", got \"" + name +
                            "\"");
    }
  }
  if (auto it = obj.find("render_size"); it != obj.end()) {
    const std::string where = path + ".render_size";
    if (!it->is_array() || it->size() != 2 || !(*it)[0].is_number() ||
        !(*it)[1].is_number()) {
      throw SchemaError(where, "expected [width, height]");
    }
    cs.render_w = (*it)[0].get<double>();
    cs.render_h = (*it)[1].get<double>();
    if (!(cs.render_w > 0) || !(cs.render_h > 0) ||
        !std::isfinite(cs.render_w) || !std::isfinite(cs.render_h)) {
      throw SchemaError(where, "render size must be positive");
    }
  }
  return cs;
}

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

RegionRecord parse_region(const Json& det, const std::string& path,
                          int page_index, const CoordSpace& page_cs,
                          bool require_confidence) {
  require_object(det, path);
  const std::string name = require_string(det, "class", path);
  const auto klass = parse_detection_class(name);
  if (!klass) {
    throw SchemaError(path + ".class", "unknown class \"" + name + "\"");
  }
  const Json& bbox = require_field(det, "bbox", path);
  const std::string bpath = path + ".bbox";
  if (!bbox.is_array() || bbox.size() != 4) {
    throw SchemaError(bpath, "expected [x0, y0, x1, y1]");
  }
  double c[4];
  for (int i = 0; i < 4; ++i) {
    if (!bbox[i].is_number() || !std::isfinite(bbox[i].get<double>())) {
      throw SchemaError(bpath, "coordinates must be finite numbers");
    }
    c[i] = bbox[i].get<double>();
  }
  if (c[0] > c[2] || c[1] > c[3]) {
    throw SchemaError(bpath, "inverted box (need x0 <= x1 and y0 <= y1)");
  }
  const CoordSpace cs = read_coord_space(det, path, page_cs);
  if (cs.pixel) {
    if (cs.render_w <= 0) {
      throw SchemaError(path, "pixel coordinates without render_size");
    }
    c[0] /= cs.render_w;
    c[2] /= cs.render_w;
    c[1] /= cs.render_h;
    c[3] /= cs.render_h;
  }
  RegionRecord rec;
  rec.klass = *klass;
  rec.rect = Rect{clamp01(c[0]), clamp01(c[1]), clamp01(c[2]), clamp01(c[3]),
                  page_index};
  if (auto it = det.find("confidence"); it != det.end()) {
    if (!it->is_number()) {
      throw SchemaError(path + ".confidence", "expected a number");
    }
    const double conf = it->get<double>();
    if (!(conf >= 0.0 && conf <= 1.0)) {
      throw SchemaError(path + ".confidence", "confidence outside [0, 1]");
    }
    rec.confidence = conf;
  } else if (require_confidence) {
    throw SchemaError(path + ".confidence", "missing required field");
  }
  return rec;
}

void check_version(const Json& obj, const std::string& path) {
  auto it = obj.find("detections_version");
  if (it == obj.end()) return;
  if (!it->is_number_integer() || it->get<int>() != kDetectionsVersion) {
    throw SchemaError(path.empty() ? "detections_version"
                                   : path + ".detections_version",
                      fmt::format("unsupported version (expected {})",
                                  kDetectionsVersion));
  }
}

RegionDocument parse_document(const Json& doc, const std::string& path,
                              bool require_confidence) {
  require_object(doc, path);
  check_version(doc, path);
  RegionDocument out;
  out.doc_id = require_string(doc, "doc_id", path);
  const std::string prefix = path.empty() ? "" : path + ".";
  const Json& pages = require_array(doc, "pages", path);
  for (std::size_t p = 0; p < pages.size(); ++p) {
    const std::string ppath = fmt::format("{}pages[{}]", prefix, p);
    const Json& page = pages[p];
    require_object(page, ppath);
    const int page_index = require_int(page, "page_index", ppath);
    if (page_index < 0) {
      throw SchemaError(ppath + ".page_index", "must be >= 0");
    }
    const CoordSpace cs = read_coord_space(page, ppath, CoordSpace{});
    const Json& dets = require_array(page, "detections", ppath);
    for (std::size_t d = 0; d < dets.size(); ++d) {
      out.regions.push_back(
          parse_region(dets[d], fmt::format("{}.detections[{}]", ppath, d),
                       page_index, cs, require_confidence));
    }
  }
  return out;
}

bool document_order(const Detection& a, const Detection& b) {
  if (a.rect.page_index != b.rect.page_index) {
    return a.rect.page_index < b.rect.page_index;
  }
  if (a.rect.y0 != b.rect.y0) return a.rect.y0 < b.rect.y0;
  return a.rect.x0 < b.rect.x0;
}

double median_font_size(const Page& page) {
  std::vector<double> sizes;
  for (const auto& box : page.text_boxes) {
    if (box.font_size > 0) sizes.push_back(box.font_size);
  }
  if (sizes.empty()) return 0.0;
  std::sort(sizes.begin(), sizes.end());
  const std::size_t n = sizes.size();
  return n % 2 ? sizes[n / 2] : (sizes[n / 2 - 1] + sizes[n / 2]) / 2.0;
}

std::optional<Rect> union_of(const std::vector<const TextBox*>& boxes) {
  if (boxes.empty()) return std::nullopt;
  Rect r = boxes.front()->rect;
  for (const TextBox* b : boxes) r = bounding_union(r, b->rect);
  return r;
}

// Indices into page.text_boxes forming the title run, or empty.
std::vector<std::size_t> find_title(const Page& page) {
  const double band = kTitleBand * page.height;
  double max_size = 0.0;
  for (const auto& box : page.text_boxes) {
    if (box.rect.y0 < band) max_size = std::max(max_size, box.font_size);
  }
  if (max_size <= 0.0 || max_size <= median_font_size(page)) return {};
  std::vector<std::size_t> run;
  for (std::size_t i = 0; i < page.text_boxes.size(); ++i) {
    const TextBox& box = page.text_boxes[i];
    const bool hit = box.rect.y0 < band &&
                     std::abs(box.font_size - max_size) <= kFontTolerance;
    if (hit) {
      run.push_back(i);
    } else if (!run.empty()) {
      break;
    }
  }
  return run;
}

}  // namespace

std::string_view to_string(DetectionClass klass) {
  switch (klass) {
    case DetectionClass::kAbstract: return "abstract";
    case DetectionClass::kAuthor: return "author";
    case DetectionClass::kFigure: return "figure";
    case DetectionClass::kTable: return "table";
    case DetectionClass::kTitle: return "title";
  }
  return "unknown";
}

std::optional<DetectionClass> parse_detection_class(std::string_view name) {
  for (DetectionClass k : kAllClasses) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

std::string_view to_string(DetectionSource source) {
  return source == DetectionSource::kHeuristic ? "heuristic" : "external";
}

std::vector<RegionDocument> parse_region_file(std::string_view json,
                                              bool require_confidence) {
  const Json root = parse_json(json, "detections");
  require_object(root, "");
  std::vector<RegionDocument> docs;
  if (auto it = root.find("documents"); it != root.end()) {
    check_version(root, "");
    if (!it->is_array()) throw SchemaError("documents", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      docs.push_back(parse_document((*it)[i], fmt::format("documents[{}]", i),
                                    require_confidence));
    }
  } else {
    docs.push_back(parse_document(root, "", require_confidence));
  }
  return docs;
}

std::vector<Detection> load_detections(std::string_view json,
                                       const DocumentIR& ir) {
  const auto docs = parse_region_file(json, /*require_confidence=*/true);
  const RegionDocument* doc = nullptr;
  for (const auto& d : docs) {
    if (d.doc_id == ir.doc_id) {
      doc = &d;
      break;
    }
  }
  if (doc == nullptr) {
    throw SchemaError("doc_id", "no detections for document \"" + ir.doc_id +
                                    "\"");
  }
  std::vector<Detection> out;
  for (const auto& rec : doc->regions) {
    const int p = rec.rect.page_index;
    if (p >= static_cast<int>(ir.pages.size())) {
      throw SchemaError("pages.page_index",
                        fmt::format("page {} not in document ({} pages)", p,
                                    ir.pages.size()));
    }
    const Page& page = ir.pages[p];
    const Rect r{rec.rect.x0 * page.width, rec.rect.y0 * page.height,
                 rec.rect.x1 * page.width, rec.rect.y1 * page.height, p};
    out.push_back(Detection{rec.klass, clamp_to_page(r, page.width, page.height),
                            *rec.confidence, DetectionSource::kExternal});
  }
  return out;
}

std::string save_detections(std::span<const Detection> dets,
                            const DocumentIR& ir) {
  Json pages = Json::array();
  for (std::size_t p = 0; p < ir.pages.size(); ++p) {
    const Page& page = ir.pages[p];
    Json list = Json::array();
    for (const auto& d : dets) {
      if (d.rect.page_index != static_cast<int>(p)) continue;
      list.push_back({{"class", to_string(d.klass)},
                      {"bbox",
                       {d.rect.x0 / page.width, d.rect.y0 / page.height,
                        d.rect.x1 / page.width, d.rect.y1 / page.height}},
                      {"confidence", d.confidence}});
    }
    if (list.empty()) continue;
    pages.push_back({{"page_index", p},
                     {"coord_space", "normalized"},
                     {"detections", std::move(list)}});
  }
  const Json root = {{"detections_version", kDetectionsVersion},
                     {"doc_id", ir.doc_id},
                     {"pages", std::move(pages)}};
  return write_canonical(root, 9);
}

bool is_abstract_heading(std::string_view text) {
  static const std::regex kHeading(R"(^\W*abstract\W*$)",
                                   std::regex::icase | std::regex::optimize);
  return std::regex_match(std::string(text), kHeading);
}

bool is_section_heading(std::string_view text) {
  static const std::regex kNumbered(
      R"(^(\d+(\.\d+)*\.?|[IVXLC]+\.)\s+[A-Z].*)", std::regex::optimize);
  static const std::regex kNamed(
      R"(^(introduction|related work|background|preliminaries|references)\W*$)",
      std::regex::icase | std::regex::optimize);
  static const std::regex kKeywords(R"(^(keywords|key words|index terms)\b.*)",
                                    std::regex::icase | std::regex::optimize);
  const std::string s = trim(text);
  if (std::regex_match(s, kKeywords)) return true;
  if (utf8_length(s) > kMaxHeadingLength) return false;
  return std::regex_match(s, kNumbered) || std::regex_match(s, kNamed);
}

std::vector<Detection> detect_heuristic(const DocumentIR& ir) {
  std::vector<Detection> out;
  if (!ir.pages.empty()) {
    const Page& page = ir.pages.front();
    const auto& boxes = page.text_boxes;

    const std::vector<std::size_t> title = find_title(page);
    std::vector<const TextBox*> title_boxes;
    for (std::size_t i : title) title_boxes.push_back(&boxes[i]);
    double title_bottom = 0.0;
    if (auto r = union_of(title_boxes)) {
      out.push_back(Detection{DetectionClass::kTitle, *r, kTitleConfidence,
                              DetectionSource::kHeuristic});
      title_bottom = r->y1;
    }

    std::optional<std::size_t> heading;
    for (std::size_t i = 0; i < boxes.size(); ++i) {
      static const std::regex kAbstract(R"(^\W*abstract\b.*)",
                                        std::regex::icase);
      if (std::regex_match(boxes[i].text, kAbstract)) {
        heading = i;
        break;
      }
    }
    if (heading) {
      const TextBox& head = boxes[*heading];
      std::vector<const TextBox*> body;
      if (!is_abstract_heading(head.text)) body.push_back(&head);
      for (std::size_t i = *heading + 1; i < boxes.size(); ++i) {
        if (is_section_heading(boxes[i].text)) break;
        body.push_back(&boxes[i]);
      }
      if (auto r = union_of(body)) {
        out.push_back(Detection{DetectionClass::kAbstract, *r,
                                kAbstractConfidence,
                                DetectionSource::kHeuristic});
      }

      std::vector<const TextBox*> authors;
      for (std::size_t i = 0; i < *heading; ++i) {
        if (std::find(title.begin(), title.end(), i) != title.end()) continue;
        const Rect& r = boxes[i].rect;
        if (r.y0 >= title_bottom - kEdgeSlack &&
            r.y1 <= head.rect.y0 + kEdgeSlack) {
          authors.push_back(&boxes[i]);
        }
      }
      if (auto r = union_of(authors)) {
        out.push_back(Detection{DetectionClass::kAuthor, *r, kAuthorConfidence,
                                DetectionSource::kHeuristic});
      }
    }
  }

  std::vector<Detection> figures;
  for (const auto& page : ir.pages) {
    for (const auto& region : page.image_regions) {
      figures.push_back(Detection{DetectionClass::kFigure, region.rect,
                                  kFigureConfidence,
                                  DetectionSource::kHeuristic});
    }
  }
  std::stable_sort(figures.begin(), figures.end(), document_order);
  out.insert(out.end(), figures.begin(), figures.end());
  return out;
}

FirstPageFields select_first_page_fields(std::span<const Detection> dets) {
  FirstPageFields fields;
  auto consider = [](std::optional<Detection>& slot, const Detection& d) {
    if (!slot || d.confidence > slot->confidence ||
        (d.confidence == slot->confidence &&
         (d.rect.y0 < slot->rect.y0 ||
          (d.rect.y0 == slot->rect.y0 && d.rect.x0 < slot->rect.x0)))) {
      slot = d;
    }
  };
  for (const auto& d : dets) {
    if (d.rect.page_index != 0) continue;
    switch (d.klass) {
      case DetectionClass::kTitle: consider(fields.title, d); break;
      case DetectionClass::kAuthor: consider(fields.author, d); break;
      case DetectionClass::kAbstract: consider(fields.abstract, d); break;
      default: break;
    }
  }
  return fields;
}

std::vector<Detection> select_figures_tables(std::span<const Detection> dets,
                                             double conf_threshold) {
  if (!(conf_threshold >= 0.0 && conf_threshold <= 1.0)) {
    throw InvalidArgument(
        fmt::format("confidence threshold {} outside [0, 1]", conf_threshold));
  }
  std::vector<Detection> out;
  for (const auto& d : dets) {
    if ((d.klass == DetectionClass::kFigure ||
         d.klass == DetectionClass::kTable) &&
        d.confidence >= conf_threshold) {
      out.push_back(d);
    }
  }
  std::stable_sort(out.begin(), out.end(), document_order);
  return out;
}

}  // namespace papersum
