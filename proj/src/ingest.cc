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

#include "papersum/ingest.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include <fmt/format.h>

#include "papersum/errors.h"
#include "papersum/text.h"
#include "pdf/content.h"
#include "pdf/document.h"

namespace papersum {
namespace {

// Line assembly thresholds, in multiples of the font size.
constexpr double kBaselineTolerance = 0.3;
constexpr double kMaxWordGap = 1.0;
constexpr double kMinSpaceGap = 0.15;
constexpr double kMaxOverlap = 0.5;

// Vector graphics grouping.
constexpr double kPathJoinDistance = 3.0;
constexpr double kMinGroupSide = 36.0;
constexpr std::size_t kMinGroupPaths = 3;
constexpr double kBackgroundShare = 0.9;
constexpr double kMinImageSide = 2.0;

struct Line {
  std::string text;
  pdf::Box bbox;
  double baseline = 0;
  double size = 0;
  bool pending_space = false;
  std::map<long, std::size_t> size_votes;  // size in 1/100 pt -> chars
};

void extend(pdf::Box& a, const pdf::Box& b) {
  a.x0 = std::min(a.x0, b.x0);
  a.y0 = std::min(a.y0, b.y0);
  a.x1 = std::max(a.x1, b.x1);
  a.y1 = std::max(a.y1, b.y1);
}

bool continues_line(const Line& line, const pdf::PlacedGlyph& g) {
  const double size = std::max({line.size, g.size, 1e-6});
  const double gap = g.bbox.x0 - line.bbox.x1;
  if (gap < -kMaxOverlap * size || gap > kMaxWordGap * size) return false;
  if (std::abs(g.baseline - line.baseline) <= kBaselineTolerance * size) {
    return true;
  }
  // Sub- and superscripts: smaller glyph whose centre sits inside the line.
  const double centre = (g.bbox.y0 + g.bbox.y1) / 2.0;
  return g.size < 0.9 * line.size && centre >= line.bbox.y0 &&
         centre <= line.bbox.y1;
}

double dominant_size(const Line& line) {
  std::size_t best_votes = 0;
  long best = 0;
  for (const auto& [size, votes] : line.size_votes) {
    if (votes > best_votes) {
      best_votes = votes;
      best = size;
    }
  }
  return static_cast<double>(best) / 100.0;
}

std::vector<Line> assemble_lines(const std::vector<pdf::PlacedGlyph>& glyphs) {
  std::vector<Line> lines;
  Line current;
  bool open = false;
  auto close = [&] {
    if (open) lines.push_back(std::move(current));
    current = Line();
    open = false;
  };
  for (const auto& g : glyphs) {
    if (g.is_space || trim(g.text).empty()) {
      if (open) current.pending_space = true;
      continue;
    }
    if (open && !continues_line(current, g)) close();
    if (!open) {
      current.bbox = g.bbox;
      current.baseline = g.baseline;
      current.size = g.size;
      open = true;
    } else {
      const double gap = g.bbox.x0 - current.bbox.x1;
      if ((current.pending_space || gap > kMinSpaceGap * current.size) &&
          !current.text.empty() && current.text.back() != ' ') {
        current.text.push_back(' ');
      }
      extend(current.bbox, g.bbox);
    }
    current.pending_space = false;
    current.text += g.text;
    current.size_votes[std::lround(g.size * 100.0)] += utf8_length(g.text);
  }
  close();
  return lines;
}

double area(const pdf::Box& b) {
  return std::max(0.0, b.x1 - b.x0) * std::max(0.0, b.y1 - b.y0);
}

bool near(const pdf::Box& a, const pdf::Box& b, double d) {
  return a.x0 - d <= b.x1 && b.x0 - d <= a.x1 && a.y0 - d <= b.y1 &&
         b.y0 - d <= a.y1;
}

// Clusters painted paths into figure-sized groups.
std::vector<pdf::Box> group_paths(const std::vector<pdf::Box>& paths,
                                  double page_w, double page_h) {
  std::vector<pdf::Box> kept;
  for (const auto& p : paths) {
    if (area(p) >= kBackgroundShare * page_w * page_h) continue;
    kept.push_back(p);
  }
  std::vector<std::size_t> parent(kept.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < kept.size(); ++i) {
    for (std::size_t j = i + 1; j < kept.size(); ++j) {
      if (near(kept[i], kept[j], kPathJoinDistance)) {
        parent[find(i)] = find(j);
      }
    }
  }
  std::map<std::size_t, std::pair<pdf::Box, std::size_t>> groups;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    auto [it, inserted] = groups.try_emplace(find(i), kept[i], 0);
    if (!inserted) extend(it->second.first, kept[i]);
    ++it->second.second;
  }
  std::vector<pdf::Box> out;
  for (const auto& [root, group] : groups) {
    const auto& [box, count] = group;
    if (count >= kMinGroupPaths && box.x1 - box.x0 >= kMinGroupSide &&
        box.y1 - box.y0 >= kMinGroupSide) {
      out.push_back(box);
    }
  }
  return out;
}

Rect to_rect(const pdf::Box& b, int page_index, double w, double h) {
  Rect r{std::min(b.x0, b.x1), std::min(b.y0, b.y1), std::max(b.x0, b.x1),
         std::max(b.y0, b.y1), page_index};
  return clamp_to_page(r, w, h);
}

bool sort_regions(const ImageRegion& a, const ImageRegion& b) {
  if (a.rect.y0 != b.rect.y0) return a.rect.y0 < b.rect.y0;
  if (a.rect.x0 != b.rect.x0) return a.rect.x0 < b.rect.x0;
  return a.kind < b.kind;
}

Page build_page(const pdf::Document& doc, const pdf::PageSource& src,
                int page_index, std::vector<std::string>& warnings) {
  Page page;
  page.width = src.urx - src.llx;
  page.height = src.ury - src.lly;
  const pdf::PageContent content = pdf::interpret_page(doc, src);
  for (const auto& w : content.warnings) {
    warnings.push_back(fmt::format("page {}: {}", page_index, w));
  }

  int order = 0;
  for (Line& line : assemble_lines(content.glyphs)) {
    std::string text = normalize_nfc(trim(line.text));
    if (text.empty()) continue;
    TextBox box;
    box.rect = to_rect(line.bbox, page_index, page.width, page.height);
    box.text = std::move(text);
    box.font_size = dominant_size(line);
    box.order = order++;
    page.text_boxes.push_back(std::move(box));
  }
  assign_reading_order(page);

  for (const auto& img : content.images) {
    Rect r = to_rect(img, page_index, page.width, page.height);
    if (r.width() < kMinImageSide || r.height() < kMinImageSide) continue;
    page.image_regions.push_back(ImageRegion{r, ImageKind::kRaster});
  }
  for (const auto& group : group_paths(content.paths, page.width, page.height)) {
    Rect r = to_rect(group, page_index, page.width, page.height);
    if (r.is_degenerate()) continue;
    bool covers_raster = false;
    for (const auto& raster : page.image_regions) {
      const double inter = intersection_area(raster.rect, r).value();
      const double smaller =
          std::min(raster.rect.area().value(), r.area().value());
      covers_raster = covers_raster || inter >= 0.5 * smaller;
    }
    if (!covers_raster) {
      page.image_regions.push_back(ImageRegion{r, ImageKind::kVectorGroup});
    }
  }
  std::sort(page.image_regions.begin(), page.image_regions.end(),
            sort_regions);
  return page;
}

}  // namespace

bool looks_like_pdf(std::string_view bytes) {
  const std::size_t pos = bytes.find("%PDF-");
  return pos != std::string_view::npos && pos < 1024;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IngestError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IngestError("cannot read " + path.string());
  return ss.str();
}

DocumentIR ingest_pdf(const std::filesystem::path& path) {
  return ingest_pdf_bytes(read_file(path), path.stem().string());
}

DocumentIR ingest_pdf_bytes(std::string bytes, std::string doc_id) {
  const pdf::Document doc(std::move(bytes));
  DocumentIR ir;
  ir.doc_id = std::move(doc_id);
  bool any_text = false;
  for (std::size_t i = 0; i < doc.pages().size(); ++i) {
    Page page = build_page(doc, doc.pages()[i], static_cast<int>(i),
                           ir.warnings);
    any_text = any_text || !page.text_boxes.empty();
    ir.pages.push_back(std::move(page));
  }
  if (!any_text) ir.warnings.insert(ir.warnings.begin(), kWarningNoText);
  validate_ir(ir);
  return ir;
}

}  // namespace papersum
