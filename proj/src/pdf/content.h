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

#ifndef PAPERSUM_PDF_CONTENT_H_
#define PAPERSUM_PDF_CONTENT_H_

#include <string>
#include <vector>

#include "pdf/document.h"

namespace papersum::pdf {

// Axis-aligned box in page space: origin top-left of the visible page box,
// y downward, points.
struct Box {
  double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
};

struct PlacedGlyph {
  std::string text;  // UTF-8; " " for spaces, may be empty
  Box bbox;
  double baseline = 0;  // y of the baseline, page space
  double size = 0;      // effective font size in points
  bool is_space = false;
};

struct PageContent {
  std::vector<PlacedGlyph> glyphs;  // content-stream order
  std::vector<Box> images;          // raster XObjects and inline images
  std::vector<Box> paths;           // painted vector paths
  std::vector<std::string> warnings;
};

// Runs the page's content stream (including nested form XObjects) and
// returns every glyph, image placement and painted path.
PageContent interpret_page(const Document& doc, const PageSource& page);

}  // namespace papersum::pdf

#endif  // PAPERSUM_PDF_CONTENT_H_
