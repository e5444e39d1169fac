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

#include <string>

#include "doctest.h"
#include "papersum/errors.h"
#include "papersum/ir.h"
#include "test_support.h"

namespace papersum {
namespace {

const char kSample[] = R"({
  "doc_id": "sample",
  "ir_version": 1,
  "pages": [
    {
      "height": 792.000,
      "image_regions": [
        {
          "kind": "vector-group",
          "rect": {
            "x0": 100.000,
            "x1": 300.000,
            "y0": 400.000,
            "y1": 500.000
          }
        }
      ],
      "text_boxes": [
        {
          "font_size": 20.000,
          "order": 0,
          "rect": {
            "x0": 72.000,
            "x1": 300.500,
            "y0": 72.000,
            "y1": 92.250
          },
          "text": "A Title"
        },
        {
          "font_size": 0.000,
          "order": 1,
          "rect": {
            "x0": 72.000,
            "x1": 540.000,
            "y0": 100.000,
            "y1": 110.000
          },
          "text": "Body text é."
        }
      ],
      "width": 612.000
    }
  ],
  "warnings": [
    "no extractable text"
  ]
}
)";

std::string expect_schema_field(const std::string& json) {
  try {
    load_ir(json);
  } catch (const SchemaError& e) {
    return e.field();
  }
  return "<no error>";
}

std::string patch(std::string s, const std::string& from, const std::string& to) {
  const auto pos = s.find(from);
  REQUIRE(pos != std::string::npos);
  return s.replace(pos, from.size(), to);
}

TEST_CASE("canonical sample round-trips byte for byte") {
  const DocumentIR ir = load_ir(kSample);
  CHECK(save_ir(ir) == kSample);
  CHECK(load_ir(save_ir(ir)) == ir);
  REQUIRE(ir.pages.size() == 1);
  CHECK(ir.pages[0].image_regions[0].kind == ImageKind::kVectorGroup);
  CHECK(ir.warnings == std::vector<std::string>{kWarningNoText});
}

TEST_CASE("bundled fixture round-trips") {
  const DocumentIR ir = load_ir(testing::slurp(testing::fixture_path("synthetic_paper.json")));
  CHECK(load_ir(save_ir(ir)) == ir);
  CHECK(save_ir(load_ir(save_ir(ir))) == save_ir(ir));
}

TEST_CASE("inverted rect names the rect field") {
  const std::string bad = patch(kSample, "\"x1\": 300.500", "\"x1\": 10.000");
  const std::string field = expect_schema_field(bad);
  CHECK(field.find("rect") != std::string::npos);
  CHECK(field == "pages[0].text_boxes[0].rect");
}

TEST_CASE("schema violations name their field") {
  CHECK(expect_schema_field(patch(kSample, "\"doc_id\": \"sample\",", "")) == "doc_id");
  CHECK(expect_schema_field(patch(kSample, "\"width\": 612.000", "\"width\": -1")) ==
        "pages[0].width");
  CHECK(expect_schema_field(patch(kSample, "\"text\": \"A Title\"", "\"text\": \"  \"")) ==
        "pages[0].text_boxes[0].text");
  CHECK(expect_schema_field(patch(kSample, "\"order\": 1", "\"order\": 0")) ==
        "pages[0].text_boxes[1].order");
  CHECK(expect_schema_field(patch(kSample, "\"kind\": \"vector-group\"", "\"kind\": \"blob\"")) ==
        "pages[0].image_regions[0].kind");
  CHECK(expect_schema_field(patch(kSample, "\"ir_version\": 1", "\"ir_version\": 2")) ==
        "ir_version");
  CHECK(expect_schema_field("{\"doc_id\": \"x\", \"ir_version\": 1, \"pages\": []}") ==
        "pages");
  CHECK(expect_schema_field("not json") == "ir");
}

TEST_CASE("missing font size defaults to zero") {
  const DocumentIR ir = load_ir(patch(kSample, "\"font_size\": 20.000,", ""));
  CHECK(ir.pages[0].text_boxes[0].font_size == 0.0);
}

TEST_CASE("rects outside the page are clamped on load") {
  const DocumentIR ir = load_ir(patch(kSample, "\"x1\": 540.000", "\"x1\": 900.000"));
  CHECK(ir.pages[0].text_boxes[1].rect.x1 == 612.0);
}

TextBox box(const std::string& text, double x0, double y0, double x1, double y1) {
  return TextBox{Rect{x0, y0, x1, y1, 0}, text, 10.0, 0};
}

std::vector<std::string> texts(const Page& p) {
  std::vector<std::string> out;
  for (const auto& b : p.text_boxes) out.push_back(b.text);
  return out;
}

TEST_CASE("two-column pages read left column first") {
  Page page;
  page.width = 612;
  page.height = 792;
  page.text_boxes = {box("B", 320, 100, 540, 110), box("C", 72, 400, 290, 410),
                     box("A", 72, 100, 290, 110)};
  assign_reading_order(page);
  CHECK(texts(page) == std::vector<std::string>{"A", "C", "B"});
  for (int i = 0; i < 3; ++i) CHECK(page.text_boxes[i].order == i);
}

TEST_CASE("spanning boxes separate column bands") {
  Page page;
  page.width = 612;
  page.height = 792;
  page.text_boxes = {box("Title", 72, 50, 540, 70),   box("L1", 72, 100, 290, 110),
                     box("R1", 320, 100, 540, 110),  box("L2", 72, 120, 290, 130),
                     box("Wide", 72, 300, 540, 310), box("R3", 320, 400, 540, 410),
                     box("L3", 72, 400, 290, 410)};
  assign_reading_order(page);
  CHECK(texts(page) ==
        std::vector<std::string>{"Title", "L1", "L2", "R1", "Wide", "L3", "R3"});
}

TEST_CASE("single-column pages read top to bottom") {
  Page page;
  page.width = 612;
  page.height = 792;
  page.text_boxes = {box("second", 72, 200, 540, 210), box("first", 72, 100, 540, 110),
                     box("third", 72, 300, 540, 310)};
  assign_reading_order(page);
  CHECK(texts(page) == std::vector<std::string>{"first", "second", "third"});
}

}  // namespace
}  // namespace papersum
