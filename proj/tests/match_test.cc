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

#include <random>

#include "doctest.h"
#include "papersum/errors.h"
#include "papersum/match.h"

namespace papersum {
namespace {

TextBox box(int order, const std::string& text, double x0, double y0,
            double x1, double y1, double size = 10, int page = 0) {
  return TextBox{Rect{x0, y0, x1, y1, page}, text, size, order};
}

Detection det(DetectionClass k, double x0, double y0, double x1, double y1,
              int page = 0) {
  return Detection{k, Rect{x0, y0, x1, y1, page}, 0.9,
                   DetectionSource::kExternal};
}

TEST_CASE("box selection by recall coverage") {
  const Detection d = det(DetectionClass::kAbstract, 0, 0, 100, 100);
  const std::vector<TextBox> boxes = {
      box(0, "inside", 10, 10, 50, 20),
      box(1, "half", 80, 30, 120, 40),       // exactly 50% covered
      box(2, "little", 90, 50, 130, 60),     // 25%
      box(3, "outside", 200, 200, 250, 210),
      box(4, "other page", 10, 10, 50, 20, 10, 1)};
  std::vector<int> orders;
  for (const auto& b : match_text_boxes(d, boxes, 0.5)) orders.push_back(b.order);
  CHECK(orders == std::vector<int>{0, 1});
  orders.clear();
  for (const auto& b : match_text_boxes(d, boxes, 0.2)) orders.push_back(b.order);
  CHECK(orders == std::vector<int>{0, 1, 2});
  CHECK(match_text_boxes(d, boxes, 1.0).size() == 1);
  CHECK_THROWS_AS(match_text_boxes(d, boxes, 0.0), InvalidArgument);
  CHECK_THROWS_AS(match_text_boxes(d, boxes, 1.1), InvalidArgument);
}

TEST_CASE("zero-area boxes are skipped with a warning") {
  const Detection d = det(DetectionClass::kTitle, 0, 0, 100, 100);
  const std::vector<TextBox> boxes = {box(0, "flat", 10, 10, 50, 10),
                                      box(1, "ok", 10, 20, 50, 30)};
  std::vector<std::string> warnings;
  const auto got = match_text_boxes(d, boxes, 0.5, &warnings);
  REQUIRE(got.size() == 1);
  CHECK(got[0].order == 1);
  CHECK(warnings.size() == 1);
}

TEST_CASE("raising tau never adds boxes") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(0, 300);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<TextBox> boxes;
    for (int i = 0; i < 20; ++i) {
      const double x = u(rng), y = u(rng);
      boxes.push_back(box(i, "w", x, y, x + 5 + u(rng) / 4, y + 5 + u(rng) / 10));
    }
    const double x = u(rng), y = u(rng);
    const Detection d = det(DetectionClass::kFigure, x, y, x + u(rng), y + u(rng));
    std::size_t prev = boxes.size() + 1;
    for (double tau : {0.05, 0.25, 0.5, 0.75, 1.0}) {
      const auto got = match_text_boxes(d, boxes, tau);
      CHECK(got.size() <= prev);
      prev = got.size();
    }
  }
}

TEST_CASE("field text assembly") {
  const std::vector<TextBox> a = {box(0, "Deep  learn-", 0, 0, 1, 1),
                                  box(1, "ing for\tpapers", 0, 0, 1, 1)};
  CHECK(assemble_field_text(a) == "Deep learning for papers");
  const std::vector<TextBox> b = {box(0, " Jane Roe ", 0, 0, 1, 1),
                                  box(1, "", 0, 0, 1, 1),
                                  box(2, "John Doe", 0, 0, 1, 1)};
  CHECK(assemble_field_text(b) == "Jane Roe John Doe");
  CHECK(assemble_field_text({}) == "");
}

TEST_CASE("match_field reports recall values") {
  const Detection d = det(DetectionClass::kTitle, 0, 0, 100, 100);
  const std::vector<TextBox> boxes = {box(0, "A", 10, 10, 50, 20),
                                      box(1, "B", 80, 30, 120, 40)};
  const FieldText f = match_field(d, boxes, 0.5);
  CHECK(f.text == "A B");
  CHECK(f.klass == DetectionClass::kTitle);
  REQUIRE(f.recall_values.size() == 2);
  CHECK(f.recall_values[0] == doctest::Approx(1.0));
  CHECK(f.recall_values[1] == doctest::Approx(0.5));
}

TEST_CASE("caption directly below a figure") {
  const Detection fig = det(DetectionClass::kFigure, 50, 100, 300, 300);
  const std::vector<TextBox> boxes = {box(0, "Figure 1. A plot.", 50, 305, 300, 315)};
  const auto c = associate_caption(fig, boxes);
  REQUIRE(c);
  CHECK(c->text == "Figure 1. A plot.");
  CHECK(c->vertical_gap == doctest::Approx(5.0));
  CHECK(c->owner == fig);
}

TEST_CASE("nearest caption wins") {
  const Detection fig = det(DetectionClass::kFigure, 50, 100, 300, 300);
  const std::vector<TextBox> boxes = {box(0, "far", 50, 340, 300, 350),
                                      box(1, "near", 50, 305, 300, 315, 14)};
  const auto c = associate_caption(fig, boxes);
  REQUIRE(c);
  CHECK(c->text == "near");
  CHECK(c->vertical_gap == doctest::Approx(5.0));
}

TEST_CASE("no caption when nothing is close below") {
  const Detection fig = det(DetectionClass::kFigure, 50, 100, 300, 300);
  const std::vector<TextBox> far = {box(0, "far", 50, 340, 300, 350)};
  CHECK_FALSE(associate_caption(fig, far));
  const std::vector<TextBox> above = {box(0, "above", 50, 80, 300, 90)};
  CHECK_FALSE(associate_caption(fig, above));
  const std::vector<TextBox> aside = {box(0, "aside", 400, 305, 500, 315)};
  CHECK_FALSE(associate_caption(fig, aside));
  CHECK_FALSE(associate_caption(fig, {}));
}

TEST_CASE("multi-line captions are joined") {
  const Detection fig = det(DetectionClass::kFigure, 50, 100, 300, 300);
  const std::vector<TextBox> boxes = {
      box(0, "Figure 1. First line", 50, 305, 300, 315, 9),
      box(1, "and second line.", 50, 316, 250, 326, 9),
      box(2, "Body text starts here.", 50, 360, 300, 370, 10)};
  const auto c = associate_caption(fig, boxes);
  REQUIRE(c);
  CHECK(c->text == "Figure 1. First line and second line.");
  CHECK(c->boxes.size() == 2);
}

TEST_CASE("extraction classification") {
  const std::vector<BoxRef> gt = {{0, 1}, {0, 2}, {0, 3}, {0, 4}};
  const std::vector<BoxRef> all = gt;
  const std::vector<BoxRef> half = {{0, 1}, {0, 2}};
  const std::vector<BoxRef> one = {{0, 1}};
  const std::vector<BoxRef> none = {};
  const std::vector<BoxRef> elsewhere = {{0, 9}};
  const std::vector<BoxRef> superset = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}};
  CHECK(classify_extraction(all, gt) == ExtractionOutcome::kComplete);
  CHECK(classify_extraction(half, gt) == ExtractionOutcome::kPartial);
  CHECK(classify_extraction(one, gt) == ExtractionOutcome::kFail);
  CHECK(classify_extraction(none, gt) == ExtractionOutcome::kFail);
  CHECK(classify_extraction(elsewhere, gt) == ExtractionOutcome::kFail);
  CHECK(classify_extraction(superset, gt) == ExtractionOutcome::kPartial);
  const std::vector<BoxRef> reversed(gt.rbegin(), gt.rend());
  CHECK(classify_extraction(reversed, gt) == ExtractionOutcome::kComplete);
  CHECK_THROWS_AS(classify_extraction(all, none), InvalidArgument);
  CHECK(to_string(ExtractionOutcome::kPartial) == "partial");
}

TEST_CASE("classification over text boxes uses identity") {
  const std::vector<TextBox> gt = {box(0, "a", 0, 0, 1, 1), box(1, "b", 0, 0, 1, 1)};
  const std::vector<TextBox> moved = {box(0, "a", 5, 5, 6, 6), box(1, "b", 5, 5, 6, 6)};
  CHECK(classify_extraction(moved, gt) == ExtractionOutcome::kComplete);
}

TEST_CASE("ground-truth field file") {
  const auto one = load_field_ground_truth(
      R"({"doc_id": "p", "field": "abstract", "box_refs": [[0, 4], [0, 5]]})");
  REQUIRE(one.size() == 1);
  CHECK(one[0].field == DetectionClass::kAbstract);
  CHECK(one[0].box_refs == std::vector<BoxRef>{{0, 4}, {0, 5}});
  const auto many = load_field_ground_truth(
      R"([{"doc_id": "p", "field": "title", "box_refs": [[0, 0]]},
          {"doc_id": "q", "field": "author", "box_refs": []}])");
  CHECK(many.size() == 2);
  CHECK_THROWS_AS(load_field_ground_truth(
                      R"({"doc_id": "p", "field": "figure", "box_refs": []})"),
                  SchemaError);
  CHECK_THROWS_AS(load_field_ground_truth(
                      R"({"doc_id": "p", "field": "title", "box_refs": [[0]]})"),
                  SchemaError);
  CHECK_THROWS_AS(load_field_ground_truth("[1, 2"), SchemaError);
}

}  // namespace
}  // namespace papersum
