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

#include <algorithm>
#include <random>

#include "doctest.h"
#include "papersum/errors.h"
#include "papersum/eval.h"

namespace papersum {
namespace {

Annotation gt(const std::string& doc, DetectionClass k, double x0, double y0,
              double x1, double y1, int page = 0) {
  return Annotation{doc, k, Rect{x0, y0, x1, y1, page}};
}

Prediction pred(const std::string& doc, DetectionClass k, double x0, double y0,
                double x1, double y1, double conf = 0.9, int page = 0) {
  return Prediction{doc, k, Rect{x0, y0, x1, y1, page}, conf};
}

std::vector<Prediction> as_preds(const std::vector<Annotation>& gts) {
  std::vector<Prediction> out;
  for (const auto& g : gts) out.push_back(Prediction{g.doc_id, g.klass, g.rect, 1.0});
  return out;
}

std::vector<Annotation> random_gts(std::mt19937& rng, int n) {
  std::uniform_real_distribution<double> u(0, 0.8);
  std::uniform_int_distribution<int> k(0, 4), page(0, 2), doc(0, 2);
  std::vector<Annotation> out;
  for (int i = 0; i < n; ++i) {
    const double x = u(rng), y = u(rng);
    out.push_back(gt("d" + std::to_string(doc(rng)), kAllClasses[k(rng)], x, y,
                     x + 0.05 + u(rng) / 4, y + 0.05 + u(rng) / 4, page(rng)));
  }
  return out;
}

TEST_CASE("predictions equal to ground truth score one") {
  std::mt19937 rng(1);
  const auto gts = random_gts(rng, 40);
  const EvalReport r = evaluate_detections(as_preds(gts), gts);
  CHECK(r.overall_iou == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.num_gt == 40);
  for (const auto& [k, v] : r.per_class_iou) CHECK(v == doctest::Approx(1.0));
  for (const auto& [k, c] : r.counts) {
    CHECK(c.unmatched_gt == 0);
    CHECK(c.unmatched_pred == 0);
  }
}

TEST_CASE("no predictions scores zero") {
  const std::vector<Annotation> gts = {gt("d", DetectionClass::kTitle, 0, 0, 0.5, 0.1)};
  const EvalReport r = evaluate_detections({}, gts);
  CHECK(r.overall_iou == 0.0);
  CHECK(r.per_class_iou.at(DetectionClass::kTitle) == 0.0);
  CHECK(r.counts.at(DetectionClass::kTitle).unmatched_gt == 1);
  CHECK(r.counts.size() == 5);
  const EvalReport empty = evaluate_detections({}, {});
  CHECK(empty.overall_iou == 0.0);
  CHECK(empty.per_class_iou.empty());
}

TEST_CASE("half-overlapping boxes score one third") {
  // Overlap 0.5 of each unit box: IoU = 0.5 / 1.5.
  const std::vector<Annotation> gts = {gt("d", DetectionClass::kFigure, 0, 0, 0.2, 0.2)};
  const std::vector<Prediction> preds = {pred("d", DetectionClass::kFigure, 0.1, 0, 0.3, 0.2)};
  const EvalReport r = evaluate_detections(preds, gts);
  CHECK(std::abs(r.overall_iou - 1.0 / 3.0) < 1e-9);
  CHECK(std::abs(r.per_class_iou.at(DetectionClass::kFigure) - 1.0 / 3.0) < 1e-9);
}

TEST_CASE("matching is one-to-one and respects class and page") {
  const std::vector<Annotation> gts = {gt("d", DetectionClass::kTable, 0, 0, 0.5, 0.5),
                                       gt("d", DetectionClass::kTable, 0, 0, 0.5, 0.5, 1)};
  const std::vector<Prediction> preds = {
      pred("d", DetectionClass::kTable, 0, 0, 0.5, 0.5),
      pred("d", DetectionClass::kTable, 0, 0, 0.5, 0.5),
      pred("d", DetectionClass::kFigure, 0, 0, 0.5, 0.5, 0.9, 1),
      pred("e", DetectionClass::kTable, 0, 0, 0.5, 0.5, 0.9, 1)};
  const EvalReport r = evaluate_detections(preds, gts);
  CHECK(r.per_class_iou.at(DetectionClass::kTable) == doctest::Approx(0.5));
  const ClassCounts& t = r.counts.at(DetectionClass::kTable);
  CHECK(t.matched == 1);
  CHECK(t.unmatched_gt == 1);
  CHECK(t.unmatched_pred == 2);
  CHECK(r.counts.at(DetectionClass::kFigure).unmatched_pred == 1);
  CHECK(r.per_class_iou.count(DetectionClass::kFigure) == 0);
}

TEST_CASE("greedy matching takes the best pair first") {
  const std::vector<Annotation> gts = {gt("d", DetectionClass::kFigure, 0, 0, 0.4, 0.4),
                                       gt("d", DetectionClass::kFigure, 0.3, 0, 0.7, 0.4)};
  const std::vector<Prediction> preds = {pred("d", DetectionClass::kFigure, 0.3, 0, 0.7, 0.4),
                                         pred("d", DetectionClass::kFigure, 0.05, 0, 0.45, 0.4)};
  const EvalReport r = evaluate_detections(preds, gts);
  CHECK(r.counts.at(DetectionClass::kFigure).matched == 2);
  CHECK(r.overall_iou == doctest::Approx((1.0 + 0.35 / 0.45) / 2));
}

TEST_CASE("input order does not matter") {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    auto gts = random_gts(rng, 25);
    auto preds = as_preds(random_gts(rng, 25));
    for (std::size_t i = 0; i < gts.size(); i += 3) {
      Rect r = gts[i].rect;
      r.x0 += 0.01;
      preds.push_back(Prediction{gts[i].doc_id, gts[i].klass, r, 0.5});
    }
    const EvalReport a = evaluate_detections(preds, gts);
    std::shuffle(gts.begin(), gts.end(), rng);
    std::shuffle(preds.begin(), preds.end(), rng);
    const EvalReport b = evaluate_detections(preds, gts);
    CHECK(detection_report_json(a) == detection_report_json(b));
  }
}

TEST_CASE("a perfect extra prediction never lowers the score") {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const auto gts = random_gts(rng, 10);
    auto preds = as_preds(random_gts(rng, 10));
    const double before = evaluate_detections(preds, gts).overall_iou;
    std::uniform_int_distribution<std::size_t> pick(0, gts.size() - 1);
    const Annotation& g = gts[pick(rng)];
    preds.push_back(Prediction{g.doc_id, g.klass, g.rect, 0.9});
    CHECK(evaluate_detections(preds, gts).overall_iou >= before - 1e-12);
  }
}

TEST_CASE("region files load into normalized rects") {
  const std::string ann = R"({"documents": [{"doc_id": "a", "pages": [
    {"page_index": 0, "detections": [{"class": "title", "bbox": [0.1, 0.1, 0.5, 0.2]}]},
    {"page_index": 1, "coord_space": "pixel", "render_size": [1000, 2000],
     "detections": [{"class": "figure", "bbox": [100, 200, 500, 1000]}]}]}]})";
  const auto a = load_annotations(ann);
  REQUIRE(a.size() == 2);
  CHECK(a[1].rect.x0 == doctest::Approx(0.1));
  CHECK(a[1].rect.y1 == doctest::Approx(0.5));
  CHECK(a[1].rect.page_index == 1);
  CHECK_THROWS_AS(load_predictions(ann), SchemaError);  // no confidence
  CHECK_THROWS_AS(load_annotations(R"({"doc_id": "a", "pages": [{"page_index": 0,
    "detections": [{"class": "titel", "bbox": [0, 0, 1, 1]}]}]})"),
                  SchemaError);
}

TEST_CASE("extraction outcomes are tabulated per field") {
  const std::vector<ExtractionResult> results = {
      {"a", DetectionClass::kTitle, ExtractionOutcome::kComplete},
      {"b", DetectionClass::kTitle, ExtractionOutcome::kPartial},
      {"a", DetectionClass::kAbstract, ExtractionOutcome::kFail},
      {"b", DetectionClass::kTitle, ExtractionOutcome::kComplete}};
  const ExtractionReport r = tabulate_extraction(results);
  CHECK(r.per_field.at(DetectionClass::kTitle) == OutcomeCounts{2, 1, 0});
  CHECK(r.per_field.at(DetectionClass::kAbstract) == OutcomeCounts{0, 0, 1});
  CHECK(r.per_field.at(DetectionClass::kAuthor).total() == 0);
  CHECK(tabulate_extraction({}).per_field.size() == 3);
}

TEST_CASE("extraction is scored against summary field boxes") {
  SummaryPage page;
  page.doc_id = "a";
  page.field_boxes["title"] = {{0, 0}, {0, 1}};
  page.field_boxes["abstract"] = {{0, 5}};
  const std::vector<SummaryPage> pages = {page};
  const std::vector<FieldGroundTruth> truth = {
      {"a", DetectionClass::kTitle, {{0, 0}, {0, 1}}},
      {"a", DetectionClass::kAbstract, {{0, 5}, {0, 6}}},
      {"a", DetectionClass::kAuthor, {{0, 2}}},
      {"missing", DetectionClass::kTitle, {{0, 0}}}};
  const auto got = score_extraction(truth, pages);
  REQUIRE(got.size() == 4);
  CHECK(got[0].outcome == ExtractionOutcome::kComplete);
  CHECK(got[1].outcome == ExtractionOutcome::kPartial);
  CHECK(got[2].outcome == ExtractionOutcome::kFail);
  CHECK(got[3].outcome == ExtractionOutcome::kFail);
}

TEST_CASE("corpus word frequency") {
  SummaryPage a, b;
  a.doc_id = "a";
  a.sentences = {"The graph is a Graph.", "graph nodes"};
  b.doc_id = "b";
  b.sentences = {"graph edges the"};
  const std::vector<SummaryPage> pages = {a, b};
  const auto rows = corpus_word_frequency(pages, 3);
  using Row = std::pair<std::string, long>;
  CHECK(rows == std::vector<Row>{{"graph", 3}, {"Graph", 1}, {"The", 1}});
  const auto all = corpus_word_frequency(pages, 100);
  CHECK(all.size() == 8);
  CHECK(all[1] == Row{"Graph", 1});
  CHECK_THROWS_AS(corpus_word_frequency(pages, 0), InvalidArgument);
  // Merging corpora adds counts.
  const std::vector<SummaryPage> only_a = {a}, only_b = {b};
  const auto ra = corpus_word_frequency(only_a, 100);
  const auto rb = corpus_word_frequency(only_b, 100);
  auto count = [](const std::vector<Row>& rs, const std::string& t) {
    for (const auto& r : rs) {
      if (r.first == t) return r.second;
    }
    return 0L;
  };
  for (const auto& [token, n] : all) CHECK(n == count(ra, token) + count(rb, token));
}

TEST_CASE("reports are byte-stable") {
  const std::vector<Annotation> gts = {gt("d", DetectionClass::kFigure, 0, 0, 0.2, 0.2)};
  const std::vector<Prediction> preds = {pred("d", DetectionClass::kFigure, 0.1, 0, 0.3, 0.2)};
  const EvalReport r = evaluate_detections(preds, gts);
  const std::string json = detection_report_json(r);
  CHECK(json == detection_report_json(evaluate_detections(preds, gts)));
  CHECK(json.find("\"overall_iou\": 0.333333333333") != std::string::npos);
  CHECK(json.find("\"iou\": null") != std::string::npos);
  CHECK(detection_report_text(r).find("overall") != std::string::npos);
  const ExtractionReport e = tabulate_extraction({});
  CHECK(extraction_report_json(e) == extraction_report_json(e));
  CHECK(extraction_report_text(e).find("abstract") != std::string::npos);
  const std::vector<std::pair<std::string, long>> rows = {{"graph", 3}, {"é", 1}};
  CHECK(word_frequency_text(rows) ==
        "rank  token    count\n"
        "   1  graph        3\n"
        "   2  é            1\n");
  CHECK(word_frequency_json(rows).find("\"token\": \"graph\"") != std::string::npos);
}

}  // namespace
}  // namespace papersum
