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

// Acceptance checks: prints one PASS/FAIL line per criterion and exits
// nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "papersum/eval.h"
#include "papersum/geometry.h"
#include "papersum/match.h"
#include "papersum/mif.h"
#include "papersum/pipeline.h"
#include "papersum/summarize.h"
#include "test_support.h"

namespace fs = std::filesystem;
using namespace papersum;
using namespace papersum::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// A criterion returns "" on success, otherwise what went wrong.
using Check = std::function<std::string()>;

std::string criterion_geometry() {
  const auto start = Clock::now();
  std::mt19937 rng(1000);
  std::uniform_int_distribution<int> d(0, 64);
  auto random_rect = [&] {
    int x0 = d(rng), x1 = d(rng), y0 = d(rng), y1 = d(rng);
    if (x0 > x1) std::swap(x0, x1);
    if (y0 > y1) std::swap(y0, y1);
    return Rect::make(x0, y0, x1, y1);
  };
  auto inside = [](const Rect& r, int x, int y) {
    return x >= r.x0 && x + 1 <= r.x1 && y >= r.y0 && y + 1 <= r.y1;
  };
  for (int i = 0; i < 1000; ++i) {
    const Rect a = random_rect(), b = random_rect();
    long ca = 0, cb = 0, both = 0;
    for (int x = 0; x < 64; ++x) {
      for (int y = 0; y < 64; ++y) {
        const bool in_a = inside(a, x, y), in_b = inside(b, x, y);
        ca += in_a;
        cb += in_b;
        both += in_a && in_b;
      }
    }
    if (intersection_area(a, b).value() != static_cast<double>(both)) {
      return "intersection mismatch at pair " + std::to_string(i);
    }
    const long uni = ca + cb - both;
    const double want_iou = uni > 0 ? static_cast<double>(both) / uni : 0.0;
    if (std::abs(iou(a, b) - want_iou) > 1e-12) {
      return "iou mismatch at pair " + std::to_string(i);
    }
    if (cb > 0 &&
        std::abs(recall_coverage(a, b) - static_cast<double>(both) / cb) > 1e-12) {
      return "recall mismatch at pair " + std::to_string(i);
    }
  }
  const double t = seconds_since(start);
  if (t >= 5.0) return "took " + std::to_string(t) + " s";
  return "";
}

std::string criterion_matching() {
  std::vector<TextBox> boxes;
  auto add = [&](double x0, double y0, double x1, double y1) {
    boxes.push_back(TextBox{Rect{x0, y0, x1, y1, 0}, "w", 10,
                            static_cast<int>(boxes.size())});
  };
  // Detection (100,100)-(300,300): four boxes inside, one half inside,
  // five outside or barely touched.
  add(110, 110, 200, 120);
  add(110, 130, 200, 140);
  add(110, 150, 290, 160);
  add(120, 170, 280, 180);
  add(250, 190, 350, 200);  // exactly 50%
  add(260, 210, 400, 220);  // 40/140
  add(290, 230, 390, 240);  // 10%
  add(400, 110, 500, 120);
  add(110, 310, 200, 320);
  add(10, 10, 90, 20);
  const Detection det{DetectionClass::kAbstract, Rect{100, 100, 300, 300, 0},
                      0.9, DetectionSource::kExternal};
  std::vector<int> got;
  for (const auto& b : match_text_boxes(det, boxes, 0.5)) got.push_back(b.order);
  if (got != std::vector<int>{0, 1, 2, 3, 4}) return "tau 0.5 picked the wrong boxes";
  std::size_t prev = boxes.size();
  for (int i = 1; i <= 9; ++i) {
    const auto n = match_text_boxes(det, boxes, i / 10.0).size();
    if (n > prev) return "not monotone at tau " + std::to_string(i / 10.0);
    prev = n;
  }
  return "";
}

ClusterScore brute_force_cluster(const std::vector<bool>& sig, int max_gap) {
  const int n = static_cast<int>(sig.size());
  ClusterScore best;
  for (int s = 0; s < n; ++s) {
    for (int e = s; e < n; ++e) {
      if (!sig[s] || !sig[e]) continue;
      int count = 0, last = s;
      bool linked = true;
      for (int k = s; k <= e; ++k) {
        if (!sig[k]) continue;
        ++count;
        linked = linked && k - last - 1 <= max_gap;
        last = k;
      }
      bool maximal = true;
      for (int k = std::max(0, s - max_gap - 1); k < s; ++k) maximal = maximal && !sig[k];
      for (int k = e + 1; k <= std::min(n - 1, e + max_gap + 1); ++k) {
        maximal = maximal && !sig[k];
      }
      if (!linked || !maximal) continue;
      const double score =
          static_cast<double>(count) * count / static_cast<double>(e - s + 1);
      if (score > best.score) best = ClusterScore{score, s, e + 1};
    }
  }
  return best;
}

std::string criterion_luhn_oracle() {
  const auto start = Clock::now();
  std::mt19937 rng(500);
  std::uniform_int_distribution<int> len(1, 12), word(0, 19), gap(0, 5);
  std::bernoulli_distribution coin(0.5);
  for (int i = 0; i < 500; ++i) {
    std::set<std::string> sig;
    for (int w = 0; w < 20; ++w) {
      if (coin(rng)) sig.insert("tok" + std::to_string(w));
    }
    std::string text;
    std::vector<bool> mask;
    const int n = len(rng);
    for (int t = 0; t < n; ++t) {
      const std::string tok = "tok" + std::to_string(word(rng));
      text += (t ? " " : "") + tok;
      mask.push_back(sig.contains(tok));
    }
    const int g = gap(rng);
    const ScoredSentence got = sentence_score(Sentence{text, 0, i, {}}, sig, g);
    const ClusterScore want = brute_force_cluster(mask, g);
    if (got.score != want.score || got.cluster_start != want.start ||
        got.cluster_end != want.end) {
      return "mismatch on sentence " + std::to_string(i) + ": " + text;
    }
  }
  const double t = seconds_since(start);
  if (t >= 10.0) return "took " + std::to_string(t) + " s";
  return "";
}

std::string criterion_luhn_trace() {
  const std::vector<bool> a = {true, false, true, true, false, false, false, false, true};
  const std::vector<bool> b = {true, false, true};
  if (luhn_score(a, 4).score != 16.0 / 9.0) return "[S,X,S,S,X,X,X,X,S] is not 16/9";
  if (luhn_score(b, 4).score != 4.0 / 3.0) return "[S,X,S] is not 4/3";
  return "";
}

CaptionedFigure figure(int order, const std::string& caption) {
  CaptionedFigure f;
  f.detection = Detection{DetectionClass::kFigure,
                          Rect{0, 200.0 * order, 100, 200.0 * order + 100, 0},
                          0.9, DetectionSource::kExternal};
  f.order = order;
  Caption c;
  c.text = caption;
  c.owner = f.detection;
  f.caption = c;
  return f;
}

std::string criterion_mif() {
  const std::string abstract = "Neural layout analysis extracts figures from papers.";
  std::vector<CaptionedFigure> figs = {
      figure(0, "Photograph of the laboratory."),
      figure(1, "Neural layout analysis pipeline."),
      figure(2, "Example papers.")};
  const MifResult r = select_mif(figs, abstract);
  const std::vector<std::pair<int, int>> want = {{0, 0}, {1, 3}, {2, 1}};
  if (r.scores != want) return "overlaps are not (0, 3, 1)";
  if (!r.chosen || r.chosen->order != 1 || r.chosen_score != 3) {
    return "figure 1 with score 3 not chosen";
  }
  // figs starts in ascending order, so this visits all six orders.
  do {
    if (select_mif(figs, abstract).chosen->order != 1) return "order dependent";
  } while (std::next_permutation(figs.begin(), figs.end(),
                                 [](const auto& a, const auto& b) {
                                   return a.order < b.order;
                                 }));
  const std::vector<CaptionedFigure> tie = {figure(0, "Neural layout."),
                                            figure(1, "Layout analysis.")};
  const MifResult t = select_mif(tie, abstract);
  if (t.chosen->order != 0 || t.chosen_score != 2) return "(2,2) tie not resolved to figure 0";
  return "";
}

std::string criterion_classification() {
  const std::vector<BoxRef> gt = {{0, 4}, {0, 5}, {0, 6}};
  const std::vector<BoxRef> exact = gt;
  const std::vector<BoxRef> extra = {{0, 4}, {0, 5}, {0, 6}, {0, 7}};
  const std::vector<BoxRef> one = {{0, 5}};
  if (classify_extraction(exact, gt) != ExtractionOutcome::kComplete) return "exact not complete";
  if (classify_extraction(extra, gt) != ExtractionOutcome::kPartial) return "GT+1 not partial";
  if (classify_extraction(one, gt) != ExtractionOutcome::kFail) return "1 of 3 not fail";
  return "";
}

std::string criterion_end_to_end() {
  const auto start = Clock::now();
  const DocumentIR ir = load_document(fixture_path("synthetic_paper.json"));
  const DocumentResult r = summarize_document(ir, PipelineOptions{});
  const double t = seconds_since(start);
  const std::string problem = fixture_mismatch(summary_from_json(r.rendered.json));
  if (!problem.empty()) return problem;
  if (t >= 1.0) return "took " + std::to_string(t) + " s";
  return "";
}

std::string criterion_batch() {
  TempDir dir;
  fs::create_directories(dir / "in");
  for (int i = 0; i < 100; ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "paper%03d.json", i);
    fs::copy_file(fixture_path("synthetic_paper.json"), dir / "in" / name);
  }
  spit(dir / "in/corrupt.pdf", "%PDF-1.7\n\x01\x02 truncated");
  const std::string in = "\"" + (dir / "in").string() + "\"";
  const auto one = run_cli("summarize " + in + " --jobs 1 --out \"" +
                           (dir / "one").string() + "\"");
  const auto eight = run_cli("summarize " + in + " --jobs 8 --out \"" +
                             (dir / "eight").string() + "\"");
  if (one.exit_code != 0 || eight.exit_code != 0) return "batch exited nonzero";
  const std::string tree = describe_tree(dir / "one");
  if (tree != describe_tree(dir / "eight")) return "output trees differ";
  const auto log = nlohmann::json::parse(slurp(dir / "one/run_log.json"));
  if (log.at("succeeded") != 100 || log.at("failed") != 1) {
    return "expected 100 succeeded and 1 failed";
  }
  return "";
}

std::string region_file(double x0, bool confidence) {
  return R"({"detections_version": 1, "doc_id": "p", "pages": [{"page_index": 0,
    "detections": [{"class": "table", "bbox": [)" +
         std::to_string(x0) + ", 0.1, " + std::to_string(x0 + 0.2) + ", 0.3]" +
         (confidence ? R"(, "confidence": 0.7)" : "") + "}]}]}";
}

std::string criterion_eval() {
  TempDir dir;
  // Identity over every class.
  nlohmann::json gt = {{"detections_version", 1}, {"doc_id", "p"}};
  nlohmann::json dets = nlohmann::json::array();
  for (DetectionClass k : kAllClasses) {
    const double y = 0.15 * static_cast<int>(k);
    dets.push_back({{"class", to_string(k)}, {"bbox", {0.1, y, 0.6, y + 0.1}}});
  }
  gt["pages"] = {{{"page_index", 0}, {"detections", dets}}};
  nlohmann::json pred = gt;
  for (auto& d : pred["pages"][0]["detections"]) d["confidence"] = 0.9;
  const auto ident = evaluate_detections(load_predictions(pred.dump()),
                                         load_annotations(gt.dump()));
  for (DetectionClass k : kAllClasses) {
    if (ident.per_class_iou.at(k) != 1.0) {
      return std::string("identity IoU for ") + std::string(to_string(k)) + " is not 1";
    }
  }
  // Shifted by half a width: IoU 1/3.
  spit(dir / "gt.json", region_file(0.1, false));
  spit(dir / "pred.json", region_file(0.2, true));
  const std::string args = "evaluate --preds \"" + (dir / "pred.json").string() +
                           "\" --annotations \"" + (dir / "gt.json").string() +
                           "\" --out ";
  if (run_cli(args + "\"" + (dir / "a").string() + "\"").exit_code != 0 ||
      run_cli(args + "\"" + (dir / "b").string() + "\"").exit_code != 0) {
    return "evaluate failed";
  }
  const auto report = nlohmann::json::parse(slurp(dir / "a/detection_report.json"));
  const double v = report.at("overall_iou").get<double>();
  if (std::abs(v - 1.0 / 3.0) > 1e-9) return "composed IoU is " + std::to_string(v);
  if (describe_tree(dir / "a") != describe_tree(dir / "b")) return "reports differ";
  return "";
}

}  // namespace

int main() {
  const std::pair<const char*, Check> criteria[] = {
      {"geometry oracle", criterion_geometry},
      {"recall matching", criterion_matching},
      {"cluster score oracle", criterion_luhn_oracle},
      {"cluster score hand trace", criterion_luhn_trace},
      {"most informative figure", criterion_mif},
      {"extraction classification", criterion_classification},
      {"end-to-end fixture", criterion_end_to_end},
      {"batch determinism", criterion_batch},
      {"evaluation reports", criterion_eval},
  };
  int failed = 0;
  int n = 1;
  for (const auto& [name, check] : criteria) {
    std::string problem;
    try {
      problem = check();
    } catch (const std::exception& e) {
      problem = std::string("exception: ") + e.what();
    }
    if (problem.empty()) {
      std::printf("criterion %d: PASS %s\n", n, name);
    } else {
      std::printf("criterion %d: FAIL %s: %s\n", n, name, problem.c_str());
      ++failed;
    }
    ++n;
  }
  return failed == 0 ? 0 : 1;
}
