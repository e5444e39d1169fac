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

#include "papersum/eval.h"

#include <algorithm>
#include <tuple>

#include <fmt/format.h>

#include "papersum/canonical_json.h"
#include "papersum/errors.h"
#include "papersum/text.h"

namespace papersum {
namespace {

using GroupKey = std::tuple<std::string, int, DetectionClass>;

auto rect_key(const Rect& r) { return std::tie(r.x0, r.y0, r.x1, r.y1); }

struct Group {
  std::vector<Rect> gts;
  std::vector<std::pair<Rect, double>> preds;  // rect, confidence
};

struct Pair {
  double iou;
  std::size_t gt;
  std::size_t pred;
};

constexpr DetectionClass kFields[] = {DetectionClass::kAbstract,
                                      DetectionClass::kAuthor,
                                      DetectionClass::kTitle};

}  // namespace

std::vector<Annotation> load_annotations(std::string_view json) {
  std::vector<Annotation> out;
  for (const auto& doc : parse_region_file(json, false)) {
    for (const auto& r : doc.regions) {
      out.push_back(Annotation{doc.doc_id, r.klass, r.rect});
    }
  }
  return out;
}

std::vector<Prediction> load_predictions(std::string_view json) {
  std::vector<Prediction> out;
  for (const auto& doc : parse_region_file(json, true)) {
    for (const auto& r : doc.regions) {
      out.push_back(Prediction{doc.doc_id, r.klass, r.rect, *r.confidence});
    }
  }
  return out;
}

EvalReport evaluate_detections(std::span<const Prediction> preds,
                               std::span<const Annotation> gts) {
  std::map<GroupKey, Group> groups;
  for (const auto& g : gts) {
    groups[{g.doc_id, g.rect.page_index, g.klass}].gts.push_back(g.rect);
  }
  for (const auto& p : preds) {
    groups[{p.doc_id, p.rect.page_index, p.klass}].preds.emplace_back(
        p.rect, p.confidence);
  }

  EvalReport report;
  for (DetectionClass k : kAllClasses) report.counts[k] = ClassCounts{};
  std::map<DetectionClass, double> iou_sum;
  std::map<DetectionClass, int> gt_count;

  for (auto& [key, group] : groups) {
    const DetectionClass klass = std::get<2>(key);
    // Canonical order makes the result independent of input order.
    std::sort(group.gts.begin(), group.gts.end(),
              [](const Rect& a, const Rect& b) {
                return rect_key(a) < rect_key(b);
              });
    std::sort(group.preds.begin(), group.preds.end(),
              [](const auto& a, const auto& b) {
                return std::tuple_cat(rect_key(a.first), std::tie(a.second)) <
                       std::tuple_cat(rect_key(b.first), std::tie(b.second));
              });
    std::vector<Pair> pairs;
    for (std::size_t g = 0; g < group.gts.size(); ++g) {
      for (std::size_t p = 0; p < group.preds.size(); ++p) {
        const double v = iou(group.gts[g], group.preds[p].first);
        if (v > 0) pairs.push_back(Pair{v, g, p});
      }
    }
    std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
      if (a.iou != b.iou) return a.iou > b.iou;
      if (a.gt != b.gt) return a.gt < b.gt;
      return a.pred < b.pred;
    });
    std::vector<double> gt_iou(group.gts.size(), 0.0);
    std::vector<bool> gt_used(group.gts.size(), false);
    std::vector<bool> pred_used(group.preds.size(), false);
    int matched = 0;
    for (const Pair& pr : pairs) {
      if (gt_used[pr.gt] || pred_used[pr.pred]) continue;
      gt_used[pr.gt] = pred_used[pr.pred] = true;
      gt_iou[pr.gt] = pr.iou;
      ++matched;
    }
    ClassCounts& c = report.counts[klass];
    c.matched += matched;
    c.unmatched_gt += static_cast<int>(group.gts.size()) - matched;
    c.unmatched_pred += static_cast<int>(group.preds.size()) - matched;
    for (double v : gt_iou) iou_sum[klass] += v;
    gt_count[klass] += static_cast<int>(group.gts.size());
  }

  double total = 0.0;
  for (DetectionClass k : kAllClasses) {
    const int n = gt_count[k];
    if (n == 0) continue;
    report.per_class_iou[k] = iou_sum[k] / n;
    total += iou_sum[k];
    report.num_gt += n;
  }
  report.overall_iou = report.num_gt > 0 ? total / report.num_gt : 0.0;
  return report;
}

ExtractionReport tabulate_extraction(
    std::span<const ExtractionResult> results) {
  ExtractionReport report;
  for (DetectionClass f : kFields) report.per_field[f] = OutcomeCounts{};
  for (const auto& r : results) {
    OutcomeCounts& c = report.per_field[r.field];
    switch (r.outcome) {
      case ExtractionOutcome::kComplete: ++c.complete; break;
      case ExtractionOutcome::kPartial: ++c.partial; break;
      case ExtractionOutcome::kFail: ++c.fail; break;
    }
  }
  return report;
}

std::vector<ExtractionResult> score_extraction(
    std::span<const FieldGroundTruth> ground_truth,
    std::span<const SummaryPage> summaries) {
  std::map<std::string, const SummaryPage*> by_id;
  for (const auto& s : summaries) by_id.emplace(s.doc_id, &s);
  std::vector<ExtractionResult> out;
  for (const auto& gt : ground_truth) {
    std::vector<BoxRef> extracted;
    if (auto it = by_id.find(gt.doc_id); it != by_id.end()) {
      const auto& boxes = it->second->field_boxes;
      if (auto f = boxes.find(std::string(to_string(gt.field)));
          f != boxes.end()) {
        extracted = f->second;
      }
    }
    out.push_back(ExtractionResult{
        gt.doc_id, gt.field,
        classify_extraction(std::span<const BoxRef>(extracted),
                            std::span<const BoxRef>(gt.box_refs))});
  }
  return out;
}

std::vector<std::pair<std::string, long>> corpus_word_frequency(
    std::span<const SummaryPage> summaries, int k) {
  if (k < 1) throw InvalidArgument(fmt::format("k {} must be >= 1", k));
  std::map<std::string, long> counts;
  for (const auto& page : summaries) {
    for (const auto& s : page.sentences) {
      for (auto& token : tokenize_words(s, CasePolicy::kPreserve)) {
        ++counts[std::move(token)];
      }
    }
  }
  std::vector<std::pair<std::string, long>> rows(counts.begin(), counts.end());
  std::stable_sort(rows.begin(), rows.end(),
                   [](const auto& a, const auto& b) {
                     return a.second > b.second;
                   });
  if (rows.size() > static_cast<std::size_t>(k)) rows.resize(k);
  return rows;
}

std::string detection_report_json(const EvalReport& report) {
  Json classes = Json::object();
  for (const auto& [klass, c] : report.counts) {
    auto it = report.per_class_iou.find(klass);
    classes[std::string(to_string(klass))] = {
        {"gt", c.matched + c.unmatched_gt},
        {"iou", it == report.per_class_iou.end() ? Json(nullptr)
                                                 : Json(it->second)},
        {"matched", c.matched},
        {"unmatched_gt", c.unmatched_gt},
        {"unmatched_pred", c.unmatched_pred}};
  }
  const Json root = {{"report", "detection"},
                     {"report_version", 1},
                     {"classes", std::move(classes)},
                     {"num_gt", report.num_gt},
                     {"overall_iou", report.overall_iou}};
  return write_canonical(root, kReportDecimals);
}

std::string detection_report_text(const EvalReport& report) {
  std::string out = fmt::format("{:<10} {:>6} {:>8} {:>12} {:>14} {:>8}\n",
                                "class", "gt", "matched", "unmatched_gt",
                                "unmatched_pred", "iou");
  for (const auto& [klass, c] : report.counts) {
    auto it = report.per_class_iou.find(klass);
    const std::string iou_text = it == report.per_class_iou.end()
                                     ? "-"
                                     : fmt::format("{:.4f}", it->second);
    out += fmt::format("{:<10} {:>6} {:>8} {:>12} {:>14} {:>8}\n",
                       to_string(klass), c.matched + c.unmatched_gt, c.matched,
                       c.unmatched_gt, c.unmatched_pred, iou_text);
  }
  out += fmt::format("{:<10} {:>6} {:>8} {:>12} {:>14} {:>8.4f}\n", "overall",
                     report.num_gt, "", "", "", report.overall_iou);
  return out;
}

std::string extraction_report_json(const ExtractionReport& report) {
  Json fields = Json::object();
  for (const auto& [field, c] : report.per_field) {
    fields[std::string(to_string(field))] = {{"complete", c.complete},
                                             {"partial", c.partial},
                                             {"fail", c.fail},
                                             {"total", c.total()}};
  }
  const Json root = {{"report", "extraction"},
                     {"report_version", 1},
                     {"fields", std::move(fields)}};
  return write_canonical(root, kReportDecimals);
}

std::string extraction_report_text(const ExtractionReport& report) {
  std::string out = fmt::format("{:<10} {:>9} {:>8} {:>6} {:>6}\n", "field",
                                "complete", "partial", "fail", "total");
  for (const auto& [field, c] : report.per_field) {
    out += fmt::format("{:<10} {:>9} {:>8} {:>6} {:>6}\n", to_string(field),
                       c.complete, c.partial, c.fail, c.total());
  }
  return out;
}

std::string word_frequency_json(
    const std::vector<std::pair<std::string, long>>& rows) {
  Json list = Json::array();
  for (const auto& [token, count] : rows) {
    list.push_back({{"token", token}, {"count", count}});
  }
  const Json root = {{"report", "word_frequency"},
                     {"report_version", 1},
                     {"words", std::move(list)}};
  return write_canonical(root, kReportDecimals);
}

std::string word_frequency_text(
    const std::vector<std::pair<std::string, long>>& rows) {
  std::size_t width = 5;
  for (const auto& [token, count] : rows) {
    width = std::max(width, utf8_length(token));
  }
  std::string out = fmt::format("{:>4}  {}  {:>7}\n", "rank",
                                fmt::format("{:<{}}", "token", width), "count");
  int rank = 1;
  for (const auto& [token, count] : rows) {
    const std::size_t pad = width - utf8_length(token);
    out += fmt::format("{:>4}  {}{}  {:>7}\n", rank++, token,
                       std::string(pad, ' '), count);
  }
  return out;
}

}  // namespace papersum
