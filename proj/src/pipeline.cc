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

#include "papersum/pipeline.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <map>
#include <thread>
#include <variant>

#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include "papersum/canonical_json.h"
#include "papersum/errors.h"
#include "papersum/ingest.h"
#include "papersum/mif.h"
#include "papersum/sentences.h"

namespace papersum {
namespace {

namespace fs = std::filesystem;

constexpr char kTempDir[] = ".papersum-tmp";

// Rounds to the precision summary.json keeps, so the JSON round-trips.
double quantize(double v) { return std::round(v * 1e6) / 1e6; }

Rect quantize(const Rect& r) {
  return Rect{quantize(r.x0), quantize(r.y0), quantize(r.x1), quantize(r.y1),
              r.page_index};
}

std::vector<BoxRef> refs_of(const std::vector<TextBox>& boxes) {
  std::vector<BoxRef> out;
  for (const auto& b : boxes) out.push_back(ref_of(b));
  return out;
}

std::vector<Detection> external_detections(const DocumentIR& ir,
                                           const fs::path& source) {
  fs::path file = source;
  if (fs::is_directory(source)) file = source / (ir.doc_id + ".json");
  std::string bytes;
  try {
    bytes = read_file(file);
  } catch (const IngestError&) {
    throw InvalidArgument("no detections file " + file.string());
  }
  return load_detections(bytes, ir);
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.close();
  if (!out) throw Error("cannot write " + path.string());
}

struct Failure {
  std::string message;
};

using Outcome = std::variant<DocumentResult, Failure>;

Outcome process(const fs::path& input, const PipelineOptions& options) {
  try {
    const DocumentIR ir = load_document(input);
    return summarize_document(ir, options);
  } catch (const std::exception& e) {
    return Failure{e.what()};
  }
}

}  // namespace

void validate_options(const PipelineOptions& o) {
  if (!(o.tau > 0.0 && o.tau <= 1.0)) {
    throw InvalidArgument(fmt::format("--tau {} outside (0, 1]", o.tau));
  }
  if (!(o.conf_threshold >= 0.0 && o.conf_threshold <= 1.0)) {
    throw InvalidArgument(
        fmt::format("--conf-threshold {} outside [0, 1]", o.conf_threshold));
  }
  if (!(o.caption_max_gap >= 0.0) || !std::isfinite(o.caption_max_gap)) {
    throw InvalidArgument("caption max gap must be >= 0");
  }
  if (o.min_freq && *o.min_freq < 1) {
    throw InvalidArgument(fmt::format("--min-freq {} must be >= 1", *o.min_freq));
  }
  if (o.max_gap < 0) {
    throw InvalidArgument(fmt::format("--max-gap {} must be >= 0", o.max_gap));
  }
  if (o.num_sentences < 1) {
    throw InvalidArgument(
        fmt::format("--num-sentences {} must be >= 1", o.num_sentences));
  }
  if (o.detector == DetectorMode::kExternal && !fs::exists(o.detections)) {
    throw InvalidArgument("detections path " + o.detections.string() +
                          " does not exist");
  }
}

DocumentResult summarize_document(const DocumentIR& ir,
                                  const PipelineOptions& options,
                                  const std::vector<Detection>* detections) {
  DocumentResult result;
  std::vector<Detection> dets;
  if (detections) {
    dets = *detections;
  } else if (options.detector == DetectorMode::kExternal) {
    dets = external_detections(ir, options.detections);
  } else {
    dets = detect_heuristic(ir);
  }

  SummaryPage& page = result.page;
  page.doc_id = ir.doc_id;
  std::vector<BoxRef> excluded;

  const FirstPageFields fields = select_first_page_fields(dets);
  auto fill = [&](const std::optional<Detection>& det,
                  std::optional<std::string>& slot, const char* name,
                  bool exclude) {
    if (!det || ir.pages.empty()) return;
    FieldText f = match_field(*det, ir.pages.front().text_boxes, options.tau,
                              &result.warnings);
    if (f.boxes.empty() || f.text.empty()) return;
    slot = f.text;
    page.field_boxes[name] = refs_of(f.boxes);
    if (exclude) {
      for (const auto& b : f.boxes) excluded.push_back(ref_of(b));
    }
  };
  fill(fields.title, page.title, "title", true);
  fill(fields.author, page.authors, "author", true);
  fill(fields.abstract, page.abstract, "abstract", false);

  // Headings are not sentences.
  for (std::size_t p = 0; p < ir.pages.size(); ++p) {
    for (const auto& box : ir.pages[p].text_boxes) {
      if ((p == 0 && is_abstract_heading(box.text)) ||
          is_section_heading(box.text)) {
        excluded.push_back(ref_of(box));
      }
    }
  }

  const std::vector<Detection> owners =
      select_figures_tables(dets, options.conf_threshold);
  std::vector<Detection> figures;
  for (const auto& d : owners) {
    if (d.klass == DetectionClass::kFigure) figures.push_back(d);
    const int p = d.rect.page_index;
    if (p < 0 || p >= static_cast<int>(ir.pages.size())) continue;
    if (auto c = associate_caption(d, ir.pages[p].text_boxes,
                                   options.caption_max_gap)) {
      for (const auto& b : c->boxes) excluded.push_back(ref_of(b));
    }
  }
  const auto captioned = caption_figures(figures, ir, options.caption_max_gap);
  const MifResult mif =
      select_mif(captioned, page.abstract.value_or(""), options.stopwords);
  if (mif.chosen) {
    MifInfo info;
    info.page_index = mif.chosen->detection.rect.page_index;
    info.rect = quantize(mif.chosen->detection.rect);
    if (mif.chosen->caption) info.caption_text = mif.chosen->caption->text;
    info.figure_order = mif.chosen->order;
    info.score = mif.chosen_score;
    page.mif = std::move(info);
  }

  const std::vector<Sentence> sentences = extract_sentences(ir, excluded);
  SummaryParams params;
  params.min_freq = options.min_freq;
  params.max_gap = options.max_gap;
  params.stopwords = &options.stopwords;
  const Summary summary = summarize(sentences, options.num_sentences, params);
  for (const auto& s : summary.sentences) page.sentences.push_back(s.sentence.text);

  Provenance& prov = page.provenance;
  prov.detector = detections || options.detector == DetectorMode::kExternal
                      ? "external"
                      : "heuristic";
  prov.tau = quantize(options.tau);
  prov.conf_threshold = quantize(options.conf_threshold);
  prov.caption_max_gap = quantize(options.caption_max_gap);
  prov.min_freq = summary.min_freq;
  prov.max_gap = options.max_gap;
  prov.num_sentences = options.num_sentences;
  prov.stopwords = options.stopwords.source();

  for (const auto& w : ir.warnings) result.warnings.push_back(w);
  result.rendered = render_summary(page, ir);
  return result;
}

DocumentIR load_document(const fs::path& path) {
  std::string bytes = read_file(path);
  const std::string doc_id = path.stem().string();
  if (looks_like_pdf(bytes)) return ingest_pdf_bytes(std::move(bytes), doc_id);
  DocumentIR ir = load_ir(bytes);
  ir.doc_id = doc_id;
  return ir;
}

int BatchResult::succeeded() const {
  return static_cast<int>(std::count_if(
      documents.begin(), documents.end(),
      [](const DocumentStatus& d) { return d.ok; }));
}

std::vector<fs::path> expand_inputs(const std::vector<fs::path>& inputs) {
  std::vector<fs::path> out;
  for (const auto& input : inputs) {
    if (fs::is_directory(input)) {
      std::vector<fs::path> found;
      for (const auto& entry : fs::directory_iterator(input)) {
        if (!entry.is_regular_file()) continue;
        const auto ext = entry.path().extension();
        if (ext == ".pdf" || ext == ".PDF" || ext == ".json") {
          found.push_back(entry.path());
        }
      }
      std::sort(found.begin(), found.end());
      out.insert(out.end(), found.begin(), found.end());
    } else if (fs::exists(input)) {
      out.push_back(input);
    } else {
      throw InvalidArgument("input " + input.string() + " does not exist");
    }
  }
  return out;
}

BatchResult run_summarize(const RunConfig& config) {
  validate_options(config.options);
  if (config.jobs < 1) {
    throw InvalidArgument(fmt::format("--jobs {} must be >= 1", config.jobs));
  }
  if (config.out_dir.empty()) throw InvalidArgument("no output directory");
  const fs::path out = config.out_dir;
  if (fs::exists(out)) {
    if (!fs::is_directory(out)) {
      throw InvalidArgument("output path " + out.string() +
                            " is not a directory");
    }
  } else {
    const fs::path parent = fs::absolute(out).parent_path();
    if (!fs::is_directory(parent)) {
      throw InvalidArgument("parent of output directory " + out.string() +
                            " does not exist");
    }
  }
  const std::vector<fs::path> inputs = expand_inputs(config.inputs);
  if (inputs.empty()) throw InvalidArgument("no input documents");
  fs::create_directories(out);

  std::vector<std::optional<Outcome>> outcomes(inputs.size());
  {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next++; i < inputs.size(); i = next++) {
        outcomes[i] = process(inputs[i], config.options);
      }
    };
    const std::size_t n =
        std::min<std::size_t>(static_cast<std::size_t>(config.jobs),
                              inputs.size());
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
  }

  const fs::path tmp_root = out / kTempDir;
  fs::remove_all(tmp_root);
  fs::create_directories(tmp_root);

  BatchResult batch;
  std::vector<SummaryPage> pages;
  std::map<std::string, std::string> seen;  // doc_id -> first input
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    DocumentStatus status;
    status.input = inputs[i].generic_string();
    status.doc_id = inputs[i].stem().string();
    Outcome& outcome = *outcomes[i];
    if (auto* fail = std::get_if<Failure>(&outcome)) {
      status.error = fail->message;
    } else if (auto [it, fresh] = seen.emplace(status.doc_id, status.input);
               !fresh) {
      status.error = "duplicate document id (first from " + it->second + ")";
    } else {
      auto& result = std::get<DocumentResult>(outcome);
      status.warnings = result.warnings;
      const fs::path staging = tmp_root / std::to_string(i);
      try {
        fs::create_directories(staging);
        write_file(staging / "summary.html", result.rendered.html);
        write_file(staging / "summary.json", result.rendered.json);
        const fs::path target = out / status.doc_id;
        fs::remove_all(target);
        fs::rename(staging, target);
        status.ok = true;
        pages.push_back(std::move(result.page));
      } catch (const std::exception& e) {
        fs::remove_all(staging);
        status.error = e.what();
      }
    }
    if (status.ok) {
      spdlog::info("{}: summarized", status.input);
    } else {
      spdlog::error("{}: {}", status.input, status.error);
    }
    batch.documents.push_back(std::move(status));
  }
  fs::remove_all(tmp_root);

  write_file(out / "index.html", render_index(pages));
  Json docs = Json::array();
  for (const auto& d : batch.documents) {
    Json entry = {{"input", d.input},
                  {"doc_id", d.doc_id},
                  {"status", d.ok ? "ok" : "failed"},
                  {"warnings", d.warnings}};
    if (!d.ok) entry["error"] = d.error;
    docs.push_back(std::move(entry));
  }
  const int ok = batch.succeeded();
  const Json log = {{"run_log_version", 1},
                    {"documents", std::move(docs)},
                    {"succeeded", ok},
                    {"failed", static_cast<int>(inputs.size()) - ok}};
  write_file(out / "run_log.json", write_canonical(log, 6));
  batch.exit_code = ok > 0 ? 0 : 1;
  return batch;
}

}  // namespace papersum
