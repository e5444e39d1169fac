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

// papersum: batch summaries of academic-paper PDFs.
//
//   papersum summarize <inputs...> --out DIR [options]
//   papersum evaluate --out DIR [--preds F --annotations F]
//                     [--summaries DIR [--ground-truth F] [--top-k K]]
//   papersum extract-ir <pdf> [-o FILE]
//
// Exit codes: 0 success, 1 every document failed or ingest error, 2
// configuration or schema error. PAPERSUM_LOG sets the log level (trace,
// debug, info, warn, error, off).

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "CLI11.hpp"
#include "papersum/errors.h"
#include "papersum/eval.h"
#include "papersum/ingest.h"
#include "papersum/pipeline.h"

namespace fs = std::filesystem;
using namespace papersum;

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitConfig = 2;

void setup_logging() {
  auto logger = spdlog::stderr_color_mt("papersum");
  logger->set_pattern("[%l] %v");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::info);
  if (const char* env = std::getenv("PAPERSUM_LOG")) {
    const auto level = spdlog::level::from_str(env);
    // from_str maps unknown names to off; only honour real names.
    if (level != spdlog::level::off || std::string(env) == "off") {
      spdlog::set_level(level);
    } else {
      spdlog::warn("ignoring unknown PAPERSUM_LOG level '{}'", env);
    }
  }
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  out.close();
  if (!out) throw Error("cannot write " + path.string());
}

struct SummarizeArgs {
  std::vector<std::string> inputs;
  std::string detector = "heuristic";
  std::string detections;
  double tau = kDefaultTau;
  double conf_threshold = kDefaultConfThreshold;
  long min_freq = 0;  // unset: scale with the corpus
  int max_gap = kDefaultMaxGap;
  int num_sentences = kDefaultNumSentences;
  std::string stopwords_file;
  std::string out;
  int jobs = 1;
};

int cmd_summarize(const SummarizeArgs& a) {
  RunConfig config;
  for (const auto& in : a.inputs) config.inputs.emplace_back(in);
  config.out_dir = a.out;
  config.jobs = a.jobs;
  PipelineOptions& o = config.options;
  if (a.detector == "external" || !a.detections.empty()) {
    if (a.detections.empty()) {
      throw InvalidArgument("--detector external needs --detections");
    }
    if (a.detector != "external" && a.detector != "heuristic") {
      throw InvalidArgument("unknown detector " + a.detector);
    }
    o.detector = DetectorMode::kExternal;
    o.detections = a.detections;
  } else if (a.detector != "heuristic") {
    throw InvalidArgument("unknown detector " + a.detector);
  }
  o.tau = a.tau;
  o.conf_threshold = a.conf_threshold;
  if (a.min_freq > 0) o.min_freq = a.min_freq;
  o.max_gap = a.max_gap;
  o.num_sentences = a.num_sentences;
  if (!a.stopwords_file.empty()) {
    o.stopwords = StopwordList::load(a.stopwords_file);
  }
  const BatchResult result = run_summarize(config);
  spdlog::info("{} of {} documents summarized into {}", result.succeeded(),
               result.documents.size(), a.out);
  return result.exit_code;
}

struct EvaluateArgs {
  std::string preds;
  std::string annotations;
  std::string ground_truth;
  std::string summaries;
  int top_k = 20;
  std::string out;
};

std::vector<SummaryPage> load_summaries(const fs::path& dir) {
  if (!fs::is_directory(dir)) {
    throw InvalidArgument("summaries directory " + dir.string() +
                          " does not exist");
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const fs::path file = entry.path() / "summary.json";
    if (entry.is_directory() && fs::is_regular_file(file)) {
      files.push_back(file);
    }
  }
  std::sort(files.begin(), files.end());
  std::vector<SummaryPage> pages;
  for (const auto& f : files) {
    try {
      pages.push_back(summary_from_json(read_file(f)));
    } catch (const SchemaError& e) {
      throw SchemaError(f.string() + ": " + e.field(), e.what());
    }
  }
  return pages;
}

int cmd_evaluate(const EvaluateArgs& a) {
  const bool detection = !a.preds.empty() || !a.annotations.empty();
  if (detection && (a.preds.empty() || a.annotations.empty())) {
    throw InvalidArgument("--preds and --annotations go together");
  }
  if (!a.ground_truth.empty() && a.summaries.empty()) {
    throw InvalidArgument("--ground-truth needs --summaries");
  }
  if (!detection && a.summaries.empty()) {
    throw InvalidArgument("nothing to evaluate");
  }
  if (a.top_k < 1) throw InvalidArgument("--top-k must be >= 1");
  const fs::path out = a.out;
  if (!fs::is_directory(fs::absolute(out).parent_path())) {
    throw InvalidArgument("parent of output directory " + a.out +
                          " does not exist");
  }

  auto read = [](const std::string& path) {
    try {
      return read_file(path);
    } catch (const IngestError& e) {
      throw InvalidArgument(e.what());
    }
  };
  std::optional<EvalReport> det_report;
  if (detection) {
    const auto preds = load_predictions(read(a.preds));
    const auto gts = load_annotations(read(a.annotations));
    det_report = evaluate_detections(preds, gts);
  }
  std::optional<ExtractionReport> ext_report;
  std::vector<std::pair<std::string, long>> words;
  if (!a.summaries.empty()) {
    const auto pages = load_summaries(a.summaries);
    if (!a.ground_truth.empty()) {
      const auto gt = load_field_ground_truth(read(a.ground_truth));
      ext_report = tabulate_extraction(score_extraction(gt, pages));
    }
    words = corpus_word_frequency(pages, a.top_k);
  }

  fs::create_directories(out);
  if (det_report) {
    write_text(out / "detection_report.json",
               detection_report_json(*det_report));
    write_text(out / "detection_report.txt",
               detection_report_text(*det_report));
    std::cout << detection_report_text(*det_report);
  }
  if (ext_report) {
    write_text(out / "extraction_report.json",
               extraction_report_json(*ext_report));
    write_text(out / "extraction_report.txt",
               extraction_report_text(*ext_report));
    std::cout << extraction_report_text(*ext_report);
  }
  if (!a.summaries.empty()) {
    write_text(out / "word_frequency.json", word_frequency_json(words));
    write_text(out / "word_frequency.txt", word_frequency_text(words));
  }
  return 0;
}

int cmd_extract_ir(const std::string& input, const std::string& output) {
  try {
    const std::string json = save_ir(ingest_pdf(input));
    if (output.empty()) {
      std::cout << json;
    } else {
      write_text(output, json);
    }
    return 0;
  } catch (const Error& e) {
    std::cerr << "papersum: " << input << ": " << e.what() << "\n";
    return kExitFailed;
  }
}

}  // namespace

int main(int argc, char** argv) {
  setup_logging();
  CLI::App app{"Single-page summaries of academic-paper PDFs"};
  app.require_subcommand(1);

  SummarizeArgs sum;
  auto* summarize = app.add_subcommand("summarize", "Summarize PDFs or IR files");
  summarize->add_option("inputs", sum.inputs, "PDF/IR files or directories")
      ->required();
  summarize->add_option("--detector", sum.detector, "heuristic or external");
  summarize->add_option("--detections", sum.detections,
                        "Detections file or directory of <doc_id>.json");
  summarize->add_option("--tau", sum.tau, "Recall threshold for text boxes");
  summarize->add_option("--conf-threshold", sum.conf_threshold,
                        "Minimum figure/table confidence");
  summarize->add_option("--min-freq", sum.min_freq,
                        "Minimum count of a significant word (default: "
                        "scales with corpus size)")
      ->check(CLI::PositiveNumber);
  summarize->add_option("--max-gap", sum.max_gap,
                        "Insignificant words allowed inside a cluster");
  summarize->add_option("--num-sentences", sum.num_sentences,
                        "Summary sentences per paper");
  summarize->add_option("--stopwords-file", sum.stopwords_file,
                        "Stopword list, one word per line");
  summarize->add_option("--out", sum.out, "Output directory")->required();
  summarize->add_option("--jobs", sum.jobs, "Worker threads");

  EvaluateArgs ev;
  auto* evaluate = app.add_subcommand("evaluate", "Score detections and fields");
  evaluate->add_option("--preds", ev.preds, "Predicted detections");
  evaluate->add_option("--annotations", ev.annotations, "Ground-truth regions");
  evaluate->add_option("--ground-truth", ev.ground_truth,
                       "Ground-truth field boxes");
  evaluate->add_option("--summaries", ev.summaries,
                       "Output directory of a summarize run");
  evaluate->add_option("--top-k", ev.top_k, "Rows in the word table");
  evaluate->add_option("--out", ev.out, "Report directory")->required();

  std::string ir_input, ir_output;
  auto* extract = app.add_subcommand("extract-ir", "Print a PDF's IR as JSON");
  extract->add_option("pdf", ir_input, "PDF file")->required();
  extract->add_option("-o,--output", ir_output, "Write to FILE");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*summarize) return cmd_summarize(sum);
    if (*evaluate) return cmd_evaluate(ev);
    return cmd_extract_ir(ir_input, ir_output);
  } catch (const SchemaError& e) {
    spdlog::error("{}", e.what());
    return kExitConfig;
  } catch (const InvalidArgument& e) {
    spdlog::error("{}", e.what());
    return kExitConfig;
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return kExitFailed;
  }
}
