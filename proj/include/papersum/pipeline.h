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

// Per-document summary pipeline and the batch runner behind `summarize`.

#ifndef PAPERSUM_PIPELINE_H_
#define PAPERSUM_PIPELINE_H_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "papersum/detect.h"
#include "papersum/ir.h"
#include "papersum/match.h"
#include "papersum/render.h"
#include "papersum/stopwords.h"
#include "papersum/summarize.h"

namespace papersum {

enum class DetectorMode { kHeuristic, kExternal };

struct PipelineOptions {
  DetectorMode detector = DetectorMode::kHeuristic;
  // File with detections for one or more documents, or a directory holding
  // <doc_id>.json per document. Used with DetectorMode::kExternal.
  std::filesystem::path detections;
  double tau = kDefaultTau;
  double conf_threshold = kDefaultConfThreshold;
  double caption_max_gap = kDefaultCaptionMaxGap;
  std::optional<long> min_freq;
  int max_gap = kDefaultMaxGap;
  int num_sentences = kDefaultNumSentences;
  StopwordList stopwords = StopwordList::english();
};

// Throws InvalidArgument for out-of-range values.
void validate_options(const PipelineOptions& options);

struct DocumentResult {
  SummaryPage page;
  RenderedSummary rendered;
  std::vector<std::string> warnings;
};

// Runs detect, match, figure selection, summarization and rendering.
// `detections` overrides the configured detector when given.
DocumentResult summarize_document(
    const DocumentIR& ir, const PipelineOptions& options,
    const std::vector<Detection>* detections = nullptr);

// Reads a PDF or IR JSON file (sniffed by content). The document id is the
// file stem in both cases.
DocumentIR load_document(const std::filesystem::path& path);

struct RunConfig {
  std::vector<std::filesystem::path> inputs;  // files or directories
  std::filesystem::path out_dir;
  PipelineOptions options;
  int jobs = 1;
};

struct DocumentStatus {
  std::string input;
  std::string doc_id;
  bool ok = false;
  std::string error;
  std::vector<std::string> warnings;
};

struct BatchResult {
  int exit_code = 0;  // 0 some succeeded, 1 all failed
  std::vector<DocumentStatus> documents;  // input order
  int succeeded() const;
};

// Files named by `inputs`, with directories expanded to their *.pdf and
// *.json files in name order. Throws InvalidArgument for missing inputs.
std::vector<std::filesystem::path> expand_inputs(
    const std::vector<std::filesystem::path>& inputs);

// Summarizes every input into <out_dir>/<doc_id>/summary.{html,json}, then
// writes <out_dir>/index.html and <out_dir>/run_log.json. Each document is
// built in a temporary directory and renamed into place, so a failure leaves
// no partial output. Output does not depend on `jobs`. Throws
// InvalidArgument for configuration errors (bad options, missing inputs,
// output directory parent missing).
BatchResult run_summarize(const RunConfig& config);

}  // namespace papersum

#endif  // PAPERSUM_PIPELINE_H_
