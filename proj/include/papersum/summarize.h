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

// Luhn-style extractive summarization: sentences are ranked by their best
// cluster of significant (frequent, non-stopword) words.

#ifndef PAPERSUM_SUMMARIZE_H_
#define PAPERSUM_SUMMARIZE_H_

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "papersum/sentences.h"
#include "papersum/stopwords.h"
#include "papersum/text.h"

namespace papersum {

inline constexpr int kDefaultMaxGap = 4;
inline constexpr int kDefaultNumSentences = 3;

struct FrequencyTable {
  std::map<std::string, long> counts;
  long total = 0;
  CasePolicy case_policy = CasePolicy::kFold;
  bool stopwords_applied = false;
};

// Counts maximal alphanumeric runs over all sentences.
FrequencyTable word_frequencies(
    std::span<const Sentence> sentences, CasePolicy case_policy,
    bool apply_stopwords,
    const StopwordList& stopwords = StopwordList::english());

// Tokens with count >= min_freq that are not stopwords and have at least two
// code points.
std::set<std::string> significant_words(const FrequencyTable& freq,
                                        long min_freq,
                                        const StopwordList& stopwords);

// max(2, ceil(0.001 * total)).
long default_min_freq(long total_tokens);

struct ClusterScore {
  double score = 0.0;
  int start = 0;  // token index of the first significant word
  int end = 0;    // one past the last significant word; start == end if none
};

// Best cluster over a significance mask. A cluster is a maximal run bracketed
// by significant tokens with at most max_gap insignificant tokens between
// neighbouring significant ones; its score is sig^2 / span length. Ties keep
// the earliest cluster.
ClusterScore luhn_score(const std::vector<bool>& significant, int max_gap);

struct ScoredSentence {
  Sentence sentence;
  double score = 0.0;
  int cluster_start = 0;
  int cluster_end = 0;
};

// Tokenizes with case folding and scores against `sigwords`.
ScoredSentence sentence_score(const Sentence& sentence,
                              const std::set<std::string>& sigwords,
                              int max_gap);

struct SummaryParams {
  std::optional<long> min_freq;  // default_min_freq when unset
  int max_gap = kDefaultMaxGap;
  const StopwordList* stopwords = &StopwordList::english();
};

struct Summary {
  std::vector<ScoredSentence> sentences;  // document order
  long min_freq = 0;                      // threshold actually used
  std::set<std::string> significant;
};

// Top-n sentences by score (ties to the earlier sentence), returned in
// document order. Throws InvalidArgument when n < 1.
Summary summarize(std::span<const Sentence> sentences, int n,
                  const SummaryParams& params);

std::vector<ScoredSentence> extract_summary(std::span<const Sentence> sentences,
                                            int n,
                                            const SummaryParams& params);

}  // namespace papersum

#endif  // PAPERSUM_SUMMARIZE_H_
