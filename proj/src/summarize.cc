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

#include "papersum/summarize.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "papersum/errors.h"

namespace papersum {

FrequencyTable word_frequencies(std::span<const Sentence> sentences,
                                CasePolicy case_policy, bool apply_stopwords,
                                const StopwordList& stopwords) {
  FrequencyTable table;
  table.case_policy = case_policy;
  table.stopwords_applied = apply_stopwords;
  for (const auto& s : sentences) {
    for (auto& token : tokenize_words(s.text, case_policy)) {
      if (apply_stopwords && stopwords.contains(token)) continue;
      ++table.counts[std::move(token)];
      ++table.total;
    }
  }
  return table;
}

std::set<std::string> significant_words(const FrequencyTable& freq,
                                        long min_freq,
                                        const StopwordList& stopwords) {
  if (min_freq < 1) {
    throw InvalidArgument(fmt::format("min_freq {} must be >= 1", min_freq));
  }
  std::set<std::string> out;
  for (const auto& [token, count] : freq.counts) {
    if (count >= min_freq && utf8_length(token) >= 2 &&
        !stopwords.contains(token)) {
      out.insert(token);
    }
  }
  return out;
}

long default_min_freq(long total_tokens) {
  const long scaled = (std::max(0L, total_tokens) + 999) / 1000;
  return std::max(2L, scaled);
}

ClusterScore luhn_score(const std::vector<bool>& significant, int max_gap) {
  if (max_gap < 0) {
    throw InvalidArgument(fmt::format("max_gap {} must be >= 0", max_gap));
  }
  ClusterScore best;
  const int n = static_cast<int>(significant.size());
  int i = 0;
  while (i < n) {
    if (!significant[i]) {
      ++i;
      continue;
    }
    const int start = i;
    int last = i;
    int count = 1;
    for (int j = i + 1; j < n && j - last - 1 <= max_gap; ++j) {
      if (significant[j]) {
        last = j;
        ++count;
      }
    }
    const int span = last - start + 1;
    const double score =
        static_cast<double>(count) * count / static_cast<double>(span);
    if (score > best.score) best = ClusterScore{score, start, last + 1};
    i = last + 1;
  }
  return best;
}

ScoredSentence sentence_score(const Sentence& sentence,
                              const std::set<std::string>& sigwords,
                              int max_gap) {
  const auto tokens = tokenize_words(sentence.text, CasePolicy::kFold);
  std::vector<bool> mask;
  mask.reserve(tokens.size());
  for (const auto& t : tokens) mask.push_back(sigwords.contains(t));
  const ClusterScore c = luhn_score(mask, max_gap);
  return ScoredSentence{sentence, c.score, c.start, c.end};
}

Summary summarize(std::span<const Sentence> sentences, int n,
                  const SummaryParams& params) {
  if (n < 1) {
    throw InvalidArgument(fmt::format("number of sentences {} must be >= 1", n));
  }
  const StopwordList& stopwords =
      params.stopwords ? *params.stopwords : StopwordList::english();
  const FrequencyTable table =
      word_frequencies(sentences, CasePolicy::kFold, true, stopwords);
  Summary summary;
  summary.min_freq = params.min_freq.value_or(default_min_freq(table.total));
  summary.significant = significant_words(table, summary.min_freq, stopwords);

  std::vector<ScoredSentence> scored;
  scored.reserve(sentences.size());
  for (const auto& s : sentences) {
    scored.push_back(sentence_score(s, summary.significant, params.max_gap));
  }
  std::vector<std::size_t> rank(scored.size());
  std::iota(rank.begin(), rank.end(), 0);
  auto by_order = [&](std::size_t a, std::size_t b) {
    return scored[a].sentence.order < scored[b].sentence.order;
  };
  std::stable_sort(rank.begin(), rank.end(), [&](std::size_t a, std::size_t b) {
    if (scored[a].score != scored[b].score) {
      return scored[a].score > scored[b].score;
    }
    return by_order(a, b);
  });
  rank.resize(std::min<std::size_t>(rank.size(), static_cast<std::size_t>(n)));
  std::stable_sort(rank.begin(), rank.end(), by_order);
  for (std::size_t i : rank) summary.sentences.push_back(scored[i]);
  return summary;
}

std::vector<ScoredSentence> extract_summary(std::span<const Sentence> sentences,
                                            int n,
                                            const SummaryParams& params) {
  return summarize(sentences, n, params).sentences;
}

}  // namespace papersum
