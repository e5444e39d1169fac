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

#include "papersum/stopwords.h"

#include "papersum/errors.h"
#include "papersum/ingest.h"
#include "papersum/text.h"

namespace papersum {
namespace internal {
extern const std::string_view kDefaultStopwordsText;
}  // namespace internal

const StopwordList& StopwordList::english() {
  static const StopwordList kEnglish =
      parse(internal::kDefaultStopwordsText, "builtin:en-v1");
  return kEnglish;
}

StopwordList StopwordList::parse(std::string_view text, std::string source) {
  StopwordList list;
  list.source_ = std::move(source);
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string line = trim(text.substr(pos, end - pos));
    if (!line.empty() && line.front() != '#') {
      list.words_.insert(to_lower(line));
    }
    pos = end + 1;
  }
  return list;
}

StopwordList StopwordList::load(const std::filesystem::path& path) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const IngestError& e) {
    throw InvalidArgument(std::string("stopword list: ") + e.what());
  }
  return parse(text, path.string());
}

bool StopwordList::contains(std::string_view token) const {
  if (words_.contains(token)) return true;
  return words_.contains(to_lower(token));
}

}  // namespace papersum
