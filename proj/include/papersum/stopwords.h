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

#ifndef PAPERSUM_STOPWORDS_H_
#define PAPERSUM_STOPWORDS_H_

#include <filesystem>
#include <set>
#include <string>
#include <string_view>

namespace papersum {

// Case-insensitive set of words ignored by overlap scoring and Luhn
// significance. File format: UTF-8, one token per line, '#' starts a
// comment line, blank lines ignored.
class StopwordList {
 public:
  StopwordList() = default;

  // The built-in English list (data/stopwords_en.txt).
  static const StopwordList& english();
  static StopwordList parse(std::string_view text, std::string source);
  static StopwordList load(const std::filesystem::path& path);

  bool contains(std::string_view token) const;
  std::size_t size() const { return words_.size(); }
  const std::set<std::string, std::less<>>& words() const { return words_; }
  // "builtin:en-v1" or the file path the list came from.
  const std::string& source() const { return source_; }

 private:
  std::set<std::string, std::less<>> words_;
  std::string source_;
};

}  // namespace papersum

#endif  // PAPERSUM_STOPWORDS_H_
