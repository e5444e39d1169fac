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

#include "test_support.h"

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <vector>

#include "json.hpp"

namespace papersum::testing {

CommandResult run_cli(const std::string& args) {
  const std::string cmd =
      std::string("\"") + PAPERSUM_CLI_PATH + "\" " + args + " 2>&1";
  CommandResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return result;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) result.output.append(buf, n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string describe_tree(const std::filesystem::path& root) {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::recursive_directory_iterator(root)) {
    if (e.is_regular_file()) files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  std::string out;
  for (const auto& f : files) {
    const std::string body = slurp(f);
    out += std::filesystem::relative(f, root).generic_string() + "\n" +
           std::to_string(body.size()) + "\n" + body;
  }
  return out;
}

std::string fixture_mismatch(const SummaryPage& page) {
  const auto want = nlohmann::json::parse(
      slurp(fixture_path("synthetic_paper.expected.json")));
  auto differ = [](const std::string& what, const std::string& got,
                   const std::string& expected) {
    return what + ": got \"" + got + "\", expected \"" + expected + "\"";
  };
  const std::pair<const char*, const std::optional<std::string>*> fields[] = {
      {"title", &page.title}, {"authors", &page.authors},
      {"abstract", &page.abstract}};
  for (const auto& [key, value] : fields) {
    const std::string expected = want.at(key).get<std::string>();
    if (value->value_or("<none>") != expected) {
      return differ(key, value->value_or("<none>"), expected);
    }
  }
  if (!page.mif) return "no figure chosen";
  if (page.mif->page_index != want.at("mif_page_index").get<int>() ||
      page.mif->figure_order != want.at("mif_figure_order").get<int>()) {
    return "wrong figure: page " + std::to_string(page.mif->page_index) +
           ", order " + std::to_string(page.mif->figure_order);
  }
  if (page.mif->caption_text != want.at("mif_caption").get<std::string>()) {
    return differ("mif_caption", page.mif->caption_text,
                  want.at("mif_caption").get<std::string>());
  }
  const auto sentences = want.at("sentences").get<std::vector<std::string>>();
  if (page.sentences != sentences) {
    std::string got;
    for (const auto& s : page.sentences) got += s + " | ";
    return "sentences differ: " + got;
  }
  for (const auto& [field, refs] : want.at("field_boxes").items()) {
    std::vector<BoxRef> expected;
    for (const auto& r : refs) expected.push_back({r.at(0), r.at(1)});
    auto it = page.field_boxes.find(field);
    if (it == page.field_boxes.end() || it->second != expected) {
      return "field_boxes." + field + " differ";
    }
  }
  return "";
}

}  // namespace papersum::testing
