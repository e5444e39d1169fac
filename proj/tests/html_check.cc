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

#include "html_check.h"

#include <cctype>
#include <set>
#include <vector>

#include <fmt/format.h>

namespace papersum::testing {
namespace {

const std::set<std::string, std::less<>> kVoid = {"meta", "img", "br", "hr",
                                                  "link", "input"};

bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '-';
}

// Checks an entity starting at html[i] == '&'; returns its length or 0.
std::size_t entity_length(std::string_view html, std::size_t i) {
  std::size_t j = i + 1;
  if (j < html.size() && html[j] == '#') {
    ++j;
    const std::size_t start = j;
    while (j < html.size() && std::isdigit(static_cast<unsigned char>(html[j]))) ++j;
    if (j == start) return 0;
  } else {
    const std::size_t start = j;
    while (j < html.size() && std::isalpha(static_cast<unsigned char>(html[j]))) ++j;
    if (j == start) return 0;
  }
  return j < html.size() && html[j] == ';' ? j + 1 - i : 0;
}

}  // namespace

std::string html_problem(std::string_view html) {
  std::vector<std::string> stack;
  std::size_t i = 0;
  while (i < html.size()) {
    const char c = html[i];
    if (c == '&') {
      const std::size_t n = entity_length(html, i);
      if (n == 0) return fmt::format("bare '&' at {}", i);
      i += n;
      continue;
    }
    if (c == '>') return fmt::format("stray '>' at {}", i);
    if (c != '<') {
      ++i;
      continue;
    }
    if (html.substr(i, 4) == "<!--") {
      const auto end = html.find("-->", i);
      if (end == std::string_view::npos) return "unterminated comment";
      i = end + 3;
      continue;
    }
    if (html.substr(i, 2) == "<!") {
      const auto end = html.find('>', i);
      if (end == std::string_view::npos) return "unterminated declaration";
      i = end + 1;
      continue;
    }
    std::size_t j = i + 1;
    const bool closing = j < html.size() && html[j] == '/';
    if (closing) ++j;
    const std::size_t name_start = j;
    while (j < html.size() && name_char(html[j])) ++j;
    if (j == name_start) return fmt::format("stray '<' at {}", i);
    std::string name(html.substr(name_start, j - name_start));
    bool self_closed = false;
    // Attributes.
    while (true) {
      while (j < html.size() && std::isspace(static_cast<unsigned char>(html[j]))) ++j;
      if (j >= html.size()) return "unterminated tag <" + name;
      if (html[j] == '>') {
        ++j;
        break;
      }
      if (html[j] == '/' && j + 1 < html.size() && html[j + 1] == '>') {
        self_closed = true;
        j += 2;
        break;
      }
      if (closing) return "attributes on closing tag </" + name;
      const std::size_t attr_start = j;
      while (j < html.size() && name_char(html[j])) ++j;
      if (j == attr_start) return fmt::format("bad attribute in <{}>", name);
      if (j >= html.size() || html[j] != '=') {
        return fmt::format("attribute without value in <{}>", name);
      }
      ++j;
      if (j >= html.size() || html[j] != '"') {
        return fmt::format("unquoted attribute in <{}>", name);
      }
      const auto end = html.find('"', j + 1);
      if (end == std::string_view::npos) return "unterminated attribute";
      for (std::size_t k = j + 1; k < end; ++k) {
        if (html[k] == '<') return fmt::format("'<' inside attribute of <{}>", name);
        if (html[k] == '&' && entity_length(html, k) == 0) {
          return fmt::format("bare '&' inside attribute of <{}>", name);
        }
      }
      j = end + 1;
    }
    i = j;
    if (closing) {
      if (stack.empty() || stack.back() != name) {
        return fmt::format("unexpected </{}>{}", name,
                           stack.empty() ? "" : " (open: " + stack.back() + ")");
      }
      stack.pop_back();
    } else if (!self_closed && !kVoid.contains(name)) {
      stack.push_back(name);
      if (name == "style" || name == "script") {
        const auto end = html.find("</" + name, i);
        if (end == std::string_view::npos) return "unterminated <" + name + ">";
        i = end;
      }
    }
  }
  if (!stack.empty()) return "unclosed <" + stack.back() + ">";
  return "";
}

int count_tags(std::string_view html, std::string_view tag) {
  int n = 0;
  const std::string open = "<" + std::string(tag);
  for (auto pos = html.find(open); pos != std::string_view::npos;
       pos = html.find(open, pos + 1)) {
    const std::size_t after = pos + open.size();
    if (after < html.size() && !name_char(html[after])) ++n;
  }
  return n;
}

}  // namespace papersum::testing
