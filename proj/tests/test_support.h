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

// Shared helpers for the unit tests and the acceptance runner.

#ifndef PAPERSUM_TESTS_TEST_SUPPORT_H_
#define PAPERSUM_TESTS_TEST_SUPPORT_H_

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <string_view>

#include "papersum/render.h"

namespace papersum::testing {

inline std::filesystem::path fixture_path(std::string_view name) {
  return std::filesystem::path(PAPERSUM_FIXTURES_DIR) / name;
}

inline std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void spit(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
}

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("papersum-test-" + std::to_string(rd()) + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(std::string_view name) const {
    return path_ / name;
  }

 private:
  std::filesystem::path path_;
};

struct CommandResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr interleaved
};

// Runs `papersum <args>` through the shell.
CommandResult run_cli(const std::string& args);

// Hashes of every file under `root` keyed by relative path, for tree
// comparisons.
std::string describe_tree(const std::filesystem::path& root);

// Compares a summary of the synthetic paper fixture with its expected
// fields. Returns "" on a match, otherwise the first difference.
std::string fixture_mismatch(const SummaryPage& page);

}  // namespace papersum::testing

#endif  // PAPERSUM_TESTS_TEST_SUPPORT_H_
