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

// Strict well-formedness check for the HTML this project writes: every
// element closed or self-closed (void elements may omit the slash),
// attributes quoted, '&' only in entities, no stray '<'.

#ifndef PAPERSUM_TESTS_HTML_CHECK_H_
#define PAPERSUM_TESTS_HTML_CHECK_H_

#include <string>
#include <string_view>

namespace papersum::testing {

// Empty when well-formed, otherwise a description of the first problem.
std::string html_problem(std::string_view html);

// Number of start tags named `tag`.
int count_tags(std::string_view html, std::string_view tag);

}  // namespace papersum::testing

#endif  // PAPERSUM_TESTS_HTML_CHECK_H_
