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

#ifndef PAPERSUM_PDF_FONT_H_
#define PAPERSUM_PDF_FONT_H_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pdf/document.h"

namespace papersum::pdf {

struct Glyph {
  std::string text;     // UTF-8, may be empty for unmappable codes
  double width = 0.0;   // advance in text space (already divided by 1000)
  bool is_space = false;  // single-byte code 32, subject to word spacing
};

// Character-code to Unicode mapping parsed from a CMap stream.
struct CMap {
  // Ranges of valid code lengths: (byte count, low, high).
  struct CodeSpace {
    int bytes = 1;
    std::uint32_t low = 0;
    std::uint32_t high = 0;
  };
  std::vector<CodeSpace> code_space;
  std::map<std::uint32_t, std::string> unicode;  // code -> UTF-8
  std::map<std::uint32_t, std::uint32_t> cid;    // code -> CID

  static CMap parse(std::string_view data);
};

std::string utf16be_to_utf8(std::string_view bytes);

// Maps an Adobe glyph name ("A", "fi", "uni00E9", ...) to UTF-8.
std::string glyph_name_to_utf8(std::string_view name);

class Font {
 public:
  // Fallback used when a font resource is missing or unreadable.
  Font();
  Font(const Document& doc, const Dict& font);

  std::vector<Glyph> decode(std::string_view bytes) const;

  // Ascent/descent as fractions of the font size (descent negative).
  double ascent() const { return ascent_; }
  double descent() const { return descent_; }

 private:
  int code_length(std::string_view bytes, std::size_t pos) const;
  double width_of(std::uint32_t code) const;
  std::string text_of(std::uint32_t code) const;

  bool composite_ = false;
  double width_scale_ = 0.001;
  double ascent_ = 0.75;
  double descent_ = -0.25;
  double default_width_ = 500.0;
  std::map<std::uint32_t, double> widths_;  // by code (simple) or CID
  std::vector<std::string> simple_encoding_;  // 256 entries
  CMap to_unicode_;
  bool has_to_unicode_ = false;
  CMap encoding_cmap_;       // composite fonts
  bool identity_ = true;     // composite: Identity-H/V
};

}  // namespace papersum::pdf

#endif  // PAPERSUM_PDF_FONT_H_
