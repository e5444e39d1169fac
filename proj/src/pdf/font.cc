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

#include "pdf/font.h"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <unordered_map>

#include "papersum/errors.h"

namespace papersum::pdf {
namespace {

void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x110000) {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string utf8_of(std::uint32_t cp) {
  std::string s;
  append_utf8(s, cp);
  return s;
}

// Typographic ligatures are spelled out so downstream tokenization sees
// plain letters.
std::string expand_ligatures(std::string s) {
  static const std::array<std::pair<std::string_view, std::string_view>, 7>
      kLigatures = {{{"\xEF\xAC\x80", "ff"},
                     {"\xEF\xAC\x81", "fi"},
                     {"\xEF\xAC\x82", "fl"},
                     {"\xEF\xAC\x83", "ffi"},
                     {"\xEF\xAC\x84", "ffl"},
                     {"\xEF\xAC\x85", "st"},
                     {"\xEF\xAC\x86", "st"}}};
  for (const auto& [from, to] : kLigatures) {
    std::size_t pos = 0;
    while ((pos = s.find(from, pos)) != std::string::npos) {
      s.replace(pos, from.size(), to);
      pos += to.size();
    }
  }
  return s;
}

constexpr std::array<std::string_view, 95> kAsciiNames = {
    "space",      "exclam",      "quotedbl",     "numbersign", "dollar",
    "percent",    "ampersand",   "quotesingle",  "parenleft",  "parenright",
    "asterisk",   "plus",        "comma",        "hyphen",     "period",
    "slash",      "zero",        "one",          "two",        "three",
    "four",       "five",        "six",          "seven",      "eight",
    "nine",       "colon",       "semicolon",    "less",       "equal",
    "greater",    "question",    "at",           "A",          "B",
    "C",          "D",           "E",            "F",          "G",
    "H",          "I",           "J",            "K",          "L",
    "M",          "N",           "O",            "P",          "Q",
    "R",          "S",           "T",            "U",          "V",
    "W",          "X",           "Y",            "Z",          "bracketleft",
    "backslash",  "bracketright", "asciicircum", "underscore", "grave",
    "a",          "b",           "c",            "d",          "e",
    "f",          "g",           "h",            "i",          "j",
    "k",          "l",           "m",            "n",          "o",
    "p",          "q",           "r",            "s",          "t",
    "u",          "v",           "w",            "x",          "y",
    "z",          "braceleft",   "bar",          "braceright", "asciitilde"};

constexpr std::array<std::string_view, 96> kLatin1Names = {
    "nbspace",     "exclamdown",    "cent",           "sterling",
    "currency",    "yen",           "brokenbar",      "section",
    "dieresis",    "copyright",     "ordfeminine",    "guillemotleft",
    "logicalnot",  "sfthyphen",     "registered",     "macron",
    "degree",      "plusminus",     "twosuperior",    "threesuperior",
    "acute",       "mu",            "paragraph",      "periodcentered",
    "cedilla",     "onesuperior",   "ordmasculine",   "guillemotright",
    "onequarter",  "onehalf",       "threequarters",  "questiondown",
    "Agrave",      "Aacute",        "Acircumflex",    "Atilde",
    "Adieresis",   "Aring",         "AE",             "Ccedilla",
    "Egrave",      "Eacute",        "Ecircumflex",    "Edieresis",
    "Igrave",      "Iacute",        "Icircumflex",    "Idieresis",
    "Eth",         "Ntilde",        "Ograve",         "Oacute",
    "Ocircumflex", "Otilde",        "Odieresis",      "multiply",
    "Oslash",      "Ugrave",        "Uacute",         "Ucircumflex",
    "Udieresis",   "Yacute",        "Thorn",          "germandbls",
    "agrave",      "aacute",        "acircumflex",    "atilde",
    "adieresis",   "aring",         "ae",             "ccedilla",
    "egrave",      "eacute",        "ecircumflex",    "edieresis",
    "igrave",      "iacute",        "icircumflex",    "idieresis",
    "eth",         "ntilde",        "ograve",         "oacute",
    "ocircumflex", "otilde",        "odieresis",      "divide",
    "oslash",      "ugrave",        "uacute",         "ucircumflex",
    "udieresis",   "yacute",        "thorn",          "ydieresis"};

constexpr std::array<std::pair<std::string_view, std::uint32_t>, 52>
    kExtraNames = {{
        {"quoteleft", 0x2018},     {"quoteright", 0x2019},
        {"quotedblleft", 0x201C},  {"quotedblright", 0x201D},
        {"quotesinglbase", 0x201A}, {"quotedblbase", 0x201E},
        {"endash", 0x2013},        {"emdash", 0x2014},
        {"bullet", 0x2022},        {"dagger", 0x2020},
        {"daggerdbl", 0x2021},     {"ellipsis", 0x2026},
        {"perthousand", 0x2030},   {"minus", 0x2212},
        {"fraction", 0x2044},      {"trademark", 0x2122},
        {"Euro", 0x20AC},          {"dotlessi", 0x0131},
        {"Lslash", 0x0141},        {"lslash", 0x0142},
        {"OE", 0x0152},            {"oe", 0x0153},
        {"Scaron", 0x0160},        {"scaron", 0x0161},
        {"Zcaron", 0x017D},        {"zcaron", 0x017E},
        {"Ydieresis", 0x0178},     {"florin", 0x0192},
        {"circumflex", 0x02C6},    {"tilde", 0x02DC},
        {"caron", 0x02C7},         {"breve", 0x02D8},
        {"dotaccent", 0x02D9},     {"ring", 0x02DA},
        {"ogonek", 0x02DB},        {"hungarumlaut", 0x02DD},
        {"guilsinglleft", 0x2039}, {"guilsinglright", 0x203A},
        {"arrowright", 0x2192},    {"arrowleft", 0x2190},
        {"infinity", 0x221E},      {"lessequal", 0x2264},
        {"greaterequal", 0x2265},  {"notequal", 0x2260},
        {"approxequal", 0x2248},   {"element", 0x2208},
        {"summation", 0x2211},     {"product", 0x220F},
        {"radical", 0x221A},       {"partialdiff", 0x2202},
        {"nabla", 0x2207},         {"sigma1", 0x03C2},
    }};

constexpr std::array<std::string_view, 24> kGreekLower = {
    "alpha", "beta",  "gamma",   "delta", "epsilon", "zeta",
    "eta",   "theta", "iota",    "kappa", "lambda",  "Mu",
    "nu",    "xi",    "omicron", "pi",    "rho",     "sigma",
    "tau",   "upsilon", "phi",   "chi",   "psi",     "omega"};

const std::unordered_map<std::string, std::string>& glyph_table() {
  static const auto* table = [] {
    auto* t = new std::unordered_map<std::string, std::string>();
    for (std::size_t i = 0; i < kAsciiNames.size(); ++i) {
      (*t)[std::string(kAsciiNames[i])] = utf8_of(0x20 + static_cast<std::uint32_t>(i));
    }
    for (std::size_t i = 0; i < kLatin1Names.size(); ++i) {
      (*t)[std::string(kLatin1Names[i])] = utf8_of(0xA0 + static_cast<std::uint32_t>(i));
    }
    (*t)["nbspace"] = " ";
    (*t)["sfthyphen"] = "-";
    for (const auto& [name, cp] : kExtraNames) (*t)[std::string(name)] = utf8_of(cp);
    for (std::size_t i = 0; i < kGreekLower.size(); ++i) {
      // Skip final sigma (U+03C2) in the sequence.
      std::uint32_t cp = 0x03B1 + static_cast<std::uint32_t>(i);
      if (cp >= 0x03C2) ++cp;
      std::string upper(kGreekLower[i]);
      if (upper == "Mu") {
        // Lowercase "mu" is the Latin-1 micro sign.
        (*t)[upper] = utf8_of(cp - 0x20);
        continue;
      }
      (*t)[upper] = utf8_of(cp);
      upper[0] = static_cast<char>(upper[0] - 'a' + 'A');
      (*t)[upper] = utf8_of(cp - 0x20);
    }
    (*t)["fi"] = "fi";
    (*t)["fl"] = "fl";
    (*t)["ff"] = "ff";
    (*t)["ffi"] = "ffi";
    (*t)["ffl"] = "ffl";
    return t;
  }();
  return *table;
}

// WinAnsi 0x80-0x9F.
constexpr std::array<std::uint32_t, 32> kWinAnsiHigh = {
    0x20AC, 0,      0x201A, 0x0192, 0x201E, 0x2026, 0x2020, 0x2021,
    0x02C6, 0x2030, 0x0160, 0x2039, 0x0152, 0,      0x017D, 0,
    0,      0x2018, 0x2019, 0x201C, 0x201D, 0x2022, 0x2013, 0x2014,
    0x02DC, 0x2122, 0x0161, 0x203A, 0x0153, 0,      0x017E, 0x0178};

std::vector<std::string> win_ansi_encoding() {
  std::vector<std::string> enc(256);
  for (std::uint32_t c = 0x20; c < 0x7F; ++c) enc[c] = utf8_of(c);
  for (std::uint32_t c = 0x80; c < 0xA0; ++c) {
    if (kWinAnsiHigh[c - 0x80] != 0) enc[c] = utf8_of(kWinAnsiHigh[c - 0x80]);
  }
  for (std::uint32_t c = 0xA0; c < 0x100; ++c) enc[c] = utf8_of(c);
  enc[0xA0] = " ";
  enc[0xAD] = "-";
  return enc;
}

std::vector<std::string> standard_encoding() {
  std::vector<std::string> enc(256);
  for (std::uint32_t c = 0x20; c < 0x7F; ++c) enc[c] = utf8_of(c);
  enc[0x27] = utf8_of(0x2019);
  enc[0x60] = utf8_of(0x2018);
  static const std::array<std::pair<std::uint8_t, std::uint32_t>, 40> kHigh = {{
      {0xA1, 0x00A1}, {0xA2, 0x00A2}, {0xA3, 0x00A3}, {0xA4, 0x2044},
      {0xA5, 0x00A5}, {0xA6, 0x0192}, {0xA7, 0x00A7}, {0xA8, 0x00A4},
      {0xA9, 0x0027}, {0xAA, 0x201C}, {0xAB, 0x00AB}, {0xAC, 0x2039},
      {0xAD, 0x203A}, {0xB1, 0x2013}, {0xB2, 0x2020}, {0xB3, 0x2021},
      {0xB4, 0x00B7}, {0xB6, 0x00B6}, {0xB7, 0x2022}, {0xB8, 0x201A},
      {0xB9, 0x201E}, {0xBA, 0x201D}, {0xBB, 0x00BB}, {0xBC, 0x2026},
      {0xBD, 0x2030}, {0xBF, 0x00BF}, {0xD0, 0x2014}, {0xE1, 0x00C6},
      {0xE3, 0x00AA}, {0xE8, 0x0141}, {0xE9, 0x00D8}, {0xEA, 0x0152},
      {0xEB, 0x00BA}, {0xF1, 0x00E6}, {0xF5, 0x0131}, {0xF8, 0x0142},
      {0xF9, 0x00F8}, {0xFA, 0x0153}, {0xFB, 0x00DF}, {0xC1, 0x0060},
  }};
  for (const auto& [code, cp] : kHigh) enc[code] = utf8_of(cp);
  enc[0xAE] = "fi";
  enc[0xAF] = "fl";
  return enc;
}

std::uint32_t code_value(std::string_view bytes) {
  std::uint32_t v = 0;
  for (unsigned char c : bytes) v = (v << 8) | c;
  return v;
}

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

std::string utf16be_to_utf8(std::string_view bytes) {
  std::string out;
  for (std::size_t i = 0; i + 1 < bytes.size(); i += 2) {
    std::uint32_t unit = (static_cast<unsigned char>(bytes[i]) << 8) |
                         static_cast<unsigned char>(bytes[i + 1]);
    if (unit >= 0xD800 && unit < 0xDC00 && i + 3 < bytes.size()) {
      const std::uint32_t low = (static_cast<unsigned char>(bytes[i + 2]) << 8) |
                                static_cast<unsigned char>(bytes[i + 3]);
      if (low >= 0xDC00 && low < 0xE000) {
        append_utf8(out, 0x10000 + ((unit - 0xD800) << 10) + (low - 0xDC00));
        i += 2;
        continue;
      }
    }
    if (unit >= 0xD800 && unit < 0xE000) continue;
    append_utf8(out, unit);
  }
  return expand_ligatures(std::move(out));
}

std::string glyph_name_to_utf8(std::string_view name) {
  if (auto dot = name.find('.'); dot != std::string_view::npos && dot > 0) {
    name = name.substr(0, dot);
  }
  if (name.find('_') != std::string_view::npos) {
    std::string out;
    std::size_t start = 0;
    while (start <= name.size()) {
      std::size_t end = name.find('_', start);
      if (end == std::string_view::npos) end = name.size();
      out += glyph_name_to_utf8(name.substr(start, end - start));
      start = end + 1;
    }
    return out;
  }
  const auto& table = glyph_table();
  if (auto it = table.find(std::string(name)); it != table.end()) {
    return it->second;
  }
  auto parse_hex = [](std::string_view hex, std::uint32_t& out) {
    if (hex.empty()) return false;
    out = 0;
    for (char c : hex) {
      const int d = hex_digit(c);
      if (d < 0) return false;
      out = out * 16 + static_cast<std::uint32_t>(d);
    }
    return true;
  };
  if (name.starts_with("uni") && name.size() >= 7 && (name.size() - 3) % 4 == 0) {
    std::string out;
    for (std::size_t i = 3; i < name.size(); i += 4) {
      std::uint32_t cp = 0;
      if (!parse_hex(name.substr(i, 4), cp)) return {};
      append_utf8(out, cp);
    }
    return expand_ligatures(std::move(out));
  }
  if (name.starts_with("u") && name.size() >= 5 && name.size() <= 7) {
    std::uint32_t cp = 0;
    if (parse_hex(name.substr(1), cp)) return expand_ligatures(utf8_of(cp));
  }
  return {};
}

CMap CMap::parse(std::string_view data) {
  CMap cmap;
  Lexer lex(data);
  std::vector<Object> operands;
  auto str_of = [](const Object& o) -> const std::string* {
    return o.string_bytes();
  };
  while (true) {
    std::optional<Object> tok;
    try {
      tok = lex.next(false);
    } catch (const IngestError&) {
      break;
    }
    if (!tok) break;
    const std::string* kw = tok->keyword();
    if (kw == nullptr) {
      operands.push_back(std::move(*tok));
      continue;
    }
    if (*kw == "endcodespacerange") {
      for (std::size_t i = 0; i + 1 < operands.size(); i += 2) {
        const std::string* lo = str_of(operands[i]);
        const std::string* hi = str_of(operands[i + 1]);
        if (lo && hi && !lo->empty()) {
          cmap.code_space.push_back(CodeSpace{static_cast<int>(lo->size()),
                                              code_value(*lo), code_value(*hi)});
        }
      }
    } else if (*kw == "endbfchar") {
      for (std::size_t i = 0; i + 1 < operands.size(); i += 2) {
        const std::string* src = str_of(operands[i]);
        if (src == nullptr) continue;
        if (const std::string* dst = str_of(operands[i + 1])) {
          cmap.unicode[code_value(*src)] = utf16be_to_utf8(*dst);
        } else if (const std::string* name = operands[i + 1].name()) {
          cmap.unicode[code_value(*src)] = glyph_name_to_utf8(*name);
        }
      }
    } else if (*kw == "endbfrange") {
      for (std::size_t i = 0; i + 2 < operands.size(); i += 3) {
        const std::string* lo = str_of(operands[i]);
        const std::string* hi = str_of(operands[i + 1]);
        if (lo == nullptr || hi == nullptr) continue;
        const std::uint32_t first = code_value(*lo);
        const std::uint32_t last = code_value(*hi);
        if (last < first || last - first > 0xFFFF) continue;
        if (const std::string* dst = str_of(operands[i + 2])) {
          std::string base = *dst;
          for (std::uint32_t c = first; c <= last; ++c) {
            cmap.unicode[c] = utf16be_to_utf8(base);
            // Increment the final UTF-16 code unit.
            if (base.size() >= 2) {
              std::uint32_t unit =
                  (static_cast<unsigned char>(base[base.size() - 2]) << 8) |
                  static_cast<unsigned char>(base.back());
              ++unit;
              base[base.size() - 2] = static_cast<char>((unit >> 8) & 0xFF);
              base.back() = static_cast<char>(unit & 0xFF);
            }
          }
        } else if (const Array* arr = operands[i + 2].array()) {
          for (std::uint32_t c = first; c <= last && c - first < arr->size(); ++c) {
            if (const std::string* s = (*arr)[c - first].string_bytes()) {
              cmap.unicode[c] = utf16be_to_utf8(*s);
            }
          }
        }
      }
    } else if (*kw == "endcidchar") {
      for (std::size_t i = 0; i + 1 < operands.size(); i += 2) {
        const std::string* src = str_of(operands[i]);
        const auto cid = operands[i + 1].integer();
        if (src && cid) cmap.cid[code_value(*src)] = static_cast<std::uint32_t>(*cid);
      }
    } else if (*kw == "endcidrange") {
      for (std::size_t i = 0; i + 2 < operands.size(); i += 3) {
        const std::string* lo = str_of(operands[i]);
        const std::string* hi = str_of(operands[i + 1]);
        const auto cid = operands[i + 2].integer();
        if (!lo || !hi || !cid) continue;
        const std::uint32_t first = code_value(*lo);
        const std::uint32_t last = code_value(*hi);
        if (last < first || last - first > 0xFFFF) continue;
        for (std::uint32_t c = first; c <= last; ++c) {
          cmap.cid[c] = static_cast<std::uint32_t>(*cid) + (c - first);
        }
      }
    }
    operands.clear();
  }
  return cmap;
}

Font::Font() : simple_encoding_(standard_encoding()) {}

Font::Font(const Document& doc, const Dict& font) {
  const std::string* subtype = doc.resolve_name(lookup(font, "Subtype"));
  composite_ = subtype != nullptr && *subtype == "Type0";

  if (const Object* tu = lookup(font, "ToUnicode")) {
    if (const Stream* s = doc.resolve(*tu).stream()) {
      try {
        to_unicode_ = CMap::parse(doc.decode(*s));
        has_to_unicode_ = !to_unicode_.unicode.empty();
      } catch (const IngestError&) {
      }
    }
  }

  const Dict* descriptor_owner = &font;
  if (composite_) {
    if (const Object* enc = lookup(font, "Encoding")) {
      const Object& e = doc.resolve(*enc);
      if (const Stream* s = e.stream()) {
        try {
          encoding_cmap_ = CMap::parse(doc.decode(*s));
          identity_ = false;
        } catch (const IngestError&) {
        }
      }
    }
    const Array* descendants = doc.resolve_array(lookup(font, "DescendantFonts"));
    const Dict* cid_font =
        descendants && !descendants->empty() ? doc.resolve(descendants->front()).dict()
                                             : nullptr;
    default_width_ = 1000.0;
    if (cid_font != nullptr) {
      descriptor_owner = cid_font;
      default_width_ = doc.resolve_number(lookup(*cid_font, "DW")).value_or(1000.0);
      if (const Array* w = doc.resolve_array(lookup(*cid_font, "W"))) {
        // Either "c [w1 w2 ...]" or "c_first c_last w".
        std::size_t i = 0;
        while (i + 1 < w->size()) {
          const auto first = doc.resolve((*w)[i]).integer();
          const Object& second = doc.resolve((*w)[i + 1]);
          if (!first) break;
          if (const Array* list = second.array()) {
            for (std::size_t k = 0; k < list->size(); ++k) {
              widths_[static_cast<std::uint32_t>(*first + static_cast<std::int64_t>(k))] =
                  doc.resolve((*list)[k]).number().value_or(default_width_);
            }
            i += 2;
          } else if (i + 2 < w->size()) {
            const auto last = second.integer();
            const double width = doc.resolve((*w)[i + 2]).number().value_or(default_width_);
            if (last && *last >= *first && *last - *first < 0x10000) {
              for (std::int64_t c = *first; c <= *last; ++c) {
                widths_[static_cast<std::uint32_t>(c)] = width;
              }
            }
            i += 3;
          } else {
            break;
          }
        }
      }
    }
  } else {
    const bool truetype = subtype != nullptr && *subtype == "TrueType";
    simple_encoding_ = truetype ? win_ansi_encoding() : standard_encoding();
    if (const Object* enc = lookup(font, "Encoding")) {
      const Object& e = doc.resolve(*enc);
      const std::string* base = e.name();
      const Dict* enc_dict = e.dict();
      if (enc_dict != nullptr) base = doc.resolve_name(lookup(*enc_dict, "BaseEncoding"));
      if (base != nullptr) {
        if (*base == "WinAnsiEncoding" || *base == "MacRomanEncoding") {
          // MacRoman differs only above 0x7F; WinAnsi is the closer fallback.
          simple_encoding_ = win_ansi_encoding();
        } else if (*base == "StandardEncoding") {
          simple_encoding_ = standard_encoding();
        }
      }
      if (enc_dict != nullptr) {
        if (const Array* diffs = doc.resolve_array(lookup(*enc_dict, "Differences"))) {
          std::int64_t code = 0;
          for (const Object& item : *diffs) {
            const Object& v = doc.resolve(item);
            if (auto n = v.integer(); n && v.is_number()) {
              code = *n;
            } else if (const std::string* gname = v.name()) {
              if (code >= 0 && code < 256) {
                simple_encoding_[static_cast<std::size_t>(code)] =
                    glyph_name_to_utf8(*gname);
              }
              ++code;
            }
          }
        }
      }
    }
    if (subtype != nullptr && *subtype == "Type3") {
      if (const Array* m = doc.resolve_array(lookup(font, "FontMatrix"))) {
        if (!m->empty()) width_scale_ = doc.resolve((*m)[0]).number().value_or(0.001);
      }
    }
    const auto first_char = doc.resolve_number(lookup(font, "FirstChar"));
    if (const Array* w = doc.resolve_array(lookup(font, "Widths")); w && first_char) {
      for (std::size_t k = 0; k < w->size(); ++k) {
        widths_[static_cast<std::uint32_t>(*first_char) + static_cast<std::uint32_t>(k)] =
            doc.resolve((*w)[k]).number().value_or(0.0);
      }
    }
  }

  if (const Dict* fd = doc.resolve_dict(lookup(*descriptor_owner, "FontDescriptor"))) {
    if (!composite_) {
      if (auto mw = doc.resolve_number(lookup(*fd, "MissingWidth")); mw && *mw > 0) {
        default_width_ = *mw;
      }
    }
    const auto asc = doc.resolve_number(lookup(*fd, "Ascent"));
    const auto desc = doc.resolve_number(lookup(*fd, "Descent"));
    if (asc && *asc > 100 && *asc < 2000) ascent_ = std::min(*asc / 1000.0, 1.0);
    if (desc && *desc < 0 && *desc > -1000) descent_ = std::max(*desc / 1000.0, -0.5);
  }
}

int Font::code_length(std::string_view bytes, std::size_t pos) const {
  if (!composite_) return 1;
  const std::vector<CMap::CodeSpace>& spaces =
      !identity_ && !encoding_cmap_.code_space.empty() ? encoding_cmap_.code_space
                                                       : to_unicode_.code_space;
  if (identity_ || spaces.empty()) return 2;
  for (int len = 1; len <= 4 && pos + static_cast<std::size_t>(len) <= bytes.size(); ++len) {
    const std::uint32_t v = code_value(bytes.substr(pos, static_cast<std::size_t>(len)));
    for (const auto& cs : spaces) {
      if (cs.bytes == len && v >= cs.low && v <= cs.high) return len;
    }
  }
  return 1;
}

double Font::width_of(std::uint32_t code) const {
  std::uint32_t key = code;
  if (composite_ && !identity_) {
    auto it = encoding_cmap_.cid.find(code);
    key = it != encoding_cmap_.cid.end() ? it->second : code;
  }
  auto it = widths_.find(key);
  const double w = it != widths_.end() && it->second > 0 ? it->second : default_width_;
  return w * width_scale_;
}

std::string Font::text_of(std::uint32_t code) const {
  if (has_to_unicode_) {
    if (auto it = to_unicode_.unicode.find(code); it != to_unicode_.unicode.end()) {
      return it->second;
    }
  }
  if (!composite_ && code < 256) return simple_encoding_[code];
  return {};
}

std::vector<Glyph> Font::decode(std::string_view bytes) const {
  std::vector<Glyph> glyphs;
  std::size_t pos = 0;
  while (pos < bytes.size()) {
    const int len = code_length(bytes, pos);
    const std::size_t n = std::min<std::size_t>(static_cast<std::size_t>(len), bytes.size() - pos);
    const std::uint32_t code = code_value(bytes.substr(pos, n));
    Glyph g;
    g.text = text_of(code);
    g.width = width_of(code);
    g.is_space = n == 1 && code == 32;
    glyphs.push_back(std::move(g));
    pos += n;
  }
  return glyphs;
}

}  // namespace papersum::pdf
