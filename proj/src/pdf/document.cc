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

#include "pdf/document.h"

#include <zlib.h>

#include <algorithm>
#include <cctype>
#include <set>

#include <fmt/format.h>

#include "papersum/errors.h"

namespace papersum::pdf {
namespace {

constexpr int kMaxRefDepth = 32;
constexpr int kMaxPageTreeDepth = 64;

const Object& null_object() {
  static const Object kNull{Null{}};
  return kNull;
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

std::string inflate_with(std::string_view data, int window_bits, bool& ok) {
  z_stream zs{};
  ok = false;
  if (inflateInit2(&zs, window_bits) != Z_OK) return {};
  zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(data.data()));
  zs.avail_in = static_cast<uInt>(data.size());
  std::string out;
  char buf[1 << 15];
  int rc = Z_OK;
  while (rc == Z_OK) {
    zs.next_out = reinterpret_cast<Bytef*>(buf);
    zs.avail_out = sizeof(buf);
    rc = ::inflate(&zs, Z_NO_FLUSH);
    out.append(buf, sizeof(buf) - zs.avail_out);
    if (rc == Z_BUF_ERROR && zs.avail_in == 0) break;
  }
  inflateEnd(&zs);
  // Truncated streams are common in the wild; keep whatever decoded.
  ok = rc == Z_STREAM_END || !out.empty();
  return out;
}

std::string ascii_hex_decode(std::string_view data) {
  std::string out;
  int pending = -1;
  for (char c : data) {
    if (c == '>') break;
    int v = -1;
    if (c >= '0' && c <= '9') v = c - '0';
    else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
    if (v < 0) continue;
    if (pending < 0) {
      pending = v;
    } else {
      out.push_back(static_cast<char>((pending << 4) | v));
      pending = -1;
    }
  }
  if (pending >= 0) out.push_back(static_cast<char>(pending << 4));
  return out;
}

std::string ascii85_decode(std::string_view data) {
  std::string out;
  std::uint32_t tuple = 0;
  int count = 0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    const char c = data[i];
    if (c == '~') break;
    if (Lexer::is_whitespace(c)) continue;
    if (c == 'z' && count == 0) {
      out.append(4, '\0');
      continue;
    }
    if (c < '!' || c > 'u') throw IngestError("bad ASCII85 data");
    tuple = tuple * 85 + static_cast<std::uint32_t>(c - '!');
    if (++count == 5) {
      for (int s = 3; s >= 0; --s) {
        out.push_back(static_cast<char>((tuple >> (8 * s)) & 0xFF));
      }
      tuple = 0;
      count = 0;
    }
  }
  if (count > 1) {
    for (int k = count; k < 5; ++k) tuple = tuple * 85 + 84;
    for (int s = 3; s >= 5 - count; --s) {
      out.push_back(static_cast<char>((tuple >> (8 * s)) & 0xFF));
    }
  }
  return out;
}

}  // namespace

std::string inflate_bytes(std::string_view data) {
  bool ok = false;
  std::string out = inflate_with(data, 15 + 32, ok);
  if (ok) return out;
  out = inflate_with(data, -15, ok);
  if (ok) return out;
  throw IngestError("corrupt Flate stream");
}

Document::Document(std::string bytes) : bytes_(std::move(bytes)) {
  const std::size_t header = bytes_.find("%PDF-");
  if (header == std::string::npos || header > 1024) {
    throw IngestError("not a PDF file (missing %PDF- header)");
  }
  scan_objects();
  if (offsets_.empty()) throw IngestError("no PDF objects found");
  index_object_streams();

  const Dict* trailer = find_trailer();
  if (trailer != nullptr && lookup(*trailer, "Encrypt") != nullptr &&
      !resolve(*lookup(*trailer, "Encrypt")).is_null()) {
    throw IngestError("encrypted PDF files are not supported");
  }

  const Dict* catalog =
      trailer ? resolve_dict(lookup(*trailer, "Root")) : nullptr;
  if (catalog == nullptr) {
    for (const auto& [num, off] : offsets_) {
      const Dict* d = get(num).dict();
      const std::string* type = d ? resolve_name(lookup(*d, "Type")) : nullptr;
      if (type && *type == "Catalog") catalog = d;
    }
  }
  if (catalog != nullptr) {
    if (const Object* root_pages = lookup(*catalog, "Pages")) {
      collect_pages(*root_pages, nullptr, nullptr, nullptr, 0);
    }
  }
  if (pages_.empty()) {
    // Damaged page tree: take every /Type /Page object in number order.
    for (const auto& [num, off] : offsets_) {
      const Object& obj = get(num);
      const Dict* d = obj.dict();
      const std::string* type = d ? resolve_name(lookup(*d, "Type")) : nullptr;
      if (type && *type == "Page") {
        collect_pages(obj, nullptr, nullptr, nullptr, kMaxPageTreeDepth - 1);
      }
    }
  }
  if (pages_.empty()) throw IngestError("PDF has no pages");
}

void Document::scan_objects() {
  std::size_t pos = 0;
  while ((pos = bytes_.find("obj", pos)) != std::string::npos) {
    const std::size_t body = pos + 3;
    const bool end_ok = body >= bytes_.size() ||
                        Lexer::is_whitespace(bytes_[body]) ||
                        Lexer::is_delimiter(bytes_[body]);
    std::size_t p = pos;
    pos = body;
    if (!end_ok || p == 0 || !Lexer::is_whitespace(bytes_[p - 1])) continue;
    // Walk back over "<num> <gen> ".
    while (p > 0 && Lexer::is_whitespace(bytes_[p - 1])) --p;
    std::size_t gen_end = p;
    while (p > 0 && is_digit(bytes_[p - 1])) --p;
    if (p == gen_end || p == 0 || !Lexer::is_whitespace(bytes_[p - 1])) {
      continue;
    }
    while (p > 0 && Lexer::is_whitespace(bytes_[p - 1])) --p;
    const std::size_t num_end = p;
    while (p > 0 && is_digit(bytes_[p - 1])) --p;
    if (p == num_end) continue;
    if (p > 0 && !Lexer::is_whitespace(bytes_[p - 1]) &&
        !Lexer::is_delimiter(bytes_[p - 1])) {
      continue;
    }
    const std::string num_str = bytes_.substr(p, num_end - p);
    if (num_str.size() > 9) continue;
    offsets_[std::stoi(num_str)] = body;
  }
}

Object Document::parse_indirect_at(std::size_t offset) const {
  Lexer lex(bytes_, offset);
  auto obj = lex.next(true);
  if (!obj) return Object{Null{}};
  const auto* dict = obj->dict();
  if (dict == nullptr) return *obj;
  lex.skip_whitespace();
  const std::size_t kw = lex.pos();
  if (bytes_.compare(kw, 6, "stream") != 0) return *obj;
  std::size_t start = kw + 6;
  if (start < bytes_.size() && bytes_[start] == '\r') ++start;
  if (start < bytes_.size() && bytes_[start] == '\n') ++start;

  std::size_t end = std::string::npos;
  if (const Object* len_obj = lookup(*dict, "Length")) {
    if (auto len = len_obj->integer(); len && *len >= 0) {
      const std::size_t candidate = start + static_cast<std::size_t>(*len);
      if (candidate <= bytes_.size()) {
        Lexer check(bytes_, candidate);
        check.skip_whitespace();
        if (bytes_.compare(check.pos(), 9, "endstream") == 0) end = candidate;
      }
    }
  }
  if (end == std::string::npos) {
    end = bytes_.find("endstream", start);
    if (end == std::string::npos) end = bytes_.size();
    if (end > start && bytes_[end - 1] == '\n') --end;
    if (end > start && bytes_[end - 1] == '\r') --end;
  }
  Stream s;
  s.dict = std::get<std::shared_ptr<const Dict>>(obj->value);
  s.raw = bytes_.substr(start, end - start);
  return Object{std::move(s)};
}

void Document::index_object_streams() {
  std::vector<int> streams;
  for (const auto& [num, off] : offsets_) {
    const Dict* d = get(num).dict();
    const std::string* type = d ? resolve_name(lookup(*d, "Type")) : nullptr;
    if (type && *type == "ObjStm") streams.push_back(num);
  }
  for (int snum : streams) {
    const Object& obj = get(snum);
    const Stream* s = obj.stream();
    if (s == nullptr) continue;
    std::string data;
    try {
      data = decode(*s);
    } catch (const IngestError&) {
      continue;
    }
    const auto n = resolve_number(lookup(*s->dict, "N"));
    if (!n) continue;
    Lexer lex(data);
    for (int i = 0; i < static_cast<int>(*n); ++i) {
      auto num = lex.next(false);
      auto off = lex.next(false);
      if (!num || !off || !num->integer() || !off->integer()) break;
      const int onum = static_cast<int>(*num->integer());
      if (!offsets_.contains(onum)) packed_[onum] = {snum, i};
    }
  }
}

const Object& Document::get(int num) const {
  if (auto it = cache_.find(num); it != cache_.end()) return *it->second;
  // Insert a placeholder first so reference cycles terminate.
  cache_[num] = std::make_unique<Object>(Object{Null{}});
  Object result{Null{}};
  if (auto it = offsets_.find(num); it != offsets_.end()) {
    try {
      result = parse_indirect_at(it->second);
    } catch (const IngestError&) {
      result = Object{Null{}};
    }
  } else if (auto pit = packed_.find(num); pit != packed_.end()) {
    const auto [snum, index] = pit->second;
    const Stream* s = get(snum).stream();
    if (s != nullptr) {
      try {
        const std::string data = decode(*s);
        const auto first = resolve_number(lookup(*s->dict, "First"));
        Lexer header(data);
        std::int64_t offset = -1;
        for (int i = 0; i <= index; ++i) {
          auto n = header.next(false);
          auto o = header.next(false);
          if (!n || !o) break;
          if (i == index && o->integer()) offset = *o->integer();
        }
        if (first && offset >= 0) {
          // The decoded buffer must outlive the lexer; objects own copies.
          Lexer lex(data, static_cast<std::size_t>(*first + offset));
          if (auto parsed = lex.next(true)) result = std::move(*parsed);
        }
      } catch (const IngestError&) {
        result = Object{Null{}};
      }
    }
  }
  *cache_[num] = std::move(result);
  return *cache_[num];
}

const Object& Document::resolve(const Object& obj) const {
  const Object* cur = &obj;
  for (int depth = 0; depth < kMaxRefDepth; ++depth) {
    const Ref* r = cur->ref();
    if (r == nullptr) return *cur;
    cur = &get(r->num);
  }
  return null_object();
}

const Dict* Document::resolve_dict(const Object* obj) const {
  return obj ? resolve(*obj).dict() : nullptr;
}

const Array* Document::resolve_array(const Object* obj) const {
  return obj ? resolve(*obj).array() : nullptr;
}

std::optional<double> Document::resolve_number(const Object* obj) const {
  if (obj == nullptr) return std::nullopt;
  return resolve(*obj).number();
}

const std::string* Document::resolve_name(const Object* obj) const {
  return obj ? resolve(*obj).name() : nullptr;
}

const Dict* Document::find_trailer() {
  const Dict* found = nullptr;
  std::size_t pos = 0;
  while ((pos = bytes_.find("trailer", pos)) != std::string::npos) {
    Lexer lex(bytes_, pos + 7);
    try {
      auto obj = lex.next(true);
      const Dict* d = obj ? obj->dict() : nullptr;
      // Keep the last trailer that carries /Root; any /Encrypt wins.
      if (d != nullptr && (lookup(*d, "Encrypt") != nullptr ||
                           lookup(*d, "Root") != nullptr)) {
        const bool encrypted = lookup(*d, "Encrypt") != nullptr;
        trailer_holder_ = std::move(*obj);
        found = trailer_holder_.dict();
        if (encrypted) return found;
      }
    } catch (const IngestError&) {
    }
    pos += 7;
  }
  if (found != nullptr) return found;
  // Cross-reference streams carry the trailer keys in their dictionary.
  const Dict* xref = nullptr;
  std::size_t best = 0;
  for (const auto& [num, off] : offsets_) {
    const Dict* d = get(num).dict();
    const std::string* type = d ? resolve_name(lookup(*d, "Type")) : nullptr;
    if (type && *type == "XRef") {
      if (lookup(*d, "Encrypt") != nullptr) return d;
      if (off >= best) {
        best = off;
        xref = d;
      }
    }
  }
  return xref;
}

void Document::collect_pages(const Object& node_ref,
                             std::shared_ptr<const Dict> resources,
                             const Array* media_box, const Array* crop_box,
                             int depth) {
  if (depth >= kMaxPageTreeDepth) return;
  const Object& node = resolve(node_ref);
  const Dict* d = node.dict();
  if (d == nullptr) return;

  if (const Object* r = lookup(*d, "Resources")) {
    const Object& res = resolve(*r);
    if (auto p = std::get_if<std::shared_ptr<const Dict>>(&res.value)) {
      resources = *p;
    }
  }
  if (const Array* mb = resolve_array(lookup(*d, "MediaBox"))) media_box = mb;
  if (const Array* cb = resolve_array(lookup(*d, "CropBox"))) crop_box = cb;

  const std::string* type = resolve_name(lookup(*d, "Type"));
  const Array* kids = resolve_array(lookup(*d, "Kids"));
  if (kids != nullptr && (type == nullptr || *type != "Page")) {
    for (const Object& kid : *kids) {
      collect_pages(kid, resources, media_box, crop_box, depth + 1);
    }
    return;
  }

  PageSource page;
  const Array* box = crop_box ? crop_box : media_box;
  double coords[4] = {0, 0, 612, 792};
  if (box != nullptr && box->size() == 4) {
    for (int i = 0; i < 4; ++i) {
      coords[i] = resolve_number(&(*box)[static_cast<std::size_t>(i)])
                      .value_or(coords[i]);
    }
  }
  page.llx = std::min(coords[0], coords[2]);
  page.urx = std::max(coords[0], coords[2]);
  page.lly = std::min(coords[1], coords[3]);
  page.ury = std::max(coords[1], coords[3]);
  if (page.urx - page.llx <= 0 || page.ury - page.lly <= 0) {
    page.llx = 0;
    page.lly = 0;
    page.urx = 612;
    page.ury = 792;
  }
  page.resources = resources;

  auto append_stream = [&](const Object& o) {
    const Stream* s = resolve(o).stream();
    if (s == nullptr) return;
    page.content += decode(*s);
    page.content += '\n';
  };
  if (const Object* contents = lookup(*d, "Contents")) {
    const Object& c = resolve(*contents);
    if (const Array* arr = c.array()) {
      for (const Object& part : *arr) append_stream(part);
    } else {
      append_stream(c);
    }
  }
  pages_.push_back(std::move(page));
}

std::string Document::decode(const Stream& stream) const {
  std::vector<std::string> filters;
  if (const Object* f = lookup(*stream.dict, "Filter")) {
    const Object& fo = resolve(*f);
    if (const std::string* n = fo.name()) {
      filters.push_back(*n);
    } else if (const Array* arr = fo.array()) {
      for (const Object& item : *arr) {
        if (const std::string* n = resolve(item).name()) filters.push_back(*n);
      }
    }
  }
  std::string data = stream.raw;
  for (const std::string& filter : filters) {
    if (filter == "FlateDecode" || filter == "Fl") {
      data = inflate_bytes(data);
    } else if (filter == "ASCIIHexDecode" || filter == "AHx") {
      data = ascii_hex_decode(data);
    } else if (filter == "ASCII85Decode" || filter == "A85") {
      data = ascii85_decode(data);
    } else {
      throw IngestError(fmt::format("unsupported stream filter {}", filter));
    }
  }
  return data;
}

}  // namespace papersum::pdf
