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

#include "papersum/render.h"

#include <algorithm>
#include <set>

#include <fmt/format.h>

#include "papersum/canonical_json.h"
#include "papersum/errors.h"

namespace papersum {
namespace {

constexpr std::string_view kStyle =
    "body{font-family:Georgia,serif;margin:0;background:#f4f4f0;color:#222}"
    ".summary{max-width:46em;margin:1.5em auto;padding:1.5em 2em;"
    "background:#fff;border:1px solid #ccc}"
    "h1{font-size:1.6em;margin:0 0 .3em}"
    ".authors{font-style:italic;margin:0 0 1em}"
    ".missing{color:#a33}"
    "figure{margin:1em 0;text-align:center}"
    "figure img{max-width:100%;border:1px solid #ddd}"
    ".placeholder{border:1px dashed #999;padding:2em 1em;color:#666}"
    "figcaption{font-size:.9em;margin-top:.5em}"
    "ul{padding-left:1.2em}li{margin:.4em 0}"
    "footer{font-size:.75em;color:#666;border-top:1px solid #ddd;"
    "margin-top:1.5em;padding-top:.5em}"
    "dl{display:grid;grid-template-columns:auto 1fr;gap:0 1em;margin:0}"
    "dd{margin:0}";

Json rect_json(const Rect& r) {
  return {{"x0", r.x0}, {"y0", r.y0}, {"x1", r.x1}, {"y1", r.y1}};
}

Json optional_string(const std::optional<std::string>& s) {
  return s ? Json(*s) : Json(nullptr);
}

std::optional<std::string> read_optional_string(const Json& obj,
                                                const char* key) {
  const Json& v = require_field(obj, key, "");
  if (v.is_null()) return std::nullopt;
  if (!v.is_string()) throw SchemaError(key, "expected a string or null");
  return v.get<std::string>();
}

void field_line(std::string& out, std::string_view tag, std::string_view cls,
                const std::optional<std::string>& value) {
  if (value && !value->empty()) {
    out += fmt::format("<{0} class=\"{1}\">{2}</{0}>\n", tag, cls,
                       html_escape(*value));
  } else {
    out += fmt::format("<{0} class=\"{1} missing\">{2}</{0}>\n", tag, cls,
                       kNotDetected);
  }
}

std::string format_number(double v) {
  std::string s = fmt::format("{:.6f}", v);
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return s == "-0" ? "0" : s;
}

std::string url_encode_segment(std::string_view s) {
  std::string out;
  for (unsigned char c : s) {
    if ((c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
        (c >= '0' && c <= '9') || c == '-' || c == '_' || c == '.' ||
        c == '~') {
      out.push_back(static_cast<char>(c));
    } else {
      out += fmt::format("%{:02X}", c);
    }
  }
  return out;
}

}  // namespace

std::string html_escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&#39;"; break;
      default:
        // Control characters are not allowed in HTML text.
        if (static_cast<unsigned char>(c) < 0x20 && c != '\n' && c != '\t') {
          out.push_back(' ');
        } else {
          out.push_back(c);
        }
    }
  }
  return out;
}

std::string summary_to_json(const SummaryPage& page) {
  Json field_boxes = Json::object();
  for (const auto& [field, refs] : page.field_boxes) {
    Json list = Json::array();
    for (const auto& r : refs) list.push_back({r.page, r.order});
    field_boxes[field] = std::move(list);
  }
  Json mif = nullptr;
  if (page.mif) {
    mif = {{"caption_text", page.mif->caption_text},
           {"figure_order", page.mif->figure_order},
           {"page_index", page.mif->page_index},
           {"rect", rect_json(page.mif->rect)},
           {"score", page.mif->score}};
  }
  const Provenance& p = page.provenance;
  const Json root = {
      {"summary_version", kSummaryVersion},
      {"doc_id", page.doc_id},
      {"title", optional_string(page.title)},
      {"authors", optional_string(page.authors)},
      {"abstract", optional_string(page.abstract)},
      {"mif", std::move(mif)},
      {"sentences", page.sentences},
      {"field_boxes", std::move(field_boxes)},
      {"provenance",
       {{"detector", p.detector},
        {"tau", p.tau},
        {"conf_threshold", p.conf_threshold},
        {"caption_max_gap", p.caption_max_gap},
        {"min_freq", p.min_freq},
        {"max_gap", p.max_gap},
        {"num_sentences", p.num_sentences},
        {"stopwords", p.stopwords}}}};
  return write_canonical(root, kSummaryDecimals);
}

SummaryPage summary_from_json(std::string_view json) {
  const Json root = parse_json(json, "summary");
  require_object(root, "");
  if (require_int(root, "summary_version", "") != kSummaryVersion) {
    throw SchemaError("summary_version", "unsupported version");
  }
  SummaryPage page;
  page.doc_id = require_string(root, "doc_id", "");
  page.title = read_optional_string(root, "title");
  page.authors = read_optional_string(root, "authors");
  page.abstract = read_optional_string(root, "abstract");

  const Json& mif = require_field(root, "mif", "");
  if (!mif.is_null()) {
    MifInfo info;
    info.caption_text = require_string(mif, "caption_text", "mif");
    info.figure_order = require_int(mif, "figure_order", "mif");
    info.page_index = require_int(mif, "page_index", "mif");
    info.score = require_int(mif, "score", "mif");
    const Json& r = require_field(mif, "rect", "mif");
    try {
      info.rect = Rect::make(require_number(r, "x0", "mif.rect"),
                             require_number(r, "y0", "mif.rect"),
                             require_number(r, "x1", "mif.rect"),
                             require_number(r, "y1", "mif.rect"),
                             info.page_index);
    } catch (const GeometryError& e) {
      throw SchemaError("mif.rect", e.what());
    }
    page.mif = std::move(info);
  }

  const Json& sentences = require_array(root, "sentences", "");
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    if (!sentences[i].is_string()) {
      throw SchemaError(fmt::format("sentences[{}]", i), "expected a string");
    }
    page.sentences.push_back(sentences[i].get<std::string>());
  }

  const Json& boxes = require_field(root, "field_boxes", "");
  require_object(boxes, "field_boxes");
  for (auto it = boxes.begin(); it != boxes.end(); ++it) {
    const std::string path = "field_boxes." + it.key();
    if (!it->is_array()) throw SchemaError(path, "expected an array");
    std::vector<BoxRef> refs;
    for (const auto& ref : *it) {
      if (!ref.is_array() || ref.size() != 2 || !ref[0].is_number_integer() ||
          !ref[1].is_number_integer()) {
        throw SchemaError(path, "expected [page, order] pairs");
      }
      refs.push_back(BoxRef{ref[0].get<int>(), ref[1].get<int>()});
    }
    page.field_boxes[it.key()] = std::move(refs);
  }

  const Json& prov = require_field(root, "provenance", "");
  Provenance& p = page.provenance;
  p.detector = require_string(prov, "detector", "provenance");
  p.tau = require_number(prov, "tau", "provenance");
  p.conf_threshold = require_number(prov, "conf_threshold", "provenance");
  p.caption_max_gap = require_number(prov, "caption_max_gap", "provenance");
  p.min_freq = require_int(prov, "min_freq", "provenance");
  p.max_gap = require_int(prov, "max_gap", "provenance");
  p.num_sentences = require_int(prov, "num_sentences", "provenance");
  p.stopwords = require_string(prov, "stopwords", "provenance");
  return page;
}

RenderedSummary render_summary(const SummaryPage& page, const DocumentIR& ir,
                               ImageProvider* assets) {
  if (page.mif && (page.mif->page_index < 0 ||
                   page.mif->page_index >= static_cast<int>(ir.pages.size()))) {
    throw InvalidArgument(fmt::format("figure page {} not in document {}",
                                      page.mif->page_index, ir.doc_id));
  }
  for (const auto& s : page.sentences) {
    if (s.empty()) throw InvalidArgument("empty summary sentence");
  }

  std::string html;
  html += "<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n";
  html += "<meta charset=\"utf-8\" />\n";
  html += fmt::format("<title>{}</title>\n",
                      html_escape(page.title.value_or(page.doc_id)));
  html += fmt::format("<style>{}</style>\n", kStyle);
  html += "</head>\n<body>\n";
  html += fmt::format("<article class=\"summary\" id=\"{}\">\n",
                      html_escape(page.doc_id));
  field_line(html, "h1", "title", page.title);
  field_line(html, "p", "authors", page.authors);

  if (page.mif) {
    const MifInfo& mif = *page.mif;
    html += "<figure class=\"mif\">\n";
    std::optional<std::string> uri;
    if (assets) uri = assets->crop(ir, mif.page_index, mif.rect);
    if (uri && uri->starts_with("data:")) {
      html += fmt::format("<img src=\"{}\" alt=\"Figure from page {}\" />\n",
                          html_escape(*uri), mif.page_index + 1);
    } else {
      html += fmt::format(
          "<div class=\"placeholder\">Figure on page {} at ({}, {}, {}, {})"
          "</div>\n",
          mif.page_index + 1, format_number(mif.rect.x0),
          format_number(mif.rect.y0), format_number(mif.rect.x1),
          format_number(mif.rect.y1));
    }
    if (!mif.caption_text.empty()) {
      html += fmt::format("<figcaption>{}</figcaption>\n",
                          html_escape(mif.caption_text));
    }
    html += "</figure>\n";
  } else {
    html += "<div class=\"placeholder mif-missing\">No figure detected</div>\n";
  }

  html += "<section class=\"sentences\">\n<h2>Summary</h2>\n";
  if (page.sentences.empty()) {
    html += "<p class=\"missing\">No summary sentences</p>\n";
  } else {
    html += "<ul>\n";
    for (const auto& s : page.sentences) {
      html += fmt::format("<li>{}</li>\n", html_escape(s));
    }
    html += "</ul>\n";
  }
  html += "</section>\n";

  const Provenance& p = page.provenance;
  html += "<footer class=\"provenance\">\n<dl>\n";
  const std::pair<std::string_view, std::string> rows[] = {
      {"document", page.doc_id},
      {"detector", p.detector},
      {"tau", format_number(p.tau)},
      {"confidence threshold", format_number(p.conf_threshold)},
      {"caption max gap", format_number(p.caption_max_gap)},
      {"min frequency", std::to_string(p.min_freq)},
      {"max gap", std::to_string(p.max_gap)},
      {"sentences", std::to_string(p.num_sentences)},
      {"stopwords", p.stopwords},
  };
  for (const auto& [k, v] : rows) {
    html += fmt::format("<dt>{}</dt><dd>{}</dd>\n", k, html_escape(v));
  }
  html += "</dl>\n</footer>\n</article>\n</body>\n</html>\n";
  return RenderedSummary{std::move(html), summary_to_json(page)};
}

std::string render_index(std::span<const SummaryPage> pages) {
  std::vector<const SummaryPage*> sorted;
  for (const auto& p : pages) sorted.push_back(&p);
  std::sort(sorted.begin(), sorted.end(),
            [](const SummaryPage* a, const SummaryPage* b) {
              return a->doc_id < b->doc_id;
            });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i]->doc_id == sorted[i - 1]->doc_id) {
      throw InvalidArgument("duplicate doc_id \"" + sorted[i]->doc_id + "\"");
    }
  }
  std::string html;
  html += "<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n";
  html += "<meta charset=\"utf-8\" />\n<title>Paper summaries</title>\n";
  html += fmt::format("<style>{}</style>\n", kStyle);
  html += "</head>\n<body>\n<main class=\"summary\">\n";
  html += fmt::format("<h1>Paper summaries ({})</h1>\n", sorted.size());
  html += "<ol class=\"index\">\n";
  for (const SummaryPage* p : sorted) {
    const std::string label = p->title.value_or(p->doc_id);
    html += fmt::format("<li><a href=\"{}/summary.html\">{}</a> <code>{}</code>"
                        "</li>\n",
                        html_escape(url_encode_segment(p->doc_id)),
                        html_escape(label), html_escape(p->doc_id));
  }
  html += "</ol>\n</main>\n</body>\n</html>\n";
  return html;
}

}  // namespace papersum
