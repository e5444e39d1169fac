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

#include "pdf/content.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include <fmt/format.h>

#include "papersum/errors.h"
#include "pdf/font.h"

namespace papersum::pdf {
namespace {

constexpr int kMaxFormDepth = 8;

struct Matrix {
  double a = 1, b = 0, c = 0, d = 1, e = 0, f = 0;

  // this applied first, then `m`.
  Matrix then(const Matrix& m) const {
    return Matrix{a * m.a + b * m.c,       a * m.b + b * m.d,
                  c * m.a + d * m.c,       c * m.b + d * m.d,
                  e * m.a + f * m.c + m.e, e * m.b + f * m.d + m.f};
  }
  void apply(double x, double y, double& ox, double& oy) const {
    ox = a * x + c * y + e;
    oy = b * x + d * y + f;
  }
};

Matrix translate(double tx, double ty) { return Matrix{1, 0, 0, 1, tx, ty}; }

struct GraphicsState {
  Matrix ctm;
  const Font* font = nullptr;
  double font_size = 0;
  double char_spacing = 0;
  double word_spacing = 0;
  double horiz_scale = 1;
  double leading = 0;
  double rise = 0;
};

class BoundsAccumulator {
 public:
  void add(double x, double y) {
    x0_ = std::min(x0_, x);
    y0_ = std::min(y0_, y);
    x1_ = std::max(x1_, x);
    y1_ = std::max(y1_, y);
    any_ = true;
  }
  bool any() const { return any_; }
  Box box() const { return Box{x0_, y0_, x1_, y1_}; }
  void reset() { *this = BoundsAccumulator(); }

 private:
  double x0_ = std::numeric_limits<double>::infinity();
  double y0_ = std::numeric_limits<double>::infinity();
  double x1_ = -std::numeric_limits<double>::infinity();
  double y1_ = -std::numeric_limits<double>::infinity();
  bool any_ = false;
};

class Interpreter {
 public:
  Interpreter(const Document& doc, const PageSource& page)
      : doc_(doc), page_(page) {}

  PageContent run() {
    GraphicsState gs;
    run_stream(page_.content, page_.resources.get(), gs, 0);
    return std::move(out_);
  }

 private:
  // Page space: shift by the visible box origin and flip y.
  void to_page(double x, double y, double& px, double& py) const {
    px = x - page_.llx;
    py = page_.ury - y;
  }

  Box transformed_box(const Matrix& m, double x0, double y0, double x1,
                      double y1) const {
    BoundsAccumulator acc;
    const double xs[2] = {x0, x1};
    const double ys[2] = {y0, y1};
    for (double x : xs) {
      for (double y : ys) {
        double ux = 0, uy = 0, px = 0, py = 0;
        m.apply(x, y, ux, uy);
        to_page(ux, uy, px, py);
        acc.add(px, py);
      }
    }
    return acc.box();
  }

  const Font* font_for(const Dict* resources, const std::string& name) {
    const Dict* fonts =
        resources ? doc_.resolve_dict(lookup(*resources, "Font")) : nullptr;
    const Dict* font = fonts ? doc_.resolve_dict(lookup(*fonts, name)) : nullptr;
    if (font == nullptr) {
      out_.warnings.push_back(fmt::format("font resource {} not found", name));
      return &fallback_font_;
    }
    auto it = fonts_.find(font);
    if (it == fonts_.end()) {
      it = fonts_.emplace(font, Font(doc_, *font)).first;
    }
    return &it->second;
  }

  void show_string(const std::string& bytes, GraphicsState& gs) {
    const Font* font = gs.font ? gs.font : &fallback_font_;
    for (const Glyph& g : font->decode(bytes)) {
      const Matrix trm =
          Matrix{gs.font_size * gs.horiz_scale, 0, 0, gs.font_size, 0, gs.rise}
              .then(text_matrix_)
              .then(gs.ctm);
      PlacedGlyph placed;
      placed.text = g.text;
      placed.is_space = g.is_space || g.text == " ";
      placed.bbox = transformed_box(trm, 0, font->descent(), g.width,
                                    font->ascent());
      double bx = 0, by = 0, px = 0, py = 0;
      trm.apply(0, 0, bx, by);
      to_page(bx, by, px, py);
      placed.baseline = py;
      placed.size = std::hypot(trm.c, trm.d);
      if (std::isfinite(placed.bbox.x0) && std::isfinite(placed.bbox.y0) &&
          std::isfinite(placed.bbox.x1) && std::isfinite(placed.bbox.y1)) {
        out_.glyphs.push_back(std::move(placed));
      }
      const double tx = (g.width * gs.font_size + gs.char_spacing +
                         (g.is_space ? gs.word_spacing : 0.0)) *
                        gs.horiz_scale;
      text_matrix_ = translate(tx, 0).then(text_matrix_);
    }
  }

  void next_line(double tx, double ty) {
    line_matrix_ = translate(tx, ty).then(line_matrix_);
    text_matrix_ = line_matrix_;
  }

  void paint_path() {
    if (path_.any()) out_.paths.push_back(path_.box());
    path_.reset();
  }

  void add_path_point(const GraphicsState& gs, double x, double y) {
    double ux = 0, uy = 0, px = 0, py = 0;
    gs.ctm.apply(x, y, ux, uy);
    to_page(ux, uy, px, py);
    path_.add(px, py);
  }

  void skip_inline_image(Lexer& lex) {
    // Dictionary entries up to ID, then raw data up to an EI delimited by
    // whitespace.
    while (auto tok = lex.next(false)) {
      if (const std::string* kw = tok->keyword(); kw && *kw == "ID") break;
    }
    std::string_view data = lex.data();
    std::size_t pos = lex.pos() + 1;
    while (pos + 1 < data.size()) {
      if (data[pos] == 'E' && data[pos + 1] == 'I' &&
          Lexer::is_whitespace(data[pos - 1]) &&
          (pos + 2 >= data.size() || Lexer::is_whitespace(data[pos + 2]))) {
        lex.set_pos(pos + 2);
        return;
      }
      ++pos;
    }
    lex.set_pos(data.size());
  }

  void do_xobject(const Dict* resources, const std::string& name,
                  GraphicsState& gs, int depth) {
    const Dict* xobjects =
        resources ? doc_.resolve_dict(lookup(*resources, "XObject")) : nullptr;
    if (xobjects == nullptr) return;
    const Object* entry = lookup(*xobjects, name);
    if (entry == nullptr) return;
    const Object& xo = doc_.resolve(*entry);
    const Stream* stream = xo.stream();
    if (stream == nullptr) return;
    const std::string* subtype = doc_.resolve_name(lookup(*stream->dict, "Subtype"));
    if (subtype == nullptr) return;
    if (*subtype == "Image") {
      out_.images.push_back(transformed_box(gs.ctm, 0, 0, 1, 1));
      return;
    }
    if (*subtype != "Form" || depth >= kMaxFormDepth) return;
    GraphicsState inner = gs;
    if (const Array* m = doc_.resolve_array(lookup(*stream->dict, "Matrix"));
        m && m->size() == 6) {
      double v[6];
      for (std::size_t i = 0; i < 6; ++i) {
        v[i] = doc_.resolve((*m)[i]).number().value_or(i == 0 || i == 3 ? 1 : 0);
      }
      inner.ctm = Matrix{v[0], v[1], v[2], v[3], v[4], v[5]}.then(gs.ctm);
    }
    const Dict* form_resources = doc_.resolve_dict(lookup(*stream->dict, "Resources"));
    std::string content;
    try {
      content = doc_.decode(*stream);
    } catch (const IngestError& e) {
      out_.warnings.push_back(e.what());
      return;
    }
    const Matrix saved_tm = text_matrix_;
    const Matrix saved_lm = line_matrix_;
    run_stream(content, form_resources ? form_resources : resources, inner,
               depth + 1);
    text_matrix_ = saved_tm;
    line_matrix_ = saved_lm;
  }

  void run_stream(std::string_view content, const Dict* resources,
                  GraphicsState gs, int depth) {
    std::vector<GraphicsState> stack;
    std::vector<Object> ops;
    Lexer lex(content);
    auto num = [&](std::size_t i) -> double {
      if (i >= ops.size()) return 0.0;
      return ops[i].number().value_or(0.0);
    };
    auto from_end = [&](std::size_t back) -> double {
      if (back > ops.size()) return 0.0;
      return num(ops.size() - back);
    };
    try {
      while (auto tok = lex.next(false)) {
        const std::string* kw = tok->keyword();
        if (kw == nullptr) {
          ops.push_back(std::move(*tok));
          continue;
        }
        const std::string& op = *kw;
        if (op == "q") {
          stack.push_back(gs);
        } else if (op == "Q") {
          if (!stack.empty()) {
            gs = stack.back();
            stack.pop_back();
          }
        } else if (op == "cm" && ops.size() >= 6) {
          gs.ctm = Matrix{from_end(6), from_end(5), from_end(4),
                          from_end(3), from_end(2), from_end(1)}
                       .then(gs.ctm);
        } else if (op == "BT") {
          text_matrix_ = Matrix{};
          line_matrix_ = Matrix{};
        } else if (op == "Tf" && ops.size() >= 2) {
          if (const std::string* name = ops[ops.size() - 2].name()) {
            gs.font = font_for(resources, *name);
          }
          gs.font_size = from_end(1);
        } else if (op == "Tc") {
          gs.char_spacing = from_end(1);
        } else if (op == "Tw") {
          gs.word_spacing = from_end(1);
        } else if (op == "Tz") {
          gs.horiz_scale = from_end(1) / 100.0;
        } else if (op == "TL") {
          gs.leading = from_end(1);
        } else if (op == "Ts") {
          gs.rise = from_end(1);
        } else if (op == "Td") {
          next_line(from_end(2), from_end(1));
        } else if (op == "TD") {
          gs.leading = -from_end(1);
          next_line(from_end(2), from_end(1));
        } else if (op == "Tm" && ops.size() >= 6) {
          line_matrix_ = Matrix{from_end(6), from_end(5), from_end(4),
                                from_end(3), from_end(2), from_end(1)};
          text_matrix_ = line_matrix_;
        } else if (op == "T*") {
          next_line(0, -gs.leading);
        } else if (op == "Tj" || op == "'" || op == "\"") {
          if (op == "\"" && ops.size() >= 3) {
            gs.word_spacing = num(ops.size() - 3);
            gs.char_spacing = num(ops.size() - 2);
          }
          if (op != "Tj") next_line(0, -gs.leading);
          if (!ops.empty()) {
            if (const std::string* s = ops.back().string_bytes()) {
              show_string(*s, gs);
            }
          }
        } else if (op == "TJ") {
          if (!ops.empty()) {
            if (const Array* arr = ops.back().array()) {
              for (const Object& item : *arr) {
                if (const std::string* s = item.string_bytes()) {
                  show_string(*s, gs);
                } else if (auto adj = item.number()) {
                  const double tx =
                      -*adj / 1000.0 * gs.font_size * gs.horiz_scale;
                  text_matrix_ = translate(tx, 0).then(text_matrix_);
                }
              }
            }
          }
        } else if (op == "Do") {
          if (!ops.empty()) {
            if (const std::string* name = ops.back().name()) {
              do_xobject(resources, *name, gs, depth);
            }
          }
        } else if (op == "BI") {
          skip_inline_image(lex);
          out_.images.push_back(transformed_box(gs.ctm, 0, 0, 1, 1));
        } else if (op == "m" || op == "l") {
          add_path_point(gs, from_end(2), from_end(1));
        } else if (op == "c") {
          for (std::size_t k = 6; k >= 2; k -= 2) {
            add_path_point(gs, from_end(k), from_end(k - 1));
          }
        } else if (op == "v" || op == "y") {
          add_path_point(gs, from_end(4), from_end(3));
          add_path_point(gs, from_end(2), from_end(1));
        } else if (op == "re") {
          const double x = from_end(4), y = from_end(3);
          const double w = from_end(2), h = from_end(1);
          add_path_point(gs, x, y);
          add_path_point(gs, x + w, y);
          add_path_point(gs, x, y + h);
          add_path_point(gs, x + w, y + h);
        } else if (op == "S" || op == "s" || op == "f" || op == "F" ||
                   op == "f*" || op == "B" || op == "B*" || op == "b" ||
                   op == "b*") {
          paint_path();
        } else if (op == "n") {
          path_.reset();
        }
        ops.clear();
      }
    } catch (const IngestError& e) {
      out_.warnings.push_back(
          fmt::format("content stream truncated: {}", e.what()));
    }
  }

  const Document& doc_;
  const PageSource& page_;
  PageContent out_;
  Matrix text_matrix_;
  Matrix line_matrix_;
  BoundsAccumulator path_;
  Font fallback_font_;
  std::map<const Dict*, Font> fonts_;
};

}  // namespace

PageContent interpret_page(const Document& doc, const PageSource& page) {
  return Interpreter(doc, page).run();
}

}  // namespace papersum::pdf
