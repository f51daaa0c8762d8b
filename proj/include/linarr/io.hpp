#pragma once

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "linarr/arrangement.hpp"
#include "linarr/error.hpp"
#include "linarr/geometry.hpp"
#include "linarr/rational.hpp"

namespace linarr {

// ---------------------------------------------------------------------------
// Arrangement files
//
//   # comment
//   arr v1 n=3
//   1 1 -1 -1
//   2 1 0 2
//   3 1 1 4
//
// Each record is "<id> <a> <b> <c>" for the line a*x + b*y = c, with
// integers or "p/q" rationals. Ids must be 1..n and agree with angle order.
// ---------------------------------------------------------------------------

inline Arrangement parse_arr(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  int expected = -1;
  std::map<int, Line> by_id;
  auto fail = [&](const std::string& why) { throw Error("bad-file", "line " + std::to_string(line_no) + ": " + why); };
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    auto first = raw.find_first_not_of(" \t");
    if (first == std::string::npos || raw[first] == '#') continue;
    std::istringstream fields(raw);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (expected < 0) {
      if (tok.size() != 3 || tok[0] != "arr" || tok[1] != "v1" || tok[2].rfind("n=", 0) != 0)
        fail("expected header 'arr v1 n=<N>'");
      std::string count = tok[2].substr(2);
      if (count.empty() || count.size() > 6 || !std::all_of(count.begin(), count.end(), ::isdigit))
        fail("bad line count");
      expected = std::stoi(count);
      continue;
    }
    if (tok.size() != 4) fail("expected '<id> <a> <b> <c>'");
    if (tok[0].size() > 6 || !std::all_of(tok[0].begin(), tok[0].end(), ::isdigit)) fail("bad id " + tok[0]);
    int id = std::stoi(tok[0]);
    if (id < 1 || id > expected) fail("id " + tok[0] + " outside 1.." + std::to_string(expected));
    if (by_id.count(id)) fail("duplicate id " + tok[0]);
    try {
      by_id.emplace(id, Line(parse_rat(tok[1]), parse_rat(tok[2]), parse_rat(tok[3])));
    } catch (const Error& e) {
      if (e.code() == "bad-rational") fail(e.what());
      throw;
    }
  }
  if (expected < 0) throw Error("bad-file", "missing header");
  if (static_cast<int>(by_id.size()) != expected)
    throw Error("bad-file", "expected " + std::to_string(expected) + " records, found " + std::to_string(by_id.size()));

  std::vector<Line> lines;
  for (auto& [id, l] : by_id) lines.push_back(l);
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j)
      if (parallel(lines[i], lines[j]))
        throw Error("parallel-lines", "lines " + std::to_string(i + 1) + " and " + std::to_string(j + 1));
  bool sorted = true;
  for (std::size_t i = 1; i < lines.size(); ++i) sorted = sorted && cmp_angle(lines[i - 1], lines[i]) < 0;
  if (!sorted) {
    std::vector<std::size_t> idx(lines.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return cmp_angle(lines[x], lines[y]) < 0; });
    std::string hint;
    for (std::size_t rank = 0; rank < idx.size(); ++rank)
      if (idx[rank] != rank) hint += " " + std::to_string(idx[rank] + 1) + "->" + std::to_string(rank + 1);
    throw Error("id-order-mismatch", "ids must follow angle order; suggested relabeling:" + hint);
  }
  return Arrangement::build(std::move(lines));
}

inline std::string format_arr(const Arrangement& arr) {
  std::string out = "arr v1 n=" + std::to_string(arr.size()) + "\n";
  for (LineId id = 1; id <= arr.size(); ++id) {
    const Line& l = arr.line(id);
    out += std::to_string(id) + " " + format_rat(l.a()) + " " + format_rat(l.b()) + " " + format_rat(l.c()) + "\n";
  }
  return out;
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("io-error", "cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error("io-error", "cannot write " + path);
  f << text;
  if (!f) throw Error("io-error", "write failed for " + path);
}

inline Arrangement load_arr(const std::string& path) { return parse_arr(read_text_file(path)); }
inline void save_arr(const std::string& path, const Arrangement& arr) { write_text_file(path, format_arr(arr)); }

// ---------------------------------------------------------------------------
// SVG rendering
// ---------------------------------------------------------------------------

struct RenderSpec {
  /// Added around the vertex bounding box, in arrangement units.
  Rat padding = 1;
  bool labels = true;
  bool shade_triangles = true;
  /// Output width in pixels; height follows the aspect ratio.
  int width_px = 800;
};

namespace detail {

inline std::string fmt_px(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s(buf);
  return s == "-0.000" ? "0.000" : s;
}

// Part of the line inside the box [x0, x1] x [y0, y1], as its two extreme
// points along the line's direction.
inline std::optional<std::pair<Point, Point>> clip(const Line& l, const Rat& x0, const Rat& x1, const Rat& y0,
                                                   const Rat& y1) {
  std::vector<Point> hits;
  auto inside = [&](const Point& p) { return p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1; };
  for (const Rat& y : {y0, y1}) {
    Point p{(l.c() - l.b() * y) / l.a(), y};
    if (inside(p)) hits.push_back(p);
  }
  if (l.b() != 0) {
    for (const Rat& x : {x0, x1}) {
      Point p{x, (l.c() - l.a() * x) / l.b()};
      if (inside(p)) hits.push_back(p);
    }
  }
  if (hits.size() < 2) return std::nullopt;
  auto key = [&](const Point& p) { return parameter_along(l, p); };
  auto [lo, hi] = std::minmax_element(hits.begin(), hits.end(), [&](const Point& p, const Point& q) { return key(p) < key(q); });
  return std::pair{*lo, *hi};
}

}  // namespace detail

/// Deterministic SVG: one clipped segment per line, labelled by id at its
/// upper end; optionally the given triangles shaded.
inline std::string render_svg(const Arrangement& arr, const RenderSpec& spec, const TriangleSet& shaded = {}) {
  if (spec.padding < 0) throw Error("bad-render-spec", "padding must be >= 0");
  const int n = arr.size();
  Rat x0 = arr.vertex(1, 2).x, x1 = x0, y0 = arr.vertex(1, 2).y, y1 = y0;
  for (LineId i = 1; i <= n; ++i)
    for (LineId j = i + 1; j <= n; ++j) {
      const Point& v = arr.vertex(i, j);
      x0 = std::min(x0, v.x);
      x1 = std::max(x1, v.x);
      y0 = std::min(y0, v.y);
      y1 = std::max(y1, v.y);
    }
  x0 -= spec.padding;
  x1 += spec.padding;
  y0 -= spec.padding;
  y1 += spec.padding;
  if (x1 == x0) x1 += 1;
  if (y1 == y0) y1 += 1;

  const double w = spec.width_px;
  const double scale = w / Rat(x1 - x0).get_d();
  const double h = Rat(y1 - y0).get_d() * scale;
  auto px = [&](const Point& p) { return std::pair{Rat(p.x - x0).get_d() * scale, Rat(y1 - p.y).get_d() * scale}; };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + detail::fmt_px(w) + "\" height=\"" +
         detail::fmt_px(h) + "\" viewBox=\"0 0 " + detail::fmt_px(w) + " " + detail::fmt_px(h) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (spec.shade_triangles) {
    for (const Triple& t : shaded) {
      out += "<polygon class=\"triangle\" fill=\"#f2b134\" fill-opacity=\"0.45\" points=\"";
      const Point* corners[3] = {&arr.vertex(t[0], t[1]), &arr.vertex(t[1], t[2]), &arr.vertex(t[0], t[2])};
      for (int k = 0; k < 3; ++k) {
        auto [x, y] = px(*corners[k]);
        out += (k ? " " : "") + detail::fmt_px(x) + "," + detail::fmt_px(y);
      }
      out += "\"><title>" + std::to_string(t[0]) + " " + std::to_string(t[1]) + " " + std::to_string(t[2]) +
             "</title></polygon>\n";
    }
  }
  for (LineId id = 1; id <= n; ++id) {
    auto seg = detail::clip(arr.line(id), x0, x1, y0, y1);
    if (!seg) continue;
    auto [ax, ay] = px(seg->first);
    auto [bx, by] = px(seg->second);
    out += "<line id=\"L" + std::to_string(id) + "\" x1=\"" + detail::fmt_px(ax) + "\" y1=\"" + detail::fmt_px(ay) +
           "\" x2=\"" + detail::fmt_px(bx) + "\" y2=\"" + detail::fmt_px(by) +
           "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    if (spec.labels)
      out += "<text x=\"" + detail::fmt_px(bx + 4) + "\" y=\"" + detail::fmt_px(by + 14) +
             "\" font-family=\"sans-serif\" font-size=\"14\">" + std::to_string(id) + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace linarr
