#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "linarr/arrangement.hpp"
#include "linarr/error.hpp"
#include "linarr/geometry.hpp"
#include "linarr/triangle_set.hpp"

namespace linarr {

/// Anticlockwise boundary order (1 = a_1 a_2 ... a_n) of the convex n-gon of
/// an arrangement with global cyclicity. It is two increasing runs
/// a_1..a_r and a_{r+1}..a_n with 1 < a_{r+1} < a_r; r is the unique descent.
/// Only validate_cycle() creates instances.
class GonalityCycle {
 public:
  int size() const { return static_cast<int>(seq_.size()); }
  const std::vector<LineId>& sequence() const { return seq_; }
  /// 1-based split index.
  int split() const { return r_; }
  /// a_j, 1-based.
  LineId at(int j) const { return seq_.at(j - 1); }

  friend bool operator==(const GonalityCycle&, const GonalityCycle&) = default;

 private:
  friend std::optional<GonalityCycle> validate_cycle(const std::vector<LineId>& seq);
  GonalityCycle(std::vector<LineId> seq, int r) : seq_(std::move(seq)), r_(r) {}

  std::vector<LineId> seq_;
  int r_ = 0;
};

/// Computes r as the first descent and checks the run conditions; nullopt
/// when they fail. Throws "must-start-at-1" or "not-a-permutation".
inline std::optional<GonalityCycle> validate_cycle(const std::vector<LineId>& seq) {
  const int n = static_cast<int>(seq.size());
  if (n == 0 || seq[0] != 1) throw Error("must-start-at-1");
  std::vector<bool> seen(n + 1, false);
  for (LineId a : seq) {
    if (a < 1 || a > n || seen[a]) throw Error("not-a-permutation");
    seen[a] = true;
  }
  int r = 0;
  for (int q = 1; q < n && r == 0; ++q)
    if (seq[q] < seq[q - 1]) r = q;
  if (r < 2 || r > n - 1) return std::nullopt;
  for (int q = r + 1; q < n; ++q)
    if (seq[q] < seq[q - 1]) return std::nullopt;
  if (!(1 < seq[r] && seq[r] < seq[r - 1])) return std::nullopt;
  return GonalityCycle(seq, r);
}

/// "(1 5 2 6 3)".
inline std::string format_cycle(const GonalityCycle& c) {
  std::string out = "(";
  for (int j = 1; j <= c.size(); ++j) {
    if (j > 1) out += ' ';
    out += std::to_string(c.at(j));
  }
  return out + ")";
}

/// Parses the parenthesized form; "bad-cycle" for malformed text or a
/// sequence that is not a valid gonality cycle.
inline GonalityCycle parse_cycle(std::string_view text) {
  std::string s(text);
  auto open = s.find('(');
  auto close = s.rfind(')');
  if (open == std::string::npos || close == std::string::npos || close < open) throw Error("bad-cycle", s);
  for (std::size_t k = 0; k < s.size(); ++k)
    if ((k < open || k > close) && !std::isspace(static_cast<unsigned char>(s[k]))) throw Error("bad-cycle", s);
  std::vector<LineId> seq;
  std::istringstream in(s.substr(open + 1, close - open - 1));
  std::string tok;
  while (in >> tok) {
    if (tok.size() > 9 || !std::all_of(tok.begin(), tok.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
      throw Error("bad-cycle", s);
    seq.push_back(std::stoi(tok));
  }
  auto c = validate_cycle(seq);
  if (!c) throw Error("bad-cycle", s + " violates the two-run condition");
  return *c;
}

/// The n-gon face, if any, read anticlockwise from line 1.
inline std::optional<GonalityCycle> detect_gonality_cycle(const FaceComplex& faces, int n) {
  for (const Face& f : faces) {
    if (static_cast<int>(f.edges()) != n) continue;
    // bounded_faces() already rotates the smallest id, line 1, to the front.
    try {
      return validate_cycle(f.lines);
    } catch (const Error&) {
      return std::nullopt;
    }
  }
  return std::nullopt;
}

inline std::optional<GonalityCycle> detect_gonality_cycle(const Arrangement& arr) {
  if (arr.size() < 3) return std::nullopt;
  return detect_gonality_cycle(bounded_faces(arr), arr.size());
}

/// Triangle list of a cycle: consecutive triples inside each run, plus the
/// four boundary families around the wrap-around and the split.
inline TriangleSet thmA_triangles(const GonalityCycle& c) {
  const int n = c.size();
  const int r = c.split();
  if (n < 4) throw Error("n-too-small", "needs n >= 4");
  auto a = [&](int j) { return c.at(j); };
  TriangleSet out;
  for (int j = 1; j + 2 <= n; ++j)
    if (j + 2 <= r || j >= r + 1) out.insert(make_triple(a(j), a(j + 1), a(j + 2)));
  if (n >= r + 2) out.insert(make_triple(a(1), a(n - 1), a(n)));
  if (a(2) < a(n)) out.insert(make_triple(a(1), a(2), a(n)));
  if (a(r + 1) < a(r - 1)) out.insert(make_triple(a(r + 1), a(r - 1), a(r)));
  if (n >= r + 2 && a(r + 2) < a(r)) out.insert(make_triple(a(r + 1), a(r + 2), a(r)));
  return out;
}

/// Calls `visit` for every valid cycle of size n, ordered by the bitmask of
/// labels 2..n placed in the first run. Returns the number visited.
inline std::uint64_t for_each_cycle(int n, const std::function<void(const GonalityCycle&)>& visit) {
  if (n < 3 || n > 30) throw Error("n-out-of-range", std::to_string(n));
  std::uint64_t count = 0;
  const std::uint64_t subsets = std::uint64_t{1} << (n - 1);
  std::vector<LineId> seq(n);
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    int k = 0;
    seq[k++] = 1;
    for (LineId m = 2; m <= n; ++m)
      if (mask >> (m - 2) & 1) seq[k++] = m;
    for (LineId m = 2; m <= n; ++m)
      if (!(mask >> (m - 2) & 1)) seq[k++] = m;
    if (auto c = validate_cycle(seq)) {
      ++count;
      visit(*c);
    }
  }
  return count;
}

inline std::vector<GonalityCycle> enumerate_cycles(int n) {
  if (n < 3 || n > 24) throw Error("n-out-of-range", std::to_string(n));
  std::vector<GonalityCycle> out;
  for_each_cycle(n, [&](const GonalityCycle& c) { out.push_back(c); });
  return out;
}

/// 2^{n-1} - n.
inline std::uint64_t cycle_count_formula(int n) { return (std::uint64_t{1} << (n - 1)) - static_cast<std::uint64_t>(n); }

/// Lines tangent-ish to a circle: label m takes direction angle
/// theta_m = pi (m - 1/2) / n, and its edge of the polygon is traversed along
/// theta_m for the first run and theta_m + pi for the second, which fixes the
/// outward normal. Normals are snapped to a dyadic grid; the result is only
/// accepted once detect_gonality_cycle() reads back the same cycle.
inline Arrangement realize_cycle(const GonalityCycle& c) {
  const int n = c.size();
  std::vector<bool> first_run(n + 1, false);
  for (int j = 1; j <= c.split(); ++j) first_run[c.at(j)] = true;
  long grid = 1L << 16;
  for (int attempt = 0; attempt < 4; ++attempt, grid <<= 8) {
    std::vector<Line> lines;
    for (LineId m = 1; m <= n; ++m) {
      const double theta = std::numbers::pi * (m - 0.5) / n;
      const double travel = first_run[m] ? theta : theta + std::numbers::pi;
      const double normal = travel - std::numbers::pi / 2;
      auto snap = [&](double v) {
        Rat q(Int(static_cast<long>(std::llround(v * static_cast<double>(grid)))), Int(grid));
        q.canonicalize();
        return q;
      };
      lines.emplace_back(snap(std::cos(normal)), snap(std::sin(normal)), Rat(1));
    }
    bool ordered = true;
    for (int m = 1; m < n; ++m) ordered = ordered && cmp_angle(lines[m - 1], lines[m]) < 0;
    if (!ordered) continue;
    try {
      Arrangement arr = Arrangement::build(std::move(lines));
      if (detect_gonality_cycle(arr) == c) return arr;
    } catch (const Error&) {
      // snapped into a degenerate configuration; refine the grid
    }
  }
  throw Error("realization-failed", format_cycle(c));
}

/// The cycle whose triangle list is `triangles`, by exhaustive search.
inline std::optional<GonalityCycle> reconstruct_cycle(const TriangleSet& triangles, int n) {
  if (n < 4 || n > 20) throw Error("n-out-of-range", std::to_string(n));
  std::optional<GonalityCycle> found;
  for_each_cycle(n, [&](const GonalityCycle& c) {
    if (!found && thmA_triangles(c) == triangles) found = c;
  });
  return found;
}

/// Anticlockwise consecutive sides (a, b, c) of the n-gon that form a
/// triangle by the juxtaposition rule: a > c > b, b > a > c or c > b > a.
inline TriangleSet juxtaposed_triangles(const GonalityCycle& cyc) {
  const int n = cyc.size();
  TriangleSet out;
  for (int j = 0; j < n; ++j) {
    LineId a = cyc.sequence()[j];
    LineId b = cyc.sequence()[(j + 1) % n];
    LineId c = cyc.sequence()[(j + 2) % n];
    if ((a > c && c > b) || (b > a && a > c) || (c > b && b > a)) out.insert(make_triple(a, b, c));
  }
  return out;
}

/// Every bounded face other than the n-gon is a quadrilateral, or a triangle
/// sharing a whole edge with the n-gon. Returns a description of the first
/// offending face, or nullopt.
inline std::optional<std::string> edge_adjacency_violation(const FaceComplex& faces, int n) {
  const Face* gon = nullptr;
  for (const Face& f : faces)
    if (static_cast<int>(f.edges()) == n) gon = &f;
  if (gon == nullptr) return "no n-gon face";
  auto edge_set = [](const Face& f) {
    std::set<std::pair<IdPair, IdPair>> edges;
    for (std::size_t e = 0; e < f.edges(); ++e) {
      IdPair p = f.corners[e];
      IdPair q = f.corners[(e + 1) % f.edges()];
      edges.insert(p < q ? std::pair{p, q} : std::pair{q, p});
    }
    return edges;
  };
  const auto gon_edges = edge_set(*gon);
  for (const Face& f : faces) {
    if (&f == gon || f.edges() == 4) continue;
    bool adjacent = false;
    if (f.edges() == 3)
      for (const auto& e : edge_set(f)) adjacent = adjacent || gon_edges.count(e) > 0;
    if (!adjacent) {
      std::string desc = std::to_string(f.edges()) + "-gon on lines";
      for (LineId l : f.lines) desc += " " + std::to_string(l);
      return desc;
    }
  }
  return std::nullopt;
}

}  // namespace linarr
