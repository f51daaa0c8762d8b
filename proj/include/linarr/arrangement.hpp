#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "linarr/error.hpp"
#include "linarr/geometry.hpp"
#include "linarr/triangle_set.hpp"

namespace linarr {

/// Row i (index i-1) lists the other line ids in the order their crossings
/// appear along line i's conventional orientation.
using LineOrderTable = std::vector<std::vector<LineId>>;

using IdPair = std::pair<LineId, LineId>;

/// A line arrangement in general position, in its conventional embedding:
/// ids 1..n follow strictly increasing direction angle, every vertex lies in
/// the open first quadrant and every line meets the positive x-axis.
///
/// Immutable once built. Vertices, order rows and the vertex/line side table
/// are computed eagerly because every query in this library reads them.
class Arrangement {
 public:
  /// Validates general position, sorts by angle, assigns ids and translates
  /// into the conventional embedding. Throws Error with code
  /// "too-few-lines", "parallel-lines", "concurrent-triple" or
  /// "horizontal-line" (the latter from Line itself).
  static Arrangement build(std::vector<Line> raw) {
    if (raw.size() < 2) throw Error("too-few-lines", "an arrangement needs at least 2 lines");
    for (std::size_t i = 0; i < raw.size(); ++i)
      for (std::size_t j = i + 1; j < raw.size(); ++j)
        if (parallel(raw[i], raw[j])) throw Error("parallel-lines");
    std::stable_sort(raw.begin(), raw.end(),
                     [](const Line& l1, const Line& l2) { return cmp_angle(l1, l2) < 0; });
    Arrangement arr(std::move(raw));
    arr.compute_vertices();
    arr.normalize();
    arr.compute_tables();
    return arr;
  }

  int size() const { return static_cast<int>(lines_.size()); }
  const std::vector<Line>& lines() const { return lines_; }
  const Line& line(LineId id) const { return lines_.at(id - 1); }

  const Point& vertex(LineId i, LineId j) const { return vertices_[index(i, j)]; }

  /// side(line(m), vertex(i, j)).
  int vertex_side(LineId m, LineId i, LineId j) const {
    return sides_[static_cast<std::size_t>(m - 1) * vertices_.size() + index(i, j)];
  }

  const LineOrderTable& orders() const { return orders_; }

  /// Position (0-based) of the crossing with line j inside row i.
  int position(LineId i, LineId j) const { return positions_[static_cast<std::size_t>(i - 1) * size() + (j - 1)]; }

  /// Translation applied by build() to reach the conventional embedding.
  const Point& applied_translation() const { return translation_; }

 private:
  explicit Arrangement(std::vector<Line> lines) : lines_(std::move(lines)) {}

  std::size_t index(LineId i, LineId j) const {
    if (i > j) std::swap(i, j);
    // Row-major upper triangle without the diagonal.
    const std::size_t n = lines_.size();
    const std::size_t a = static_cast<std::size_t>(i - 1);
    const std::size_t b = static_cast<std::size_t>(j - 1);
    return a * (2 * n - a - 1) / 2 + (b - a - 1);
  }

  void compute_vertices() {
    const int n = size();
    vertices_.clear();
    vertices_.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (LineId i = 1; i <= n; ++i)
      for (LineId j = i + 1; j <= n; ++j) vertices_.push_back(intersect(line(i), line(j)));
  }

  // Translate so vertices have x, y > 0 and intercepts are > 0, with an exact
  // margin of 1 beyond whichever bound binds. A conventional input is left alone.
  void normalize() {
    Rat ty = 0;
    Rat min_y = vertices_.front().y;
    for (const Point& v : vertices_) min_y = std::min(min_y, v.y);
    if (min_y <= 0) ty = 1 - min_y;

    bool need_x = false;
    Rat bound;
    auto consider = [&](const Rat& value) {
      if (!need_x || value > bound) bound = value;
      need_x = true;
    };
    for (const Point& v : vertices_) consider(-v.x);
    for (const Line& l : lines_) consider(-(l.c() + l.b() * ty) / l.a());
    Rat tx = bound >= 0 ? Rat(bound + 1) : Rat(0);

    translation_ = {tx, ty};
    if (tx == 0 && ty == 0) return;
    for (Line& l : lines_) l = l.translated(tx, ty);
    for (Point& v : vertices_) {
      v.x += tx;
      v.y += ty;
    }
  }

  void compute_tables() {
    const int n = size();
    const std::size_t nv = vertices_.size();
    sides_.assign(static_cast<std::size_t>(n) * nv, 0);
    for (LineId m = 1; m <= n; ++m) {
      for (LineId i = 1; i <= n; ++i) {
        for (LineId j = i + 1; j <= n; ++j) {
          int s = side(line(m), vertex(i, j));
          sides_[static_cast<std::size_t>(m - 1) * nv + index(i, j)] = static_cast<std::int8_t>(s);
          if (s == 0 && m != i && m != j) {
            std::array<LineId, 3> t = make_triple(i, j, m);
            throw Error("concurrent-triple", std::to_string(t[0]) + " " + std::to_string(t[1]) + " " +
                                                 std::to_string(t[2]));
          }
        }
      }
    }

    orders_.assign(n, {});
    positions_.assign(static_cast<std::size_t>(n) * n, -1);
    for (LineId i = 1; i <= n; ++i) {
      std::vector<std::pair<Rat, LineId>> keyed;
      for (LineId j = 1; j <= n; ++j)
        if (j != i) keyed.emplace_back(parameter_along(line(i), vertex(i, j)), j);
      std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      auto& row = orders_[i - 1];
      for (const auto& [key, j] : keyed) {
        positions_[static_cast<std::size_t>(i - 1) * n + (j - 1)] = static_cast<int>(row.size());
        row.push_back(j);
      }
    }
  }

  std::vector<Line> lines_;
  std::vector<Point> vertices_;
  std::vector<std::int8_t> sides_;
  LineOrderTable orders_;
  std::vector<int> positions_;
  Point translation_{0, 0};
};

inline Arrangement build_arrangement(std::vector<Line> raw) { return Arrangement::build(std::move(raw)); }

inline const LineOrderTable& line_orders(const Arrangement& arr) { return arr.orders(); }

/// Arrangement on the kept ids, renumbered 1..m in the same relative order.
inline Arrangement sub_arrangement(const Arrangement& arr, std::span<const LineId> keep) {
  std::vector<LineId> ids(keep.begin(), keep.end());
  std::sort(ids.begin(), ids.end());
  std::vector<Line> lines;
  for (LineId id : ids) lines.push_back(arr.line(id));
  return Arrangement::build(std::move(lines));
}

/// {i, j} (i < j) such that L_i ∩ L_j is an end of both rows i and j.
inline std::set<IdPair> corner_points(const Arrangement& arr) {
  const int n = arr.size();
  auto at_end = [&](LineId i, LineId j) {
    int p = arr.position(i, j);
    return p == 0 || p == n - 2;
  };
  std::set<IdPair> out;
  for (LineId i = 1; i <= n; ++i)
    for (LineId j = i + 1; j <= n; ++j)
      if (at_end(i, j) && at_end(j, i)) out.emplace(i, j);
  return out;
}

/// Quadrant (sides w.r.t. L_i, L_j) that line m misses: the segment between
/// its crossings with L_i and L_j sits in the quadrant spanned by those two
/// rays, so the opposite quadrant is the one it never enters.
inline std::pair<int, int> missed_quadrant(const Arrangement& arr, LineId i, LineId j, LineId m) {
  int on_i_side_of_j = arr.vertex_side(j, i, m);
  int on_j_side_of_i = arr.vertex_side(i, j, m);
  return {-on_j_side_of_i, -on_i_side_of_j};
}

/// Corner points by the quadrant criterion: L_i ∩ L_j is a corner iff every
/// other line misses the same quadrant around it. Independent of the order
/// rows; used to cross-check corner_points().
inline std::set<IdPair> corner_points_by_quadrants(const Arrangement& arr) {
  const int n = arr.size();
  std::set<IdPair> out;
  for (LineId i = 1; i <= n; ++i) {
    for (LineId j = i + 1; j <= n; ++j) {
      std::optional<std::pair<int, int>> common;
      bool same = true;
      for (LineId m = 1; m <= n && same; ++m) {
        if (m == i || m == j) continue;
        auto q = missed_quadrant(arr, i, j, m);
        if (!common) common = q;
        same = *common == q;
      }
      if (same) out.emplace(i, j);
    }
  }
  return out;
}

/// Three lines whose pairwise vertices are strictly on one side of every
/// other line: the triangle they span is crossed by nothing, so it is a face.
inline TriangleSet triangle_faces_oracle(const Arrangement& arr) {
  const int n = arr.size();
  TriangleSet out;
  for (LineId i = 1; i <= n; ++i) {
    for (LineId j = i + 1; j <= n; ++j) {
      for (LineId k = j + 1; k <= n; ++k) {
        bool face = true;
        for (LineId m = 1; m <= n && face; ++m) {
          if (m == i || m == j || m == k) continue;
          int s = arr.vertex_side(m, i, j);
          face = s == arr.vertex_side(m, j, k) && s == arr.vertex_side(m, i, k);
        }
        if (face) out.insert({i, j, k});
      }
    }
  }
  return out;
}

/// A bounded face, anticlockwise. Edge e lies on `lines[e]` and runs from
/// `corners[e]` to `corners[e + 1]` (cyclically); corners are vertex id pairs.
/// The cycle is rotated so the smallest line id comes first.
struct Face {
  std::vector<LineId> lines;
  std::vector<IdPair> corners;

  std::size_t edges() const { return lines.size(); }
  friend bool operator==(const Face&, const Face&) = default;
};

using FaceComplex = std::vector<Face>;

namespace detail {

inline IdPair ordered(LineId i, LineId j) { return i < j ? IdPair{i, j} : IdPair{j, i}; }

}  // namespace detail

/// Walks every half-edge cycle of the segment graph, taking at each vertex
/// the first outgoing edge clockwise from the reversed incoming edge, which
/// keeps the face on the left. Rays are omitted, so all unbounded faces merge
/// into one clockwise cycle which is discarded by its signed area.
inline FaceComplex bounded_faces(const Arrangement& arr) {
  const int n = arr.size();
  if (n < 3) return {};
  const int segs = n - 2;  // segments per line
  struct HalfEdge {
    LineId line;
    int seg;
    bool forward;
  };
  auto id_of = [&](const HalfEdge& h) { return ((h.line - 1) * segs + h.seg) * 2 + (h.forward ? 0 : 1); };
  auto head = [&](const HalfEdge& h) {  // (line, position) of the destination vertex
    return h.forward ? h.seg + 1 : h.seg;
  };
  auto tail = [&](const HalfEdge& h) { return h.forward ? h.seg : h.seg + 1; };

  std::vector<char> seen(static_cast<std::size_t>(n) * segs * 2, 0);
  FaceComplex faces;
  for (LineId l = 1; l <= n; ++l) {
    for (int s = 0; s < segs; ++s) {
      for (bool fwd : {true, false}) {
        HalfEdge start{l, s, fwd};
        if (seen[id_of(start)]) continue;
        Face face;
        Rat twice_area = 0;
        HalfEdge h = start;
        do {
          seen[id_of(h)] = 1;
          const auto& row = arr.orders()[h.line - 1];
          LineId from_other = row[tail(h)];
          LineId to_other = row[head(h)];
          face.lines.push_back(h.line);
          face.corners.push_back(detail::ordered(h.line, from_other));
          const Point& p = arr.vertex(h.line, from_other);
          const Point& q = arr.vertex(h.line, to_other);
          twice_area += p.x * q.y - q.x * p.y;

          // Rotational order at the vertex, anticlockwise: +d_lo, +d_hi, -d_lo, -d_hi.
          LineId other = to_other;
          LineId lo = std::min(h.line, other);
          LineId hi = std::max(h.line, other);
          auto slot = [&](LineId line, bool plus) { return (line == lo ? 0 : 1) + (plus ? 0 : 2); };
          int twin = slot(h.line, !h.forward);
          for (int step = 1; step <= 4; ++step) {
            int sl = ((twin - step) % 4 + 4) % 4;
            LineId line = (sl % 2 == 0) ? lo : hi;
            bool plus = sl < 2;
            int pos = arr.position(line, line == h.line ? other : h.line);
            if (plus && pos < n - 2) {
              h = {line, pos, true};
              break;
            }
            if (!plus && pos > 0) {
              h = {line, pos - 1, false};
              break;
            }
          }
        } while (id_of(h) != id_of(start));
        if (twice_area <= 0) continue;
        auto first = std::min_element(face.lines.begin(), face.lines.end()) - face.lines.begin();
        std::rotate(face.lines.begin(), face.lines.begin() + first, face.lines.end());
        std::rotate(face.corners.begin(), face.corners.begin() + first, face.corners.end());
        faces.push_back(std::move(face));
      }
    }
  }
  std::sort(faces.begin(), faces.end(), [](const Face& x, const Face& y) {
    if (x.edges() != y.edges()) return x.edges() < y.edges();
    return x.lines < y.lines;
  });
  return faces;
}

/// Triples of lines bounding a triangular face of `faces`.
inline TriangleSet triangles_of(const FaceComplex& faces) {
  TriangleSet out;
  for (const Face& f : faces)
    if (f.edges() == 3) out.insert(make_triple(f.lines[0], f.lines[1], f.lines[2]));
  return out;
}

/// Identity on ids is an isomorphism: each order row agrees verbatim or
/// reversed, chosen independently per line.
inline bool is_isomorphic_trivial(const Arrangement& a1, const Arrangement& a2) {
  if (a1.size() != a2.size()) return false;
  for (int i = 0; i < a1.size(); ++i) {
    const auto& r1 = a1.orders()[i];
    const auto& r2 = a2.orders()[i];
    if (r1 != r2 && !std::equal(r1.begin(), r1.end(), r2.rbegin())) return false;
  }
  return true;
}

/// Stricter reading of the same test: one reversal choice shared by all lines.
inline bool is_isomorphic_trivial_uniform(const Arrangement& a1, const Arrangement& a2) {
  if (a1.size() != a2.size()) return false;
  bool same = true;
  bool reversed = true;
  for (int i = 0; i < a1.size(); ++i) {
    const auto& r1 = a1.orders()[i];
    const auto& r2 = a2.orders()[i];
    same = same && r1 == r2;
    reversed = reversed && std::equal(r1.begin(), r1.end(), r2.rbegin());
  }
  return same || reversed;
}

/// Transitive closure of "shares exactly two labels". Classes are ordered by
/// their smallest triple.
inline std::vector<TriangleSet> triangle_equivalence_classes(const TriangleSet& triangles) {
  std::vector<Triple> items(triangles.begin(), triangles.end());
  std::vector<std::size_t> parent(items.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t a = 0; a < items.size(); ++a)
    for (std::size_t b = a + 1; b < items.size(); ++b)
      if (shared_labels(items[a], items[b]) == 2) parent[find(a)] = find(b);
  std::map<std::size_t, TriangleSet> by_root;
  for (std::size_t a = 0; a < items.size(); ++a) by_root[find(a)].insert(items[a]);
  std::vector<TriangleSet> classes;
  for (auto& [root, cls] : by_root) classes.push_back(std::move(cls));
  std::sort(classes.begin(), classes.end(),
            [](const TriangleSet& x, const TriangleSet& y) { return *x.begin() < *y.begin(); });
  return classes;
}

/// Member line `id` is at infinity w.r.t. the lines flagged in `active`
/// (indexed by id - 1; `id` itself must be active): every vertex among the
/// active lines that is off L_id lies strictly on one common side.
inline bool at_infinity_within(const Arrangement& arr, LineId id, const std::vector<bool>& active) {
  const int n = arr.size();
  int common = 0;
  for (LineId i = 1; i <= n; ++i) {
    if (!active[i - 1] || i == id) continue;
    for (LineId j = i + 1; j <= n; ++j) {
      if (!active[j - 1] || j == id) continue;
      int s = arr.vertex_side(id, i, j);
      if (common == 0) common = s;
      if (s != common) return false;
    }
  }
  return true;
}

inline bool is_line_at_infinity_geom(const Arrangement& arr, LineId id) {
  if (id < 1 || id > arr.size()) throw Error("bad-line", std::to_string(id));
  return at_infinity_within(arr, id, std::vector<bool>(arr.size(), true));
}

/// External line: the extension must stay in general position, then every
/// vertex has to be strictly on one side.
inline bool is_line_at_infinity_geom(const Arrangement& arr, const Line& external) {
  const int n = arr.size();
  for (LineId i = 1; i <= n; ++i)
    if (parallel(external, arr.line(i))) throw Error("degenerate-extension", "parallel to line " + std::to_string(i));
  int common = 0;
  for (LineId i = 1; i <= n; ++i) {
    for (LineId j = i + 1; j <= n; ++j) {
      int s = side(external, arr.vertex(i, j));
      if (s == 0)
        throw Error("degenerate-extension",
                    "passes through vertex " + std::to_string(i) + "," + std::to_string(j));
      if (common == 0) common = s;
      if (s != common) return false;
    }
  }
  return true;
}

}  // namespace linarr
