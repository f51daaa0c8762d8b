#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "linarr/arrangement.hpp"
#include "linarr/error.hpp"
#include "linarr/geometry.hpp"

namespace linarr {

enum class Sign : int { Minus = -1, Plus = 1 };

inline int to_int(Sign s) { return static_cast<int>(s); }
inline Sign operator-(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
inline Sign sign_of(int v) { return v > 0 ? Sign::Plus : Sign::Minus; }

/// Insertion order of lines (1-based ids), position l holding pi(l).
using Permutation = std::vector<LineId>;

struct NomenclatureEntry {
  LineId line;
  Sign sign;

  friend bool operator==(const NomenclatureEntry&, const NomenclatureEntry&) = default;
};

/// pi(1)^{a_1} ... pi(n)^{a_n}: an infinity permutation with one sign per
/// position. The constructor enforces that the ids are a permutation of 1..n
/// and that the three leading lines, read in ascending id order, are signed
/// (+,-,+) or (-,+,-).
class Nomenclature {
 public:
  explicit Nomenclature(std::vector<NomenclatureEntry> entries) : entries_(std::move(entries)) { validate(); }

  int size() const { return static_cast<int>(entries_.size()); }
  const std::vector<NomenclatureEntry>& entries() const { return entries_; }

  /// 1-based position accessors, matching pi(l) and a_l.
  LineId line_at(int position) const { return entries_.at(position - 1).line; }
  Sign sign_at(int position) const { return entries_.at(position - 1).sign; }

  int position_of(LineId line) const {
    for (int p = 0; p < size(); ++p)
      if (entries_[p].line == line) return p + 1;
    throw Error("bad-line", std::to_string(line));
  }

  Permutation permutation() const {
    Permutation pi;
    for (const auto& e : entries_) pi.push_back(e.line);
    return pi;
  }

  /// Every sign flipped.
  Nomenclature negated() const {
    auto flipped = entries_;
    for (auto& e : flipped) e.sign = -e.sign;
    return Nomenclature(std::move(flipped));
  }

  friend bool operator==(const Nomenclature&, const Nomenclature&) = default;

 private:
  void validate() const {
    const int n = size();
    if (n < 3) throw Error("bad-leading-signs", "a nomenclature needs at least 3 lines");
    std::vector<bool> seen(n + 1, false);
    for (const auto& e : entries_) {
      if (e.line < 1 || e.line > n || seen[e.line]) throw Error("not-a-permutation");
      seen[e.line] = true;
    }
    std::array<NomenclatureEntry, 3> lead{entries_[0], entries_[1], entries_[2]};
    std::sort(lead.begin(), lead.end(), [](const auto& x, const auto& y) { return x.line < y.line; });
    bool case_one = lead[0].sign == Sign::Plus && lead[1].sign == Sign::Minus && lead[2].sign == Sign::Plus;
    bool case_two = lead[0].sign == Sign::Minus && lead[1].sign == Sign::Plus && lead[2].sign == Sign::Minus;
    if (!case_one && !case_two) throw Error("bad-leading-signs");
  }

  std::vector<NomenclatureEntry> entries_;
};

/// Tokens "<id>^+1" / "<id>^-1" separated by whitespace.
inline Nomenclature parse_nomenclature(std::string_view text) {
  std::vector<NomenclatureEntry> entries;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    auto caret = tok.find('^');
    if (caret == std::string::npos || caret == 0) throw Error("bad-token", tok);
    std::string id = tok.substr(0, caret);
    std::string sg = tok.substr(caret + 1);
    if (!std::all_of(id.begin(), id.end(), [](char c) { return c >= '0' && c <= '9'; }) || id.size() > 9)
      throw Error("bad-token", tok);
    if (sg != "+1" && sg != "-1") throw Error("bad-token", tok);
    entries.push_back({std::stoi(id), sg == "+1" ? Sign::Plus : Sign::Minus});
  }
  return Nomenclature(std::move(entries));
}

inline std::string format_nomenclature(const Nomenclature& nom) {
  std::string out;
  for (const auto& e : nom.entries()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(e.line) + (e.sign == Sign::Plus ? "^+1" : "^-1");
  }
  return out;
}

/// Signs of the triangle on three member lines, in ascending id order: +1
/// when the line leaves the origin and the opposite vertex on the same side.
inline std::array<Sign, 3> triangle_signs(const Arrangement& arr, Triple ids) {
  std::sort(ids.begin(), ids.end());
  const Point origin{0, 0};
  std::array<Sign, 3> out{};
  for (int k = 0; k < 3; ++k) {
    LineId l = ids[k];
    LineId p = ids[(k + 1) % 3];
    LineId q = ids[(k + 2) % 3];
    out[k] = side(arr.line(l), origin) == arr.vertex_side(l, p, q) ? Sign::Plus : Sign::Minus;
  }
  return out;
}

inline std::array<Sign, 3> triangle_signs(const Arrangement& arr) {
  if (arr.size() != 3) throw Error("bad-arrangement", "triangle_signs expects exactly 3 lines");
  return triangle_signs(arr, {1, 2, 3});
}

/// Sign of line `id` w.r.t. the vertices of `prefix` (which excludes `id`):
/// +1 when they all sit on the origin's side, -1 when all on the other side,
/// nullopt when the line is not at infinity for them.
inline std::optional<Sign> separation_sign(const Arrangement& arr, LineId id, std::span<const LineId> prefix) {
  const int origin_side = side(arr.line(id), Point{0, 0});
  int common = 0;
  for (std::size_t x = 0; x < prefix.size(); ++x) {
    for (std::size_t y = x + 1; y < prefix.size(); ++y) {
      int s = arr.vertex_side(id, prefix[x], prefix[y]);
      if (s == 0 || (common != 0 && s != common)) return std::nullopt;
      common = s;
    }
  }
  if (common == 0) return std::nullopt;
  return common == origin_side ? Sign::Plus : Sign::Minus;
}

struct InfinityPermutationResult {
  /// Largest-id-first greedy peel; empty when some stage had no line at infinity.
  std::optional<Permutation> greedy;
  /// Backtracking search over every at-infinity choice, run only when the
  /// greedy peel fails.
  std::optional<Permutation> fallback;

  bool infinity_type() const { return greedy.has_value() || fallback.has_value(); }
  /// Greedy failed although some infinity permutation exists.
  bool note_violation() const { return !greedy && fallback; }
  const std::optional<Permutation>& best() const { return greedy ? greedy : fallback; }
};

/// Peels lines off the top: the last position goes to the largest id that is
/// at infinity for the remaining lines, and so on down to the first three.
inline InfinityPermutationResult canonical_infinity_permutation(const Arrangement& arr) {
  const int n = arr.size();
  InfinityPermutationResult result;

  std::vector<bool> active(n, true);
  Permutation reversed;
  bool ok = true;
  for (int remaining = n; remaining >= 1 && ok; --remaining) {
    LineId pick = 0;
    for (LineId id = n; id >= 1 && pick == 0; --id)
      if (active[id - 1] && (remaining <= 2 || at_infinity_within(arr, id, active))) pick = id;
    if (pick == 0) {
      ok = false;
      break;
    }
    reversed.push_back(pick);
    active[pick - 1] = false;
  }
  if (ok) {
    result.greedy = Permutation(reversed.rbegin(), reversed.rend());
    return result;
  }

  // Depth-first over all at-infinity choices, largest id first, remembering
  // line subsets already known to be dead ends.
  std::vector<std::vector<bool>> dead;
  std::function<bool(std::vector<bool>&, Permutation&, int)> search = [&](std::vector<bool>& act, Permutation& acc,
                                                                          int remaining) -> bool {
    if (remaining <= 2) {
      for (LineId id = n; id >= 1; --id)
        if (act[id - 1]) acc.push_back(id);
      return true;
    }
    if (std::find(dead.begin(), dead.end(), act) != dead.end()) return false;
    for (LineId id = n; id >= 1; --id) {
      if (!act[id - 1] || !at_infinity_within(arr, id, act)) continue;
      act[id - 1] = false;
      acc.push_back(id);
      if (search(act, acc, remaining - 1)) return true;
      acc.pop_back();
      act[id - 1] = true;
    }
    dead.push_back(act);
    return false;
  };
  std::vector<bool> act(n, true);
  Permutation acc;
  if (search(act, acc, n)) result.fallback = Permutation(acc.rbegin(), acc.rend());
  return result;
}

/// Nomenclature of `arr` along the infinity permutation `pi` (or the canonical
/// one). Leading three signs come from the triangle rule, the rest from the
/// separation rule. Throws "not-a-permutation", "not-infinity-type" or
/// "not-an-infinity-permutation".
inline Nomenclature derive_nomenclature(const Arrangement& arr, std::optional<Permutation> pi = std::nullopt) {
  const int n = arr.size();
  if (n < 3) throw Error("bad-arrangement", "a nomenclature needs at least 3 lines");
  if (!pi) {
    auto canon = canonical_infinity_permutation(arr);
    if (!canon.infinity_type()) throw Error("not-infinity-type");
    pi = canon.best();
  }
  {
    Permutation sorted = *pi;
    std::sort(sorted.begin(), sorted.end());
    for (int k = 0; k < static_cast<int>(sorted.size()); ++k)
      if (static_cast<int>(sorted.size()) != n || sorted[k] != k + 1) throw Error("not-a-permutation");
  }
  const Permutation& p = *pi;
  std::vector<NomenclatureEntry> entries(n);
  auto lead = triangle_signs(arr, make_triple(p[0], p[1], p[2]));
  Triple lead_ids = make_triple(p[0], p[1], p[2]);
  for (int k = 0; k < 3; ++k) {
    int pos = static_cast<int>(std::find(p.begin(), p.begin() + 3, lead_ids[k]) - p.begin());
    entries[pos] = {lead_ids[k], lead[k]};
  }
  // At l = 3 the separation rule must agree with the triangle rule.
  auto third = separation_sign(arr, p[2], std::span<const LineId>(p.data(), 2));
  if (!third || *third != entries[2].sign) throw std::logic_error("triangle and separation rules disagree");
  for (int l = 3; l < n; ++l) {
    auto s = separation_sign(arr, p[l], std::span<const LineId>(p.data(), l));
    if (!s) throw Error("not-an-infinity-permutation", "line " + std::to_string(p[l]) + " at position " +
                                                             std::to_string(l + 1));
    entries[l] = {p[l], *s};
  }
  return Nomenclature(std::move(entries));
}

/// Direction ladder: label m gets slope direction (cot theta_m, 1) with
/// theta_m = pi (m - 1/2) / n, snapped to a dyadic grid. Returns the
/// b-coefficients (lines x + b y = c) strictly increasing in m, which is
/// strictly increasing angle.
inline std::vector<Rat> direction_ladder(int n) {
  for (long grid = 4096;; grid *= 16) {
    std::vector<Rat> bs;
    for (int m = 1; m <= n; ++m) {
      const double theta = std::numbers::pi * (m - 0.5) / n;
      const double cot = std::cos(theta) / std::sin(theta);
      bs.emplace_back(Int(static_cast<long>(std::llround(-cot * static_cast<double>(grid)))), Int(grid));
      bs.back().canonicalize();
    }
    bool strict = true;
    for (int m = 1; m < n; ++m) strict = strict && bs[m - 1] < bs[m];
    if (strict) return bs;
  }
}

/// Builds a conventional arrangement for `nom`: lines are inserted in
/// nomenclature order with directions from the ladder, each new line pushed
/// 1 beyond all existing vertices on the side its sign asks for. The result
/// is checked by re-deriving the nomenclature.
inline Arrangement realize_nomenclature(const Nomenclature& nom) {
  const int n = nom.size();
  const auto bs = direction_ladder(n);
  std::vector<std::optional<Line>> placed(n);
  std::vector<Point> vertices;
  std::vector<LineId> order;
  for (const auto& [id, sgn] : nom.entries()) {
    const Rat a = 1;
    const Rat& b = bs[id - 1];
    Rat c = 0;
    if (vertices.size() > 0) {
      std::optional<Rat> extreme;
      for (const Point& v : vertices) {
        Rat val = a * v.x + b * v.y;
        if (!extreme || (sgn == Sign::Plus ? val > *extreme : val < *extreme)) extreme = val;
      }
      c = sgn == Sign::Plus ? Rat(*extreme + 1) : Rat(*extreme - 1);
    }
    Line line(a, b, c);
    for (LineId other : order) vertices.push_back(intersect(line, *placed[other - 1]));
    placed[id - 1] = line;
    order.push_back(id);
  }
  std::vector<Line> lines;
  for (auto& l : placed) lines.push_back(*l);
  Arrangement arr = Arrangement::build(std::move(lines));
  if (derive_nomenclature(arr, nom.permutation()) != nom) throw Error("realization-failed", format_nomenclature(nom));
  return arr;
}

}  // namespace linarr
