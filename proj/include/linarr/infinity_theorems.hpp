#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "linarr/error.hpp"
#include "linarr/nomenclature.hpp"
#include "linarr/triangle_set.hpp"

namespace linarr {

namespace detail {

inline int strict_sign(long v) {
  if (v == 0) throw std::logic_error("zero argument to sign() in triangle criterion");
  return v > 0 ? 1 : -1;
}

inline void check_positions(const Nomenclature& nom, int i, int j, int k) {
  if (!(1 <= i && i < j && j < k && k <= nom.size()))
    throw Error("bad-positions", std::to_string(i) + " " + std::to_string(j) + " " + std::to_string(k));
}

}  // namespace detail

/// Which half of the necessary condition holds for positions i < j < k:
/// `Gap` when no label among pi(1..k) lies strictly between pi(i) and pi(j),
/// `Span` when all of them lie in the closed interval, `None` otherwise.
enum class NecessaryCase { None, Gap, Span };

inline NecessaryCase necessary_condition(const Nomenclature& nom, int i, int j, int k) {
  detail::check_positions(nom, i, j, k);
  const LineId lo = std::min(nom.line_at(i), nom.line_at(j));
  const LineId hi = std::max(nom.line_at(i), nom.line_at(j));
  bool none_inside = true;
  bool all_inside = true;
  for (int p = 1; p <= k; ++p) {
    LineId x = nom.line_at(p);
    none_inside = none_inside && !(lo < x && x < hi);
    all_inside = all_inside && lo <= x && x <= hi;
  }
  // For k >= 3 and distinct labels the two cases cannot both hold.
  if (none_inside) return NecessaryCase::Gap;
  if (all_inside) return NecessaryCase::Span;
  return NecessaryCase::None;
}

/// Whether the lines at positions i < j < k (1-based) bound a triangle,
/// decided from the nomenclature alone.
inline bool thmB_is_triangle(const Nomenclature& nom, int i, int j, int k) {
  detail::check_positions(nom, i, j, k);
  if (i == 1 && j == 2 && k == 3) return true;
  const long pi_i = nom.line_at(i);
  const long pi_j = nom.line_at(j);
  const int a_j = to_int(nom.sign_at(j));
  switch (necessary_condition(nom, i, j, k)) {
    case NecessaryCase::Gap: {
      const long base = a_j * (pi_j - pi_i);
      if (to_int(nom.sign_at(k)) != detail::strict_sign(base * (nom.line_at(k) - pi_j))) return false;
      for (int l = j + 1; l < k; ++l)
        if (to_int(nom.sign_at(l)) != -detail::strict_sign(base * (nom.line_at(l) - pi_j))) return false;
      return true;
    }
    case NecessaryCase::Span: {
      if (to_int(nom.sign_at(k)) != a_j) return false;
      for (int l = j + 1; l < k; ++l)
        if (to_int(nom.sign_at(l)) != -a_j) return false;
      return true;
    }
    case NecessaryCase::None:
      return false;
  }
  return false;
}

/// All triangles of the arrangement described by `nom`, as label triples.
inline TriangleSet thmB_triangles(const Nomenclature& nom) {
  const int n = nom.size();
  TriangleSet out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        if (thmB_is_triangle(nom, i, j, k)) out.insert(make_triple(nom.line_at(i), nom.line_at(j), nom.line_at(k)));
  return out;
}

namespace detail {

inline bool increasing(const std::vector<LineId>& xs) {
  return std::adjacent_find(xs.begin(), xs.end(), [](LineId x, LineId y) { return x >= y; }) == xs.end();
}

inline bool decreasing(const std::vector<LineId>& xs) {
  return std::adjacent_find(xs.begin(), xs.end(), [](LineId x, LineId y) { return x <= y; }) == xs.end();
}

template <class Pred>
std::vector<LineId> select(const std::vector<LineId>& xs, Pred pred) {
  std::vector<LineId> out;
  std::copy_if(xs.begin(), xs.end(), std::back_inserter(out), pred);
  return out;
}

inline bool all_less(const std::vector<LineId>& xs, const std::vector<LineId>& ys) {
  for (LineId x : xs)
    for (LineId y : ys)
      if (!(x < y)) return false;
  return true;
}

}  // namespace detail

/// Whether the line at position t is at infinity for the whole arrangement,
/// decided from the nomenclature alone.
///
/// The last line always is. A -1 line is judged on the fully negated
/// nomenclature, where it carries +1. Otherwise, with u the last +1 position
/// after t, the order conditions split three ways: pi(t) < pi(u), no such u,
/// and pi(u) < pi(t).
inline bool line_at_infinity_symbolic(const Nomenclature& nom, int t) {
  using detail::all_less;
  using detail::decreasing;
  using detail::increasing;
  using detail::select;

  const int n = nom.size();
  if (t < 1 || t > n) throw Error("bad-position", std::to_string(t));
  if (t == n) return true;
  if (nom.sign_at(t) == Sign::Minus) return line_at_infinity_symbolic(nom.negated(), t);

  const LineId pt = nom.line_at(t);
  std::vector<LineId> before;
  std::vector<LineId> after;
  std::vector<LineId> plus_after;
  std::vector<LineId> minus_after;
  int u = 0;
  for (int p = 1; p <= n; ++p) {
    if (p < t) before.push_back(nom.line_at(p));
    if (p <= t) continue;
    after.push_back(nom.line_at(p));
    if (nom.sign_at(p) == Sign::Plus) {
      plus_after.push_back(nom.line_at(p));
      u = p;
    } else {
      minus_after.push_back(nom.line_at(p));
    }
  }
  auto below = [pt](LineId x) { return x < pt; };
  auto above = [pt](LineId x) { return x > pt; };

  if (u == 0) {
    // Every later symbol is -1 and converges on pi(t) from both sides; earlier
    // symbols stay outside the whole later range.
    if (!increasing(select(after, below)) || !decreasing(select(after, above))) return false;
    if (!all_less(after, select(before, above))) return false;
    if (!all_less(select(before, below), after)) return false;
    return true;
  }

  std::vector<LineId> minus_between;  // -1 symbols strictly between t and u
  std::vector<LineId> tail;           // symbols after u, all -1
  for (int p = t + 1; p <= n; ++p) {
    if (p < u && nom.sign_at(p) == Sign::Minus) minus_between.push_back(nom.line_at(p));
    if (p > u) tail.push_back(nom.line_at(p));
  }
  const auto tail_below = select(tail, below);
  const auto tail_above = select(tail, above);
  if (!increasing(tail_below) || !decreasing(tail_above)) return false;

  if (pt < nom.line_at(u)) {
    if (!std::all_of(plus_after.begin(), plus_after.end(), above) || !increasing(plus_after)) return false;
    if (!all_less(minus_after, plus_after)) return false;
    if (!std::all_of(before.begin(), before.end(), above)) return false;
    if (!all_less(minus_after, before) || !all_less(before, plus_after)) return false;
    if (!std::all_of(minus_between.begin(), minus_between.end(), above) || !decreasing(minus_between)) return false;
    if (!all_less(tail_above, minus_between)) return false;
    return true;
  }

  // Mirror image of the branch above.
  if (!std::all_of(plus_after.begin(), plus_after.end(), below) || !decreasing(plus_after)) return false;
  if (!all_less(plus_after, minus_after)) return false;
  if (!std::all_of(before.begin(), before.end(), below)) return false;
  if (!all_less(plus_after, before) || !all_less(before, minus_after)) return false;
  if (!std::all_of(minus_between.begin(), minus_between.end(), below) || !increasing(minus_between)) return false;
  if (!all_less(minus_between, tail_below)) return false;
  return true;
}

}  // namespace linarr
