#pragma once

#include <algorithm>
#include <array>
#include <set>
#include <string>

namespace linarr {

/// Line ids are 1-based and follow the angle order of the arrangement.
using LineId = int;

/// Unordered triple of line ids, stored ascending.
using Triple = std::array<LineId, 3>;

/// Ordered lexicographically, so iteration order is the canonical output order.
using TriangleSet = std::set<Triple>;

inline Triple make_triple(LineId i, LineId j, LineId k) {
  Triple t{i, j, k};
  std::sort(t.begin(), t.end());
  return t;
}

inline std::string format_triple(const Triple& t) {
  return std::to_string(t[0]) + " " + std::to_string(t[1]) + " " + std::to_string(t[2]);
}

/// "{{1,2,3},{1,2,4}}" in canonical order.
inline std::string format_triangle_set(const TriangleSet& set) {
  std::string out = "{";
  bool first = true;
  for (const Triple& t : set) {
    if (!first) out += ",";
    first = false;
    out += "{" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + "}";
  }
  return out + "}";
}

inline int shared_labels(const Triple& x, const Triple& y) {
  int n = 0;
  for (LineId a : x)
    if (std::find(y.begin(), y.end(), a) != y.end()) ++n;
  return n;
}

}  // namespace linarr
