#pragma once

#include <compare>
#include <ostream>

#include "linarr/error.hpp"
#include "linarr/rational.hpp"

namespace linarr {

struct Point {
  Rat x;
  Rat y;

  friend bool operator==(const Point&, const Point&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Point& p) {
  return os << '(' << format_rat(p.x) << ", " << format_rat(p.y) << ')';
}

/// The locus a*x + b*y = c, held in canonical form: coprime integer
/// coefficients with a > 0. Horizontal lines (a == 0) cannot be represented.
///
/// The conventional orientation is the direction (-b, a), i.e. increasing y.
/// Its angle theta lies in (0, pi) and is never materialized; compare lines
/// with cmp_angle().
class Line {
 public:
  Line(const Rat& a, const Rat& b, const Rat& c) : a_(a), b_(b), c_(c) { canonicalize(); }

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  const Rat& c() const { return c_; }

  /// Direction of increasing y.
  Point direction() const { return {-b_, a_}; }

  /// x-coordinate where the line meets the x-axis.
  Rat x_intercept() const { return c_ / a_; }

  /// Same line shifted by (dx, dy).
  Line translated(const Rat& dx, const Rat& dy) const { return Line(a_, b_, c_ + a_ * dx + b_ * dy); }

  friend bool operator==(const Line&, const Line&) = default;

 private:
  void canonicalize() {
    if (a_ == 0 && b_ == 0) throw Error("degenerate-line", "a and b are both zero");
    if (a_ == 0) throw Error("horizontal-line");
    Int l = lcm(lcm(a_.get_den(), b_.get_den()), c_.get_den());
    Int na = a_.get_num() * (l / a_.get_den());
    Int nb = b_.get_num() * (l / b_.get_den());
    Int nc = c_.get_num() * (l / c_.get_den());
    Int g = gcd(gcd(na, nb), nc);
    if (na < 0) g = -g;
    a_ = Rat(na / g);
    b_ = Rat(nb / g);
    c_ = Rat(nc / g);
  }

  Rat a_;
  Rat b_;
  Rat c_;
};

inline std::ostream& operator<<(std::ostream& os, const Line& l) {
  return os << format_rat(l.a()) << "x + " << format_rat(l.b()) << "y = " << format_rat(l.c());
}

/// sign(a*x + b*y - c): 0 on the line, -1 on the side holding far-left
/// points (and the origin of a conventional embedding), +1 otherwise.
inline int side(const Line& l, const Point& p) { return sign(l.a() * p.x + l.b() * p.y - l.c()); }

inline Rat cross(const Point& u, const Point& v) { return u.x * v.y - u.y * v.x; }

inline bool parallel(const Line& l1, const Line& l2) { return l1.a() * l2.b() == l2.a() * l1.b(); }

inline Point intersect(const Line& l1, const Line& l2) {
  Rat det = l1.a() * l2.b() - l2.a() * l1.b();
  if (det == 0) throw Error("parallel-lines");
  return {(l1.c() * l2.b() - l2.c() * l1.b()) / det, (l1.a() * l2.c() - l2.a() * l1.c()) / det};
}

/// Orders lines by direction angle in (0, pi). Both directions have positive
/// y-component, so the cross product decides; equivalent means parallel.
inline std::weak_ordering cmp_angle(const Line& l1, const Line& l2) {
  int s = sign(cross(l1.direction(), l2.direction()));
  if (s > 0) return std::weak_ordering::less;
  if (s < 0) return std::weak_ordering::greater;
  return std::weak_ordering::equivalent;
}

/// Position of p along l's conventional orientation (up to a positive scale).
inline Rat parameter_along(const Line& l, const Point& p) {
  Point d = l.direction();
  return p.x * d.x + p.y * d.y;
}

}  // namespace linarr
