#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "linarr/error.hpp"

namespace linarr {

// Arbitrary-precision rational; mpq_class is kept canonical (reduced,
// positive denominator) after every arithmetic operation.
using Rat = mpq_class;
using Int = mpz_class;

inline int sign(const Rat& r) { return sgn(r); }
inline int sign(const Int& z) { return sgn(z); }

/// Parses "p", "-p" or "p/q" (q > 0). Anything else is a "bad-rational".
inline Rat parse_rat(std::string_view text) {
  auto digits = [](std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char ch : s)
      if (ch < '0' || ch > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!digits(num, true) || !digits(den, false)) throw Error("bad-rational", std::string(text));
  Int n(std::string(num.front() == '+' ? num.substr(1) : num), 10);
  Int d(std::string(den), 10);
  if (d == 0) throw Error("bad-rational", std::string(text));
  Rat r(n, d);
  r.canonicalize();
  return r;
}

/// "p" when the denominator is 1, "p/q" otherwise.
inline std::string format_rat(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace linarr
