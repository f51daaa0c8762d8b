#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "linarr/arrangement.hpp"
#include "linarr/cyclicity.hpp"
#include "linarr/error.hpp"
#include "linarr/infinity_theorems.hpp"
#include "linarr/io.hpp"
#include "linarr/nomenclature.hpp"

namespace linarr {

/// MT19937-64 (std::mt19937_64, whose output sequence is fixed by the C++
/// standard) with bounded draws done by integer rejection, so a seed gives
/// the same stream everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw std::logic_error("Rng::below(0)");
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      std::uint64_t r = engine_();
      if (r >= threshold) return r % bound;
    }
  }

  /// Uniform in [lo, hi].
  long between(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1)); }

  bool coin() { return (engine_() >> 63) != 0; }

  template <class T>
  void shuffle(std::vector<T>& xs) {
    for (std::size_t i = xs.size(); i > 1; --i) std::swap(xs[i - 1], xs[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

inline std::pair<Nomenclature, Arrangement> gen_infinity_type(int n, std::uint64_t seed) {
  if (n < 3) throw Error("n-out-of-range", std::to_string(n));
  Rng rng(seed);
  Permutation pi(n);
  for (int k = 0; k < n; ++k) pi[k] = k + 1;
  rng.shuffle(pi);
  const bool plus_minus_plus = rng.coin();
  Triple lead = make_triple(pi[0], pi[1], pi[2]);
  std::vector<NomenclatureEntry> entries;
  for (int k = 0; k < n; ++k) {
    Sign s;
    if (k < 3) {
      bool middle = pi[k] == lead[1];
      s = (middle != plus_minus_plus) ? Sign::Plus : Sign::Minus;
    } else {
      s = rng.coin() ? Sign::Plus : Sign::Minus;
    }
    entries.push_back({pi[k], s});
  }
  Nomenclature nom(std::move(entries));
  Arrangement arr = realize_nomenclature(nom);
  return {std::move(nom), std::move(arr)};
}

inline std::pair<GonalityCycle, Arrangement> gen_cyclic(int n, std::uint64_t seed) {
  if (n < 4 || n > 60) throw Error("n-out-of-range", std::to_string(n));
  Rng rng(seed);
  const std::uint64_t subsets = std::uint64_t{1} << (n - 1);
  std::vector<LineId> seq(n);
  for (;;) {
    const std::uint64_t mask = rng.below(subsets);
    int k = 0;
    seq[k++] = 1;
    for (LineId m = 2; m <= n; ++m)
      if (mask >> (m - 2) & 1) seq[k++] = m;
    for (LineId m = 2; m <= n; ++m)
      if (!(mask >> (m - 2) & 1)) seq[k++] = m;
    if (auto c = validate_cycle(seq)) {
      Arrangement arr = realize_cycle(*c);
      return {*c, std::move(arr)};
    }
  }
}

/// Lines a x + b y = c with a in [1, 24], b in [-24, 24] and c = p/q,
/// p in [-24, 24], q in [1, 4]; a candidate is redrawn while it is parallel
/// to an earlier line or passes through an earlier vertex.
inline Arrangement gen_generic(int n, std::uint64_t seed) {
  if (n < 3) throw Error("n-out-of-range", std::to_string(n));
  Rng rng(seed);
  std::vector<Line> lines;
  std::vector<Point> vertices;
  while (static_cast<int>(lines.size()) < n) {
    Rat a(rng.between(1, 24));
    Rat b(rng.between(-24, 24));
    Rat c(Int(rng.between(-24, 24)), Int(rng.between(1, 4)));
    c.canonicalize();
    Line cand(a, b, c);
    bool ok = std::none_of(lines.begin(), lines.end(), [&](const Line& l) { return parallel(l, cand); }) &&
              std::none_of(vertices.begin(), vertices.end(), [&](const Point& v) { return side(cand, v) == 0; });
    if (!ok) continue;
    for (const Line& l : lines) vertices.push_back(intersect(l, cand));
    lines.push_back(cand);
  }
  return Arrangement::build(std::move(lines));
}

// ---------------------------------------------------------------------------
// Checks
// ---------------------------------------------------------------------------

enum class Family { Generic, Infinity, Cyclic };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::Generic:
      return "generic";
    case Family::Infinity:
      return "infinity";
    case Family::Cyclic:
      return "cyclic";
  }
  return "?";
}

inline Family parse_family(const std::string& s) {
  if (s == "generic") return Family::Generic;
  if (s == "infinity") return Family::Infinity;
  if (s == "cyclic") return Family::Cyclic;
  throw Error("bad-family", s);
}

/// What a check looks at: an arrangement, plus an infinity permutation, the
/// nomenclature it was generated from and a gonality cycle when known.
struct Subject {
  Arrangement arr;
  std::optional<Permutation> pi;
  std::optional<Nomenclature> source;
  std::optional<GonalityCycle> cycle;
};

/// Lazily computed facts shared by the checks of one subject.
class Probe {
 public:
  explicit Probe(Subject s) : subject_(std::move(s)) {}

  const Subject& subject() const { return subject_; }
  const Arrangement& arr() const { return subject_.arr; }

  const TriangleSet& oracle() {
    if (!oracle_) oracle_ = triangle_faces_oracle(subject_.arr);
    return *oracle_;
  }

  const FaceComplex& faces() {
    if (!faces_) faces_ = bounded_faces(subject_.arr);
    return *faces_;
  }

  /// Nomenclature along `pi`; nullopt without one.
  const std::optional<Nomenclature>& nomenclature() {
    if (!nom_done_) {
      nom_done_ = true;
      if (subject_.pi) nom_ = derive_nomenclature(subject_.arr, subject_.pi);
    }
    return nom_;
  }

 private:
  Subject subject_;
  std::optional<TriangleSet> oracle_;
  std::optional<FaceComplex> faces_;
  std::optional<Nomenclature> nom_;
  bool nom_done_ = false;
};

struct CheckResult {
  bool applicable = true;
  bool pass = true;
  std::string expected;
  std::string actual;

  static CheckResult skip() { return {false, true, {}, {}}; }
  static CheckResult compare(const std::string& expected, const std::string& actual) {
    return {true, expected == actual, expected, actual};
  }
};

struct Check {
  std::string name;
  std::function<CheckResult(Probe&)> run;
};

namespace detail {

inline std::string bool_text(bool b) { return b ? "true" : "false"; }

inline std::string at_infinity_row(const Arrangement& arr, const Permutation& pi) {
  std::string out;
  for (LineId id : pi) out += std::to_string(id) + ":" + bool_text(is_line_at_infinity_geom(arr, id)) + " ";
  return out;
}

inline CheckResult check_corner_lemma(Probe& p) {
  auto fmt = [](const std::set<IdPair>& s) {
    std::string out;
    for (auto [i, j] : s) out += "{" + std::to_string(i) + "," + std::to_string(j) + "}";
    return out;
  };
  return CheckResult::compare(fmt(corner_points(p.arr())), fmt(corner_points_by_quadrants(p.arr())));
}

inline CheckResult check_faces(Probe& p) {
  return CheckResult::compare(format_triangle_set(p.oracle()), format_triangle_set(triangles_of(p.faces())));
}

inline CheckResult check_vertices(Probe& p) {
  const Arrangement& arr = p.arr();
  for (LineId i = 1; i <= arr.size(); ++i)
    for (LineId j = i + 1; j <= arr.size(); ++j)
      if (side(arr.line(i), arr.vertex(i, j)) != 0 || side(arr.line(j), arr.vertex(i, j)) != 0)
        return {true, false, "vertex on both lines", "vertex " + std::to_string(i) + "," + std::to_string(j) + " off"};
  return {};
}

inline CheckResult check_translation(Probe& p) {
  Arrangement again = Arrangement::build(p.arr().lines());
  bool same = again.applied_translation().x == 0 && again.applied_translation().y == 0 &&
              again.lines() == p.arr().lines() && again.orders() == p.arr().orders();
  return {true, same, "unchanged", same ? "unchanged" : "moved to " + format_arr(again)};
}

inline CheckResult check_prefix(Probe& p) {
  if (!p.subject().pi) return CheckResult::skip();
  const Permutation& pi = *p.subject().pi;
  std::vector<bool> active(pi.size(), false);
  for (std::size_t l = 0; l < pi.size(); ++l) {
    active[pi[l] - 1] = true;
    if (l >= 3 && !at_infinity_within(p.arr(), pi[l], active))
      return {true, false, "every prefix line at infinity", "line " + std::to_string(pi[l]) + " is not"};
  }
  return {};
}

inline CheckResult check_thmB(Probe& p) {
  if (!p.nomenclature()) return CheckResult::skip();
  return CheckResult::compare(format_triangle_set(p.oracle()), format_triangle_set(thmB_triangles(*p.nomenclature())));
}

inline CheckResult check_infinity_line(Probe& p) {
  if (!p.nomenclature()) return CheckResult::skip();
  const Nomenclature& nom = *p.nomenclature();
  std::string geom, symb;
  for (int t = 1; t <= nom.size(); ++t) {
    geom += std::to_string(t) + ":" + bool_text(is_line_at_infinity_geom(p.arr(), nom.line_at(t))) + " ";
    symb += std::to_string(t) + ":" + bool_text(line_at_infinity_symbolic(nom, t)) + " ";
  }
  return CheckResult::compare(geom, symb);
}

inline CheckResult check_negation(Probe& p) {
  if (!p.nomenclature()) return CheckResult::skip();
  const Nomenclature& nom = *p.nomenclature();
  Arrangement mirror = realize_nomenclature(nom.negated());
  return CheckResult::compare(at_infinity_row(p.arr(), nom.permutation()), at_infinity_row(mirror, nom.permutation()));
}

inline CheckResult check_roundtrip(Probe& p) {
  if (!p.nomenclature()) return CheckResult::skip();
  const Nomenclature& nom = *p.nomenclature();
  if (p.subject().source && *p.subject().source != nom)
    return CheckResult::compare(format_nomenclature(*p.subject().source), format_nomenclature(nom));
  try {
    Arrangement again = realize_nomenclature(nom);
    return CheckResult::compare(format_nomenclature(nom),
                                format_nomenclature(derive_nomenclature(again, nom.permutation())));
  } catch (const Error& e) {
    return CheckResult::compare(format_nomenclature(nom), e.what());
  }
}

inline CheckResult check_necessary(Probe& p) {
  if (!p.nomenclature()) return CheckResult::skip();
  const Nomenclature& nom = *p.nomenclature();
  for (const Triple& t : p.oracle()) {
    std::array<int, 3> pos{nom.position_of(t[0]), nom.position_of(t[1]), nom.position_of(t[2])};
    std::sort(pos.begin(), pos.end());
    if (necessary_condition(nom, pos[0], pos[1], pos[2]) == NecessaryCase::None)
      return {true, false, "every triangle meets the necessary condition", "fails on " + format_triple(t)};
  }
  return {};
}

// On each of the two earlier sides of a triangle, the last side's crossing
// and the crossings of all other lines placed before it lie on opposite
// sides of the vertex of the two earlier sides.
inline CheckResult check_triangle_lemma(Probe& p) {
  if (!p.subject().pi) return CheckResult::skip();
  const Permutation& pi = *p.subject().pi;
  const Arrangement& arr = p.arr();
  std::vector<int> pos(pi.size() + 1);
  for (std::size_t l = 0; l < pi.size(); ++l) pos[pi[l]] = static_cast<int>(l);
  for (const Triple& t : p.oracle()) {
    std::array<LineId, 3> ids = t;
    std::sort(ids.begin(), ids.end(), [&](LineId x, LineId y) { return pos[x] < pos[y]; });
    const LineId last = ids[2];
    if (pos[last] < 3) continue;
    for (int side_k = 0; side_k < 2; ++side_k) {
      const LineId axis = ids[side_k];
      const LineId other = ids[1 - side_k];
      const int origin = arr.position(axis, other);
      const int dir = arr.position(axis, last) > origin ? 1 : -1;
      for (int l = 0; l < pos[last]; ++l) {
        LineId m = pi[l];
        if (m == axis || m == other) continue;
        if ((arr.position(axis, m) > origin ? 1 : -1) == dir)
          return {true, false, "opposite orders",
                  "triangle " + format_triple(t) + ", line " + std::to_string(m) + " on axis " + std::to_string(axis)};
      }
    }
  }
  return {};
}

inline CheckResult check_detect(Probe& p) {
  if (!p.subject().cycle) return CheckResult::skip();
  auto found = detect_gonality_cycle(p.faces(), p.arr().size());
  return CheckResult::compare(format_cycle(*p.subject().cycle), found ? format_cycle(*found) : "none");
}

inline CheckResult check_thmA(Probe& p) {
  if (!p.subject().cycle || p.subject().cycle->size() < 4) return CheckResult::skip();
  return CheckResult::compare(format_triangle_set(p.oracle()), format_triangle_set(thmA_triangles(*p.subject().cycle)));
}

inline CheckResult check_classes(Probe& p) {
  if (!p.subject().cycle) return CheckResult::skip();
  auto classes = triangle_equivalence_classes(p.oracle());
  return {true, classes.size() <= 2, "at most 2 classes", std::to_string(classes.size()) + " classes"};
}

inline CheckResult check_edge_adjacency(Probe& p) {
  if (!p.subject().cycle) return CheckResult::skip();
  auto bad = edge_adjacency_violation(p.faces(), p.arr().size());
  return {true, !bad, "n-gon, quadrilaterals and edge-adjacent triangles", bad.value_or("")};
}

inline CheckResult check_juxtaposition(Probe& p) {
  if (!p.subject().cycle) return CheckResult::skip();
  return CheckResult::compare(format_triangle_set(p.oracle()),
                              format_triangle_set(juxtaposed_triangles(*p.subject().cycle)));
}

inline CheckResult check_reconstruct(Probe& p) {
  const auto& c = p.subject().cycle;
  if (!c || c->size() < 4 || c->size() > 20) return CheckResult::skip();
  auto back = reconstruct_cycle(thmA_triangles(*c), c->size());
  return CheckResult::compare(format_cycle(*c), back ? format_cycle(*back) : "none");
}

}  // namespace detail

/// The differential checks, in report order. Each one skips itself when the
/// subject lacks what it needs (a permutation, a cycle).
inline std::vector<Check> standard_checks() {
  return {
      {"vertex-incidence", detail::check_vertices},
      {"translation-invariance", detail::check_translation},
      {"faces-vs-oracle", detail::check_faces},
      {"corner-lemma", detail::check_corner_lemma},
      {"prefix-at-infinity", detail::check_prefix},
      {"derive-realize-roundtrip", detail::check_roundtrip},
      {"thmB-vs-oracle", detail::check_thmB},
      {"necessary-condition", detail::check_necessary},
      {"triangle-lemma", detail::check_triangle_lemma},
      {"infinity-line-symbolic-vs-geometric", detail::check_infinity_line},
      {"negation-duality", detail::check_negation},
      {"detect-cycle", detail::check_detect},
      {"thmA-vs-oracle", detail::check_thmA},
      {"class-bound", detail::check_classes},
      {"edge-adjacency", detail::check_edge_adjacency},
      {"juxtaposition", detail::check_juxtaposition},
      {"reconstruct-cycle", detail::check_reconstruct},
  };
}

// ---------------------------------------------------------------------------
// Counterexamples
// ---------------------------------------------------------------------------

/// Text form of a subject:
///
///   pi 3 1 2 4
///   nomenclature 3^+1 1^-1 2^+1 4^-1
///   cycle (1 3 2 4)
///   arr v1 n=4
///   ...
///
/// Only the arr block is mandatory.
inline std::string serialize_subject(const Subject& s) {
  std::string out;
  if (s.pi) {
    out += "pi";
    for (LineId id : *s.pi) out += " " + std::to_string(id);
    out += "\n";
  }
  if (s.source) out += "nomenclature " + format_nomenclature(*s.source) + "\n";
  if (s.cycle) out += "cycle " + format_cycle(*s.cycle) + "\n";
  return out + format_arr(s.arr);
}

inline Subject parse_subject(const std::string& text) {
  std::istringstream in(text);
  std::string line, arr_text;
  std::optional<Permutation> pi;
  std::optional<Nomenclature> source;
  std::optional<GonalityCycle> cycle;
  bool in_arr = false;
  while (std::getline(in, line)) {
    if (!in_arr && line.rfind("pi", 0) == 0 && line.size() > 2 && line[2] == ' ') {
      std::istringstream ids(line.substr(3));
      pi.emplace();
      for (LineId id; ids >> id;) pi->push_back(id);
    } else if (!in_arr && line.rfind("nomenclature ", 0) == 0) {
      source = parse_nomenclature(line.substr(13));
    } else if (!in_arr && line.rfind("cycle ", 0) == 0) {
      cycle = parse_cycle(line.substr(6));
    } else {
      in_arr = in_arr || line.rfind("arr ", 0) == 0;
      arr_text += line + "\n";
    }
  }
  return Subject{parse_arr(arr_text), pi, source, cycle};
}

struct Counterexample {
  std::uint64_t trial = 0;
  std::string check;
  int original_n = 0;
  /// serialize_subject() of the shrunk subject.
  std::string subject;
  std::string expected;
  std::string actual;
};

/// Runs the named check on a serialized subject.
inline CheckResult rerun(const std::string& subject_text, const std::string& check_name,
                         const std::vector<Check>& extra = {}) {
  auto checks = standard_checks();
  checks.insert(checks.end(), extra.begin(), extra.end());
  for (const Check& c : checks) {
    if (c.name != check_name) continue;
    Probe probe(parse_subject(subject_text));
    return c.run(probe);
  }
  throw Error("unknown-check", check_name);
}

namespace detail {

inline Subject without_line(const Subject& s, LineId drop) {
  std::vector<LineId> keep;
  for (LineId id = 1; id <= s.arr.size(); ++id)
    if (id != drop) keep.push_back(id);
  Subject out{sub_arrangement(s.arr, keep), std::nullopt, std::nullopt, std::nullopt};
  if (s.pi) {
    out.pi.emplace();
    for (LineId id : *s.pi)
      if (id != drop) out.pi->push_back(id > drop ? id - 1 : id);
  }
  if (s.cycle) out.cycle = detect_gonality_cycle(out.arr);
  return out;
}

inline CheckResult run_guarded(const Check& check, Probe& probe) {
  try {
    return check.run(probe);
  } catch (const std::exception& e) {
    return {true, false, "no exception", e.what()};
  }
}

}  // namespace detail

/// Deletes one line at a time, keeping a deletion whenever `check` still
/// fails, down to 3 lines.
inline std::pair<Subject, CheckResult> shrink(Subject s, CheckResult failure, const Check& check) {
  bool progress = true;
  while (progress && s.arr.size() > 3) {
    progress = false;
    for (LineId drop = 1; drop <= s.arr.size(); ++drop) {
      Subject smaller = detail::without_line(s, drop);
      Probe probe(smaller);
      CheckResult r = detail::run_guarded(check, probe);
      if (r.applicable && !r.pass) {
        s = std::move(smaller);
        failure = std::move(r);
        progress = true;
        break;
      }
    }
  }
  return {std::move(s), std::move(failure)};
}

// ---------------------------------------------------------------------------
// Harness
// ---------------------------------------------------------------------------

struct FuzzConfig {
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  int n_min = 3;
  int n_max = 3;
  Family family = Family::Infinity;

  void validate() const {
    if (n_min < 3 || n_min > n_max) throw Error("bad-config", "need 3 <= n-min <= n-max");
    if (family == Family::Cyclic && n_min < 4) throw Error("bad-config", "cyclic family needs n-min >= 4");
    if (n_max > 40) throw Error("bad-config", "n-max above 40");
  }
};

struct CheckTally {
  std::string name;
  std::uint64_t pass = 0;
  std::uint64_t fail = 0;
};

struct FuzzReport {
  FuzzConfig config;
  std::uint64_t trials_run = 0;
  std::vector<CheckTally> checks;
  std::optional<Counterexample> counterexample;
  /// Trials where the largest-id greedy peel failed but backtracking found
  /// an infinity permutation.
  std::uint64_t note_violations = 0;
  /// Recorded, never asserted.
  std::vector<std::pair<std::string, std::uint64_t>> info;

  std::uint64_t failures() const {
    std::uint64_t f = 0;
    for (const auto& c : checks) f += c.fail;
    return f;
  }
};

namespace detail {

inline void bump(std::vector<std::pair<std::string, std::uint64_t>>& info, const std::string& key, bool hit) {
  for (auto& [k, v] : info)
    if (k == key) {
      v += hit ? 1 : 0;
      return;
    }
  info.emplace_back(key, hit ? 1 : 0);
}

}  // namespace detail

/// One subject per trial from the configured family, every applicable check
/// on each. Trial sizes and per-trial seeds come from one Rng on cfg.seed.
inline FuzzReport fuzz_differential(const FuzzConfig& cfg, const std::vector<Check>& extra = {}) {
  cfg.validate();
  auto checks = standard_checks();
  checks.insert(checks.end(), extra.begin(), extra.end());

  FuzzReport report;
  report.config = cfg;
  for (const Check& c : checks) report.checks.push_back({c.name});
  if (cfg.family == Family::Generic) {
    for (const char* key : {"infinity-type", "not-infinity-type", "realization-not-isomorphic", "isomorphism-readings-differ"})
      detail::bump(report.info, key, false);
  }

  Rng master(cfg.seed);
  for (std::uint64_t trial = 0; trial < cfg.trials; ++trial) {
    const int n = static_cast<int>(master.between(cfg.n_min, cfg.n_max));
    const std::uint64_t seed = master.next();

    std::optional<Subject> subject;
    switch (cfg.family) {
      case Family::Infinity: {
        auto [nom, arr] = gen_infinity_type(n, seed);
        Permutation pi = nom.permutation();
        subject = Subject{std::move(arr), std::move(pi), std::move(nom), std::nullopt};
        break;
      }
      case Family::Cyclic: {
        auto [cyc, arr] = gen_cyclic(n, seed);
        subject = Subject{std::move(arr), std::nullopt, std::nullopt, std::move(cyc)};
        break;
      }
      case Family::Generic: {
        Arrangement arr = gen_generic(n, seed);
        subject = Subject{std::move(arr), std::nullopt, std::nullopt, std::nullopt};
        break;
      }
    }

    auto canon = canonical_infinity_permutation(subject->arr);
    if (canon.note_violation()) ++report.note_violations;
    if (cfg.family == Family::Generic) {
      detail::bump(report.info, "infinity-type", canon.infinity_type());
      detail::bump(report.info, "not-infinity-type", !canon.infinity_type());
      if (canon.infinity_type()) {
        subject->pi = canon.best();
        Arrangement again = realize_nomenclature(derive_nomenclature(subject->arr, subject->pi));
        bool per_line = is_isomorphic_trivial(subject->arr, again);
        detail::bump(report.info, "realization-not-isomorphic", !per_line);
        detail::bump(report.info, "isomorphism-readings-differ",
                     per_line != is_isomorphic_trivial_uniform(subject->arr, again));
      }
    }

    Probe probe(*subject);
    for (std::size_t k = 0; k < checks.size(); ++k) {
      CheckResult r = detail::run_guarded(checks[k], probe);
      if (!r.applicable) continue;
      if (r.pass) {
        ++report.checks[k].pass;
        continue;
      }
      ++report.checks[k].fail;
      if (report.counterexample) continue;
      auto [small, why] = shrink(*subject, r, checks[k]);
      report.counterexample =
          Counterexample{trial, checks[k].name, n, serialize_subject(small), why.expected, why.actual};
    }
    ++report.trials_run;
  }
  return report;
}

inline std::string format_report(const FuzzReport& r) {
  std::ostringstream out;
  out << "fuzz family=" << family_name(r.config.family) << " seed=" << r.config.seed << " trials=" << r.config.trials
      << " n=" << r.config.n_min << ".." << r.config.n_max << "\n";
  out << "trials run: " << r.trials_run << "\n";
  for (const auto& c : r.checks) out << "check " << c.name << " pass=" << c.pass << " fail=" << c.fail << "\n";
  out << "note violations: " << r.note_violations << "\n";
  for (const auto& [k, v] : r.info) out << "info " << k << ": " << v << "\n";
  if (r.counterexample) {
    const auto& ce = *r.counterexample;
    out << "counterexample: check " << ce.check << ", trial " << ce.trial << ", n " << ce.original_n << " shrunk to "
        << parse_subject(ce.subject).arr.size() << "\n";
    out << "expected: " << ce.expected << "\n";
    out << "actual: " << ce.actual << "\n";
    out << ce.subject;
  }
  out << "result: " << (r.failures() == 0 ? "PASS" : "FAIL") << " (" << r.failures() << " failures)\n";
  return out.str();
}

inline nlohmann::ordered_json report_json(const FuzzReport& r) {
  nlohmann::ordered_json j;
  j["family"] = family_name(r.config.family);
  j["seed"] = r.config.seed;
  j["trials"] = r.config.trials;
  j["n_min"] = r.config.n_min;
  j["n_max"] = r.config.n_max;
  j["trials_run"] = r.trials_run;
  j["failures"] = r.failures();
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"fail", c.fail}});
  j["note_violations"] = r.note_violations;
  j["info"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.info) j["info"][k] = v;
  if (r.counterexample) {
    const auto& ce = *r.counterexample;
    j["counterexample"] = {{"trial", ce.trial},       {"check", ce.check},       {"original_n", ce.original_n},
                           {"subject", ce.subject},   {"expected", ce.expected}, {"actual", ce.actual}};
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

}  // namespace linarr
