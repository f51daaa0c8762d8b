#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "linarr/linarr.hpp"

using namespace linarr;

namespace {

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kInvalid = 2;

void print_triangles(const TriangleSet& set) {
  for (const Triple& t : set) std::cout << format_triple(t) << "\n";
}

std::string format_pairs(const std::set<IdPair>& pairs) {
  std::string out;
  for (auto [i, j] : pairs) out += (out.empty() ? "" : " ") + std::string("{") + std::to_string(i) + "," + std::to_string(j) + "}";
  return out.empty() ? "none" : out;
}

int cmd_analyze(const std::string& path) {
  Arrangement arr = load_arr(path);
  const int n = arr.size();
  std::cout << "lines: " << n << "\n";
  std::cout << "id order:";
  for (LineId id = 1; id <= n; ++id) std::cout << " " << id;
  std::cout << "\n";
  std::cout << "corner points: " << format_pairs(corner_points(arr)) << "\n";

  TriangleSet oracle = triangle_faces_oracle(arr);
  auto canon = canonical_infinity_permutation(arr);
  std::optional<Nomenclature> nom;
  if (canon.infinity_type()) {
    nom = derive_nomenclature(arr, canon.best());
    std::cout << "nomenclature: " << format_nomenclature(*nom) << "\n";
    if (canon.note_violation()) std::cout << "note: greedy peel failed, permutation found by backtracking\n";
  } else {
    std::cout << "nomenclature: not infinity-type\n";
  }
  auto cycle = detect_gonality_cycle(arr);
  std::cout << "gonality cycle: " << (cycle ? format_cycle(*cycle) : "none") << "\n";

  std::cout << "triangles oracle: " << format_triangle_set(oracle) << "\n";
  bool agree = true;
  if (nom) {
    TriangleSet b = thmB_triangles(*nom);
    agree = agree && b == oracle;
    std::cout << "triangles thmB: " << format_triangle_set(b) << "\n";
  }
  if (cycle && n >= 4) {
    TriangleSet a = thmA_triangles(*cycle);
    agree = agree && a == oracle;
    std::cout << "triangles thmA: " << format_triangle_set(a) << "\n";
  }
  std::cout << "classes:";
  for (const TriangleSet& cls : triangle_equivalence_classes(oracle)) std::cout << " " << format_triangle_set(cls);
  std::cout << "\n";
  if (!agree) {
    std::cerr << "methods disagree\n";
    return kFalse;
  }
  return kOk;
}

int cmd_triangles(const std::string& path, const std::string& nom_text, const std::string& cycle_text,
                  const std::string& method) {
  const int sources = !path.empty() + !nom_text.empty() + !cycle_text.empty();
  if (sources != 1) throw Error("usage", "give exactly one of <file>, --nomenclature, --cycle");

  if (method == "thmB") {
    if (!cycle_text.empty()) throw Error("usage", "thmB needs a nomenclature or an arrangement file");
    std::optional<Nomenclature> nom;
    if (!nom_text.empty()) {
      nom = parse_nomenclature(nom_text);
    } else {
      Arrangement arr = load_arr(path);
      auto canon = canonical_infinity_permutation(arr);
      if (!canon.infinity_type()) throw Error("not-infinity-type", path);
      nom = derive_nomenclature(arr, canon.best());
    }
    print_triangles(thmB_triangles(*nom));
    return kOk;
  }
  if (method == "thmA") {
    std::optional<GonalityCycle> cycle;
    if (!cycle_text.empty()) {
      cycle = parse_cycle(cycle_text);
    } else {
      if (!nom_text.empty()) throw Error("usage", "thmA needs a cycle or an arrangement file");
      cycle = detect_gonality_cycle(load_arr(path));
      if (!cycle) throw Error("no-gonality-cycle", path);
    }
    print_triangles(thmA_triangles(*cycle));
    return kOk;
  }
  // oracle
  if (!path.empty()) {
    print_triangles(triangle_faces_oracle(load_arr(path)));
  } else if (!nom_text.empty()) {
    print_triangles(triangle_faces_oracle(realize_nomenclature(parse_nomenclature(nom_text))));
  } else {
    print_triangles(triangle_faces_oracle(realize_cycle(parse_cycle(cycle_text))));
  }
  return kOk;
}

int cmd_infinity_line(const std::string& nom_text, LineId id, const std::string& method) {
  Nomenclature nom = parse_nomenclature(nom_text);
  if (id < 1 || id > nom.size()) throw Error("bad-line", std::to_string(id));
  bool at_infinity = method == "geometric" ? is_line_at_infinity_geom(realize_nomenclature(nom), id)
                                           : line_at_infinity_symbolic(nom, nom.position_of(id));
  std::cout << (at_infinity ? "true" : "false") << "\n";
  return at_infinity ? kOk : kFalse;
}

int cmd_realize(const std::string& nom_text, const std::string& cycle_text, const std::string& out) {
  if (nom_text.empty() == cycle_text.empty()) throw Error("usage", "give exactly one of --nomenclature, --cycle");
  Arrangement arr = nom_text.empty() ? realize_cycle(parse_cycle(cycle_text))
                                     : realize_nomenclature(parse_nomenclature(nom_text));
  std::string header = nom_text.empty() ? "# cycle " + cycle_text + "\n" : "# nomenclature " + nom_text + "\n";
  if (out.empty() || out == "-")
    std::cout << header << format_arr(arr);
  else
    write_text_file(out, header + format_arr(arr));
  return kOk;
}

int cmd_census(int n) {
  if (n < 3 || n > 30) throw Error("n-out-of-range", "census supports 3 <= n <= 30");
  const std::uint64_t count = for_each_cycle(n, [](const GonalityCycle&) {});
  const std::uint64_t formula = cycle_count_formula(n);
  std::cout << "valid cycles: " << count << " (formula 2^{n-1}-n = " << formula << ")\n";
  return count == formula ? kOk : kFalse;
}

int cmd_fuzz(const std::string& family, std::uint64_t trials, int n_min, int n_max, std::uint64_t seed,
             const std::string& format, const std::string& json_out) {
  FuzzConfig cfg{seed, trials, n_min, n_max, parse_family(family)};
  FuzzReport report = fuzz_differential(cfg);
  if (format == "json")
    std::cout << report_json(report).dump(2) << "\n";
  else
    std::cout << format_report(report);
  if (!json_out.empty()) write_text_file(json_out, report_json(report).dump(2) + "\n");
  return report.failures() == 0 ? kOk : kFalse;
}

int cmd_render(const std::string& path, const std::string& out, const std::string& padding, bool no_labels,
               bool no_shade) {
  Arrangement arr = load_arr(path);
  RenderSpec spec;
  spec.padding = parse_rat(padding);
  spec.labels = !no_labels;
  spec.shade_triangles = !no_shade;
  std::string svg = render_svg(arr, spec, triangle_faces_oracle(arr));
  if (out.empty() || out == "-")
    std::cout << svg;
  else
    write_text_file(out, svg);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of line arrangements: triangles, lines at infinity, gonality cycles."};
  app.require_subcommand(1);

  std::string file, nom_text, cycle_text, method = "oracle", out, family = "infinity", format = "text", json_out;
  std::string padding = "1";
  LineId line_id = 0;
  int n = 0, n_min = 3, n_max = 10;
  std::uint64_t trials = 100, seed = 1;
  bool no_labels = false, no_shade = false;

  auto* analyze = app.add_subcommand("analyze", "Summarize an arrangement file");
  analyze->add_option("file", file, "arr v1 file")->required();

  auto* triangles = app.add_subcommand("triangles", "List triangles, one \"i j k\" per line");
  triangles->add_option("file", file, "arr v1 file");
  triangles->add_option("--nomenclature", nom_text, "e.g. \"1^+1 2^-1 3^+1\"");
  triangles->add_option("--cycle", cycle_text, "e.g. \"(1 3 2 4)\"");
  triangles->add_option("--method", method)->check(CLI::IsMember({"oracle", "thmA", "thmB"}));

  auto* infinity = app.add_subcommand("infinity-line", "Is the line at infinity? Prints true/false");
  infinity->add_option("--nomenclature", nom_text)->required();
  infinity->add_option("--line", line_id, "line id")->required();
  std::string inf_method = "symbolic";
  infinity->add_option("--method", inf_method)->check(CLI::IsMember({"symbolic", "geometric"}));

  auto* realize = app.add_subcommand("realize", "Write an arrangement realizing a nomenclature or cycle");
  realize->add_option("--nomenclature", nom_text);
  realize->add_option("--cycle", cycle_text);
  realize->add_option("-o,--output", out, "output file (default stdout)");

  auto* census = app.add_subcommand("census", "Count valid gonality cycles");
  census->add_option("-n", n)->required();

  auto* fuzz = app.add_subcommand("fuzz", "Differential fuzzing");
  fuzz->add_option("--family", family)->check(CLI::IsMember({"generic", "infinity", "cyclic"}));
  fuzz->add_option("--trials", trials);
  fuzz->add_option("--n-min", n_min);
  fuzz->add_option("--n-max", n_max);
  fuzz->add_option("--seed", seed);
  fuzz->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  fuzz->add_option("--json", json_out, "also write the JSON summary to this file");

  auto* render = app.add_subcommand("render", "Draw an arrangement as SVG");
  render->add_option("file", file)->required();
  render->add_option("-o,--output", out, "output file (default stdout)");
  render->add_option("--padding", padding, "rational margin around the vertices");
  render->add_flag("--no-labels", no_labels);
  render->add_flag("--no-shade", no_shade);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (*analyze) return cmd_analyze(file);
    if (*triangles) return cmd_triangles(file, nom_text, cycle_text, method);
    if (*infinity) return cmd_infinity_line(nom_text, line_id, inf_method);
    if (*realize) return cmd_realize(nom_text, cycle_text, out);
    if (*census) return cmd_census(n);
    if (*fuzz) return cmd_fuzz(family, trials, n_min, n_max, seed, format, json_out);
    if (*render) return cmd_render(file, out, padding, no_labels, no_shade);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}
