#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <json.hpp>
#include <string>

namespace {

struct Result {
  int code;
  std::string out;
};

// Runs the CLI through the shell; `redirect` picks which stream is captured.
Result cli(const std::string& args, const std::string& redirect = "2>/dev/null") {
  std::string cmd = std::string("'") + LINARR_CLI + "' " + args + " " + redirect;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Result cli_stderr(const std::string& args) { return cli(args, "2>&1 >/dev/null"); }

std::string sample(const std::string& name) { return std::string("'") + LINARR_SAMPLES + "/" + name + "'"; }

std::string tmp(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("linarr_cli_" + name)).string();
}

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++n;
  return n;
}

const std::string kSevenLines = "\"1^+1 2^-1 3^+1 7^+1 6^+1 4^-1 5^+1\"";
const std::string kSevenTriangles = "1 2 3\n1 2 4\n1 6 7\n2 3 7\n5 6 7\n";

}  // namespace

TEST(Cli, TrianglesThmBFromNomenclature) {
  Result r = cli("triangles --nomenclature " + kSevenLines + " --method thmB");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, kSevenTriangles);
}

TEST(Cli, TrianglesOracleFromNomenclatureAndFile) {
  EXPECT_EQ(cli("triangles --nomenclature " + kSevenLines + " --method oracle").out, kSevenTriangles);
  EXPECT_EQ(cli("triangles " + sample("seven_lines.arr")).out, kSevenTriangles);
  EXPECT_EQ(cli("triangles " + sample("seven_lines.arr") + " --method thmB").out, kSevenTriangles);
}

TEST(Cli, TrianglesThmA) {
  Result r = cli("triangles --cycle \"(1 2 4 3)\" --method thmA");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1 2 3\n1 2 4\n");
  EXPECT_EQ(cli("triangles " + sample("cycle_13425.arr") + " --method thmA").out, "1 2 5\n1 3 4\n1 3 5\n2 3 4\n");
  Result none = cli_stderr("triangles " + sample("seven_lines.arr") + " --method thmA");
  EXPECT_EQ(none.code, 2);
  EXPECT_NE(none.out.find("no-gonality-cycle"), std::string::npos);
}

TEST(Cli, TrianglesNeedsOneSource) {
  EXPECT_EQ(cli("triangles --method oracle").code, 2);
  EXPECT_EQ(cli("triangles " + sample("seven_lines.arr") + " --nomenclature " + kSevenLines).code, 2);
  EXPECT_EQ(cli("triangles " + sample("seven_lines.arr") + " --method euler").code, 2);
}

TEST(Cli, Census) {
  Result r = cli("census -n 5");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "valid cycles: 11 (formula 2^{n-1}-n = 11)\n");
  EXPECT_EQ(cli("census -n 16").out, "valid cycles: 32752 (formula 2^{n-1}-n = 32752)\n");
  EXPECT_EQ(cli("census -n 2").code, 2);
}

TEST(Cli, InfinityLine) {
  const std::string first = "\"1^+1 2^-1 5^+1 3^+1 4^-1 6^+1\"";
  Result r = cli("infinity-line --nomenclature " + first + " --line 4");
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "false\n");
  Result g = cli("infinity-line --nomenclature " + first + " --line 4 --method geometric");
  EXPECT_EQ(g.code, 1);
  EXPECT_EQ(g.out, "false\n");
  Result t = cli("infinity-line --nomenclature " + kSevenLines + " --line 4");
  EXPECT_EQ(t.code, 0);
  EXPECT_EQ(t.out, "true\n");
  EXPECT_EQ(cli("infinity-line --nomenclature " + kSevenLines + " --line 9").code, 2);
}

TEST(Cli, InvalidInputDiagnostics) {
  Result bad = cli_stderr("infinity-line --nomenclature \"1^+1 2^x 3^+1\" --line 1");
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.out.find("bad-token"), std::string::npos);
  Result missing = cli_stderr("analyze /nonexistent/file.arr");
  EXPECT_EQ(missing.code, 2);
  EXPECT_NE(missing.out.find("io-error"), std::string::npos);
  Result order = cli_stderr("analyze " + sample("misordered.arr"));
  EXPECT_EQ(order.code, 2);
  EXPECT_NE(order.out.find("suggested relabeling"), std::string::npos);
  EXPECT_EQ(cli("no-such-command").code, 2);
  EXPECT_EQ(cli("").code, 2);
}

TEST(Cli, AnalyzeSevenLines) {
  Result r = cli("analyze " + sample("seven_lines.arr"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("corner points: {3,4} {4,5} {5,6}\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("gonality cycle: none\n"), std::string::npos);
  EXPECT_NE(r.out.find("triangles oracle: {{1,2,3},{1,2,4},{1,6,7},{2,3,7},{5,6,7}}\n"), std::string::npos);
  EXPECT_NE(r.out.find("triangles thmB: {{1,2,3},{1,2,4},{1,6,7},{2,3,7},{5,6,7}}\n"), std::string::npos);
  EXPECT_NE(r.out.find("classes: {{1,2,3},{1,2,4},{2,3,7}} {{1,6,7},{5,6,7}}\n"), std::string::npos);
}

TEST(Cli, RealizeThenAnalyze) {
  std::string path = tmp("cycle.arr");
  EXPECT_EQ(cli("realize --cycle \"(1 3 4 2 5)\" -o '" + path + "'").code, 0);
  Result r = cli("analyze '" + path + "'");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("gonality cycle: (1 3 4 2 5)\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("triangles thmA: {{1,2,5},{1,3,4},{1,3,5},{2,3,4}}\n"), std::string::npos);

  std::string npath = tmp("nom.arr");
  EXPECT_EQ(cli("realize --nomenclature \"1^+1 2^-1 5^+1 3^+1 6^+1 4^-1\" -o '" + npath + "'").code, 0);
  EXPECT_EQ(cli("triangles '" + npath + "'").out, "1 2 4\n1 2 5\n1 3 5\n2 3 6\n4 5 6\n");
  EXPECT_EQ(cli("realize --cycle \"(1 2 3)\"").code, 2);
  EXPECT_EQ(cli("realize").code, 2);
  std::filesystem::remove(path);
  std::filesystem::remove(npath);
}

TEST(Cli, RealizeToStdoutIsStable) {
  Result a = cli("realize --nomenclature " + kSevenLines);
  Result b = cli("realize --nomenclature " + kSevenLines);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("arr v1 n=7\n"), std::string::npos);
}

TEST(Cli, FuzzTextAndJson) {
  const std::string args = "fuzz --family infinity --trials 40 --n-min 3 --n-max 8 --seed 5";
  Result text = cli(args);
  EXPECT_EQ(text.code, 0);
  EXPECT_NE(text.out.find("result: PASS (0 failures)"), std::string::npos);
  EXPECT_EQ(text.out, cli(args).out);
  Result json = cli(args + " --format json");
  EXPECT_EQ(json.code, 0);
  auto j = nlohmann::json::parse(json.out);
  EXPECT_EQ(j["trials_run"], 40);
  EXPECT_EQ(j["failures"], 0);
  EXPECT_EQ(cli("fuzz --family cyclic --n-min 3 --n-max 5").code, 2);
  EXPECT_EQ(cli("fuzz --family projective").code, 2);
}

TEST(Cli, Render) {
  std::string path = tmp("seven_lines.svg");
  EXPECT_EQ(cli("render " + sample("seven_lines.arr") + " -o '" + path + "'").code, 0);
  Result svg = cli("render " + sample("seven_lines.arr"));
  EXPECT_EQ(count(svg.out, "<line "), 7u);
  EXPECT_EQ(count(svg.out, "<polygon"), 5u);
  EXPECT_EQ(svg.out, cli("render " + sample("seven_lines.arr")).out);
  EXPECT_EQ(count(cli("render " + sample("seven_lines.arr") + " --no-labels --no-shade").out, "<text"), 0u);
  EXPECT_EQ(cli("render " + sample("seven_lines.arr") + " --padding -1").code, 2);
  std::filesystem::remove(path);
}
