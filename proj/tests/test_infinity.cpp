#include "linarr/infinity_theorems.hpp"
#include "support.hpp"

using namespace linarr;

TEST(ThmBIsTriangle, SevenLinesPositions) {
  Nomenclature nom = parse_nomenclature(fixtures::kSevenLines);
  EXPECT_TRUE(thmB_is_triangle(nom, 4, 5, 7));  // lines 7, 6, 5
  EXPECT_TRUE(thmB_is_triangle(nom, 1, 4, 5));  // lines 1, 7, 6
  EXPECT_TRUE(thmB_is_triangle(nom, 1, 2, 3));
  EXPECT_FALSE(thmB_is_triangle(nom, 1, 2, 4));  // lines 1, 2, 7
  EXPECT_FALSE(thmB_is_triangle(nom, 5, 6, 7));  // lines 6, 4, 5
  expect_code([&] { thmB_is_triangle(nom, 2, 1, 3); }, "bad-positions");
  expect_code([&] { thmB_is_triangle(nom, 1, 2, 8); }, "bad-positions");
}

TEST(ThmBTriangles, SevenLines) {
  EXPECT_EQ(thmB_triangles(parse_nomenclature(fixtures::kSevenLines)),
            (TriangleSet{{1, 2, 3}, {1, 2, 4}, {2, 3, 7}, {1, 6, 7}, {5, 6, 7}}));
}

TEST(ThmBTriangles, TwinsSameSets) {
  TriangleSet want{{1, 2, 4}, {1, 2, 5}, {1, 3, 5}, {2, 3, 6}, {4, 5, 6}};
  EXPECT_EQ(thmB_triangles(parse_nomenclature(fixtures::kTwinFirst)), want);
  EXPECT_EQ(thmB_triangles(parse_nomenclature(fixtures::kTwinSecond)), want);
}

TEST(ThmBTriangles, ThreeEntries) {
  EXPECT_EQ(thmB_triangles(parse_nomenclature("3^-1 1^-1 2^+1")), (TriangleSet{{1, 2, 3}}));
}

TEST(NecessaryCondition, Cases) {
  Nomenclature nom = parse_nomenclature(fixtures::kSevenLines);
  EXPECT_EQ(necessary_condition(nom, 4, 5, 7), NecessaryCase::Gap);   // 7, 6: nothing strictly between
  EXPECT_EQ(necessary_condition(nom, 1, 4, 5), NecessaryCase::Span);  // all of 1,2,3,7,6 in [1,7]
  EXPECT_EQ(necessary_condition(nom, 1, 3, 4), NecessaryCase::None);  // 2 lies between 1 and 3, 7 outside
  expect_code([&] { necessary_condition(nom, 3, 3, 4); }, "bad-positions");
}

TEST(Symbolic, LineFourExamples) {
  Nomenclature first = parse_nomenclature(fixtures::kTwinFirst);
  EXPECT_FALSE(line_at_infinity_symbolic(first, first.position_of(4)));
  Nomenclature seven = parse_nomenclature(fixtures::kSevenLines);
  EXPECT_TRUE(line_at_infinity_symbolic(seven, seven.position_of(4)));
}

TEST(Symbolic, TwinsSixthLine) {
  Nomenclature first = parse_nomenclature(fixtures::kTwinFirst);
  Nomenclature second = parse_nomenclature(fixtures::kTwinSecond);
  EXPECT_TRUE(line_at_infinity_symbolic(first, first.position_of(6)));
  EXPECT_FALSE(line_at_infinity_symbolic(second, second.position_of(6)));
}

TEST(Symbolic, LastPositionAlwaysTrue) {
  for (int n = 3; n <= 5; ++n)
    for (const Nomenclature& nom : fixtures::all_nomenclatures(n)) EXPECT_TRUE(line_at_infinity_symbolic(nom, n));
}

TEST(Symbolic, BadPosition) {
  Nomenclature nom = parse_nomenclature(fixtures::kSevenLines);
  expect_code([&] { line_at_infinity_symbolic(nom, 0); }, "bad-position");
  expect_code([&] { line_at_infinity_symbolic(nom, 8); }, "bad-position");
}

TEST(Symbolic, NegationInvariant) {
  for (int n = 3; n <= 6; ++n)
    for (const Nomenclature& nom : fixtures::all_nomenclatures(n))
      for (int t = 1; t <= n; ++t)
        ASSERT_EQ(line_at_infinity_symbolic(nom, t), line_at_infinity_symbolic(nom.negated(), t));
}

// Exhaustive differential check against the geometry for every nomenclature
// with at most six lines.
TEST(Exhaustive, ThmBAndSymbolicMatchGeometryUpToSix) {
  std::size_t checked = 0;
  for (int n = 3; n <= 6; ++n)
    for (const Nomenclature& nom : fixtures::all_nomenclatures(n)) {
      Arrangement arr = realize_nomenclature(nom);
      TriangleSet oracle = triangle_faces_oracle(arr);
      ASSERT_EQ(thmB_triangles(nom), oracle) << format_nomenclature(nom);
      for (int t = 1; t <= n; ++t)
        ASSERT_EQ(line_at_infinity_symbolic(nom, t), is_line_at_infinity_geom(arr, nom.line_at(t)))
            << format_nomenclature(nom) << " t=" << t;
      for (const Triple& tri : oracle) {
        std::array<int, 3> p{nom.position_of(tri[0]), nom.position_of(tri[1]), nom.position_of(tri[2])};
        std::sort(p.begin(), p.end());
        ASSERT_NE(necessary_condition(nom, p[0], p[1], p[2]), NecessaryCase::None);
      }
      ++checked;
    }
  EXPECT_EQ(checked, 12u + 96u + 960u + 11520u);
}
