#include "linarr/arrangement.hpp"
#include "linarr/cyclicity.hpp"
#include "linarr/nomenclature.hpp"
#include "support.hpp"

using namespace linarr;

namespace {

Arrangement three_lines() { return Arrangement::build({Line(1, 0, 1), Line(1, 1, 3), Line(1, -1, 0)}); }

Arrangement seven_lines() { return realize_nomenclature(parse_nomenclature(fixtures::kSevenLines)); }

// Positive diagonal stretch x -> 2x: keeps angle order and every incidence.
Arrangement stretched(const Arrangement& arr) {
  std::vector<Line> out;
  for (const Line& l : arr.lines()) out.emplace_back(l.a(), 2 * l.b(), 2 * l.c());
  return Arrangement::build(out);
}

}  // namespace

TEST(Build, SortsByAngleAndNormalizes) {
  Arrangement arr = three_lines();
  ASSERT_EQ(arr.size(), 3);
  EXPECT_EQ(arr.line(1), Line(1, -1, 1));
  EXPECT_EQ(arr.line(2), Line(1, 0, 2));
  EXPECT_EQ(arr.line(3), Line(1, 1, 4));
  EXPECT_EQ(arr.applied_translation(), (Point{1, 0}));
  EXPECT_EQ(arr.line(1).x_intercept(), 1);
  EXPECT_EQ(arr.line(2).x_intercept(), 2);
  EXPECT_EQ(arr.line(3).x_intercept(), 4);
  EXPECT_EQ(arr.vertex(1, 2), (Point{2, 1}));
  EXPECT_EQ(arr.vertex(1, 3), (Point{Rat(5, 2), Rat(3, 2)}));
}

TEST(Build, ConventionalEmbeddingHolds) {
  for (const char* c : {"(1 3 5 2 4 6)", "(1 2 4 3)", "(1 5 6 2 3 4 7)"}) {
    Arrangement arr = realize_cycle(parse_cycle(c));
    for (LineId i = 1; i <= arr.size(); ++i) {
      EXPECT_GT(arr.line(i).x_intercept(), 0);
      EXPECT_EQ(side(arr.line(i), Point{0, 0}), -1);
      for (LineId j = i + 1; j <= arr.size(); ++j) {
        EXPECT_GT(arr.vertex(i, j).x, 0);
        EXPECT_GT(arr.vertex(i, j).y, 0);
      }
    }
  }
}

TEST(Build, Rejections) {
  expect_code([] { Arrangement::build({Line(1, -1, 0), Line(2, -2, 5), Line(1, 0, 1)}); }, "parallel-lines");
  expect_code([] { Arrangement::build({Line(1, -1, 0), Line(1, 0, 1), Line(1, 1, 2)}); }, "concurrent-triple");
  expect_code([] { Arrangement::build({Line(1, 0, 1)}); }, "too-few-lines");
}

TEST(Build, ReNormalizingIsIdentity) {
  Arrangement arr = seven_lines();
  Arrangement again = Arrangement::build(arr.lines());
  EXPECT_EQ(again.applied_translation(), (Point{0, 0}));
  EXPECT_EQ(again.lines(), arr.lines());
  EXPECT_EQ(again.orders(), arr.orders());
}

TEST(LineOrders, RowsArePermutations) {
  Arrangement arr = seven_lines();
  for (LineId i = 1; i <= arr.size(); ++i) {
    auto row = arr.orders()[i - 1];
    std::sort(row.begin(), row.end());
    std::vector<LineId> want;
    for (LineId j = 1; j <= arr.size(); ++j)
      if (j != i) want.push_back(j);
    EXPECT_EQ(row, want);
  }
}

TEST(LineOrders, FollowIncreasingY) {
  Arrangement arr = seven_lines();
  for (LineId i = 1; i <= arr.size(); ++i) {
    const auto& row = arr.orders()[i - 1];
    for (std::size_t k = 1; k < row.size(); ++k) EXPECT_LT(arr.vertex(i, row[k - 1]).y, arr.vertex(i, row[k]).y);
  }
}

TEST(CornerPoints, ThreeLinesAllPairs) {
  std::set<IdPair> want{{1, 2}, {1, 3}, {2, 3}};
  EXPECT_EQ(corner_points(three_lines()), want);
}

TEST(CornerPoints, SevenLines) {
  std::set<IdPair> want{{3, 4}, {4, 5}, {5, 6}};
  EXPECT_EQ(corner_points(seven_lines()), want);
  EXPECT_EQ(corner_points_by_quadrants(seven_lines()), want);
}

TEST(CornerPoints, CycleQuadrilateralMatchesOrderTable) {
  Arrangement arr = realize_cycle(parse_cycle("(1 2 4 3)"));
  std::set<IdPair> brute;
  for (LineId i = 1; i <= 4; ++i)
    for (LineId j = i + 1; j <= 4; ++j) {
      const auto& ri = arr.orders()[i - 1];
      const auto& rj = arr.orders()[j - 1];
      bool end_i = ri.front() == j || ri.back() == j;
      bool end_j = rj.front() == i || rj.back() == i;
      if (end_i && end_j) brute.insert({i, j});
    }
  EXPECT_EQ(corner_points(arr), brute);
  EXPECT_EQ(corner_points_by_quadrants(arr), brute);
}

TEST(Oracle, ThreeLines) { EXPECT_EQ(triangle_faces_oracle(three_lines()), (TriangleSet{{1, 2, 3}})); }

TEST(Oracle, SevenLines) {
  TriangleSet want{{1, 2, 3}, {1, 2, 4}, {2, 3, 7}, {1, 6, 7}, {5, 6, 7}};
  EXPECT_EQ(triangle_faces_oracle(seven_lines()), want);
}

TEST(Faces, ThreeLinesOneTriangle) {
  auto faces = bounded_faces(three_lines());
  ASSERT_EQ(faces.size(), 1u);
  EXPECT_EQ(faces[0].lines, (std::vector<LineId>{1, 3, 2}));
}

TEST(Faces, QuadrilateralOnAllFourLines) {
  auto faces = bounded_faces(realize_cycle(parse_cycle("(1 2 4 3)")));
  int quads = 0;
  for (const Face& f : faces)
    if (f.edges() == 4) {
      ++quads;
      EXPECT_EQ(f.lines, (std::vector<LineId>{1, 2, 4, 3}));
    }
  EXPECT_EQ(quads, 1);
}

TEST(Faces, CountMatchesEuler) {
  // A simple arrangement of n lines has (n-1)(n-2)/2 bounded faces.
  Arrangement arr = seven_lines();
  EXPECT_EQ(bounded_faces(arr).size(), 15u);
  EXPECT_EQ(triangles_of(bounded_faces(arr)), triangle_faces_oracle(arr));
}

TEST(Isomorphism, Reflexive) {
  Arrangement arr = seven_lines();
  EXPECT_TRUE(is_isomorphic_trivial(arr, arr));
  EXPECT_TRUE(is_isomorphic_trivial_uniform(arr, arr));
}

TEST(Isomorphism, TwinsRealizationsDiffer) {
  Arrangement a = realize_nomenclature(parse_nomenclature(fixtures::kTwinFirst));
  Arrangement b = realize_nomenclature(parse_nomenclature(fixtures::kTwinSecond));
  EXPECT_FALSE(is_isomorphic_trivial(a, b));
  EXPECT_FALSE(is_isomorphic_trivial_uniform(a, b));
}

TEST(Isomorphism, TwoRealizationsOfOneCycle) {
  for (const char* c : {"(1 2 4 3)", "(1 3 4 2 5)", "(1 4 5 2 3 6)"}) {
    Arrangement a = realize_cycle(parse_cycle(c));
    Arrangement b = stretched(a);
    EXPECT_NE(a.lines(), b.lines());
    EXPECT_TRUE(is_isomorphic_trivial(a, b)) << c;
  }
}

TEST(Classes, SevenLinesTwoClasses) {
  auto classes = triangle_equivalence_classes(triangle_faces_oracle(seven_lines()));
  ASSERT_EQ(classes.size(), 2u);
  EXPECT_EQ(classes[0], (TriangleSet{{1, 2, 3}, {1, 2, 4}, {2, 3, 7}}));
  EXPECT_EQ(classes[1], (TriangleSet{{1, 6, 7}, {5, 6, 7}}));
}

TEST(Classes, SingletonAndChain) {
  EXPECT_EQ(triangle_equivalence_classes({{1, 2, 3}}).size(), 1u);
  EXPECT_EQ(triangle_equivalence_classes({{1, 3, 4}, {1, 2, 5}, {1, 3, 5}, {2, 3, 4}}).size(), 1u);
  EXPECT_EQ(triangle_equivalence_classes({{1, 2, 3}, {4, 5, 6}}).size(), 2u);
  EXPECT_TRUE(triangle_equivalence_classes({}).empty());
}

TEST(AtInfinity, ThreeLinesAllTrue) {
  Arrangement arr = three_lines();
  for (LineId id = 1; id <= 3; ++id) EXPECT_TRUE(is_line_at_infinity_geom(arr, id));
}

TEST(AtInfinity, SevenLinesMemberFive) {
  Arrangement arr = seven_lines();
  EXPECT_TRUE(is_line_at_infinity_geom(arr, 5));
  EXPECT_TRUE(is_line_at_infinity_geom(arr, 4));
  expect_code([&] { is_line_at_infinity_geom(arr, 8); }, "bad-line");
}

TEST(AtInfinity, ExternalLine) {
  Arrangement arr = three_lines();
  EXPECT_TRUE(is_line_at_infinity_geom(arr, Line(1, 2, 1000000)));
  expect_code([&] { is_line_at_infinity_geom(arr, Line(1, 1, 1000000)); }, "degenerate-extension");
  EXPECT_FALSE(is_line_at_infinity_geom(arr, Line(1, 2, 5)));
  expect_code([&] { is_line_at_infinity_geom(arr, Line(1, 0, 7)); }, "degenerate-extension");
  expect_code([&] { is_line_at_infinity_geom(arr, Line(1, 2, 4)); }, "degenerate-extension");  // through (2,1)
}

TEST(SubArrangement, RenumbersInOrder) {
  Arrangement arr = seven_lines();
  std::vector<LineId> keep{2, 5, 7};
  Arrangement sub = sub_arrangement(arr, keep);
  ASSERT_EQ(sub.size(), 3);
  EXPECT_TRUE(cmp_angle(sub.line(1), arr.line(2)) == 0);
  EXPECT_TRUE(cmp_angle(sub.line(2), arr.line(5)) == 0);
  EXPECT_TRUE(cmp_angle(sub.line(3), arr.line(7)) == 0);
}
