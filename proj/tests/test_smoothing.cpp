#include <gtest/gtest.h>

#include <numeric>

#include "oracles/counts.hpp"
#include "reptopo/families.hpp"
#include "reptopo/smoothing.hpp"

using namespace reptopo;

TEST(Smoothing, TorusComponentsMatchGcd) {
  for (int p = 1; p <= 12; ++p) {
    for (int q = 1; q <= 12; ++q) {
      const MultiCurve mc(SurfaceModel::standard_torus(), {q}, {p});
      EXPECT_EQ(trace_components(mc), oracle::euclid(p, q)) << p << "," << q;
    }
  }
}

TEST(Smoothing, OneFamilyOnlyGivesParallelCopies) {
  EXPECT_EQ(trace_components(MultiCurve(SurfaceModel::chain(2), {3, 0, 2}, {0, 0, 0})), 5);
  EXPECT_EQ(trace_components(MultiCurve(SurfaceModel::standard_torus(), {0}, {4})), 4);
}

TEST(Smoothing, ExactlyFamilyIsAKnot) {
  for (int n = 2; n <= 8; ++n) {
    for (int g = 1; g <= 3; ++g) {
      EXPECT_EQ(trace_components(generate(FamilySpec::exactly(n, g))), 1) << n << "," << g;
    }
  }
}

TEST(Smoothing, TorusExample) {
  EXPECT_EQ(trace_components(MultiCurve(SurfaceModel::standard_torus(), {3}, {2})), 1);
}

TEST(Smoothing, CrossingTableShape) {
  const auto mc = generate(FamilySpec::exactly(5, 3));
  const auto table = build_crossing_table(mc);
  int expected = 0;
  for (int j = 0; j <= 3; ++j) {
    for (int i = 0; i <= 3; ++i) expected += mc.longitudes()[j] * mc.meridians()[i] * pairing(mc.surface(), j, i);
  }
  EXPECT_EQ(static_cast<int>(table.crossings.size()), expected);
  for (int i = 0; i <= 3; ++i) {
    for (const auto& path : table.meridian_paths[i]) {
      EXPECT_EQ(static_cast<int>(path.size()), boundary_count(mc, CurveClass::meridian(i)));
    }
  }
  for (int j = 0; j <= 3; ++j) {
    for (const auto& path : table.longitude_paths[j]) {
      EXPECT_EQ(static_cast<int>(path.size()), boundary_count(mc, CurveClass::longitude(j)));
    }
  }
  // every crossing appears once on a meridian copy and once on a longitude copy
  std::vector<int> seen(table.crossings.size(), 0);
  for (const auto& copies : table.meridian_paths)
    for (const auto& path : copies)
      for (int c : path) ++seen[c];
  for (const auto& copies : table.longitude_paths)
    for (const auto& path : copies)
      for (int c : path) ++seen[c];
  for (int s : seen) EXPECT_EQ(s, 2);
}

TEST(Smoothing, SignsAroundTheCycle) {
  const auto s = SurfaceModel::chain(3);
  for (int j = 0; j <= 3; ++j) {
    const auto m = crossed_meridians(s, j);
    EXPECT_NE(crossing_sign(s, j, m[0]), crossing_sign(s, j, m[1]));
  }
}

TEST(Smoothing, CutAlongMeridiansExactly42) {
  const auto [plus, minus] = cut_pieces(generate(FamilySpec::exactly(4, 2)), CutSide::AlongMeridians);
  EXPECT_EQ(plus.piece, "F1+");
  EXPECT_EQ(minus.piece, "F1-");
  EXPECT_EQ(plus.arcs, minus.arcs);
  const std::vector<ArcClass> want{{0, 2, 2}, {0, 1, 2}, {1, 2, 2}};
  EXPECT_EQ(plus.arcs, want);
  EXPECT_EQ(plus.circles, 3);
}

TEST(Smoothing, CutAlongLongitudesExactly42) {
  const auto [plus, minus] = cut_pieces(generate(FamilySpec::exactly(4, 2)), CutSide::AlongLongitudes);
  EXPECT_EQ(plus.piece, "F2+");
  const std::vector<ArcClass> want{{0, 1, 5}, {1, 2, 4}, {0, 2, 2}};
  EXPECT_EQ(plus.arcs, want);
  EXPECT_EQ(minus.arcs, want);
}

TEST(Smoothing, CutLpq) {
  const auto [plus, minus] = cut_pieces(generate(FamilySpec::lpq(2, 7)), CutSide::AlongMeridians);
  ASSERT_EQ(plus.arcs.size(), 3u);
  for (const auto& arc : plus.arcs) EXPECT_EQ(arc.mult, 2);
}

TEST(Smoothing, GenusOneMergesParallelClasses) {
  const auto [plus, minus] = cut_pieces(generate(FamilySpec::exactly(4, 1)), CutSide::AlongMeridians);
  const std::vector<ArcClass> want{{0, 1, 4}};
  EXPECT_EQ(plus.arcs, want);
}

TEST(Smoothing, TorusCannotBeCut) {
  EXPECT_THROW(cut_pieces(generate(FamilySpec::torus(2, 3)), CutSide::AlongMeridians), InputError);
}
