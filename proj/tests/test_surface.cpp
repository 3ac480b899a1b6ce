#include <gtest/gtest.h>

#include <array>
#include <vector>

#include "oracles/counts.hpp"
#include "reptopo/families.hpp"
#include "reptopo/surface.hpp"

using namespace reptopo;

TEST(Surface, ClassCounts) {
  EXPECT_EQ(SurfaceModel::standard_torus().class_count(), 1);
  EXPECT_EQ(SurfaceModel::chain(1).class_count(), 2);
  EXPECT_EQ(SurfaceModel::chain(4).class_count(), 5);
  EXPECT_THROW(SurfaceModel::chain(0), InputError);
}

TEST(Surface, PairingExamples) {
  const auto s = SurfaceModel::chain(2);
  EXPECT_EQ(pairing(s, 1, 0), 1);
  EXPECT_EQ(pairing(s, 1, 2), 0);
  EXPECT_EQ(pairing(s, 0, 2), 1);
  EXPECT_EQ(pairing(SurfaceModel::standard_torus(), 0, 0), 1);
  EXPECT_THROW(pairing(s, 3, 0), InputError);
  EXPECT_THROW(pairing(s, 0, -1), InputError);
}

TEST(Surface, EveryClassMeetsTwoOthers) {
  for (int g = 1; g <= 6; ++g) {
    const auto s = SurfaceModel::chain(g);
    for (int x = 0; x <= g; ++x) {
      int row = 0, col = 0;
      for (int y = 0; y <= g; ++y) {
        row += pairing(s, x, y);
        col += pairing(s, y, x);
      }
      EXPECT_EQ(row, 2) << "g=" << g << " l" << x;
      EXPECT_EQ(col, 2) << "g=" << g << " m" << x;
    }
  }
}

// All 0/1 3x3 matrices with row and column sums 2; only the cyclic closed form
// reproduces every stated count for K(n, 2) and L(p, q).
TEST(Surface, PairingMatrixIsPinnedByTheCounts) {
  std::vector<std::array<std::array<int, 3>, 3>> candidates;
  for (int bits = 0; bits < 512; ++bits) {
    std::array<std::array<int, 3>, 3> m{};
    for (int k = 0; k < 9; ++k) m[k / 3][k % 3] = bits >> k & 1;
    bool ok = true;
    for (int x = 0; x < 3; ++x) {
      ok = ok && m[x][0] + m[x][1] + m[x][2] == 2 && m[0][x] + m[1][x] + m[2][x] == 2;
    }
    if (ok) candidates.push_back(m);
  }
  ASSERT_EQ(candidates.size(), 6u);

  auto reproduces = [](const std::array<std::array<int, 3>, 3>& m) {
    for (int n = 2; n <= 8; ++n) {
      const auto mc = generate(FamilySpec::exactly(n, 2));
      const auto want = oracle::exactly_counts(n, 2);
      for (int i = 0; i < 3; ++i) {
        int mi = 0, li = 0;
        for (int k = 0; k < 3; ++k) {
          mi += mc.longitudes()[k] * m[k][i];
          li += mc.meridians()[k] * m[i][k];
        }
        if (mi != want.at("m" + std::to_string(i)) || li != want.at("l" + std::to_string(i))) return false;
      }
    }
    for (int p = 1; p <= 3; ++p) {
      const auto mc = generate(FamilySpec::lpq(p, 3 * p + 1));
      for (int i = 0; i < 3; ++i) {
        int mi = 0;
        for (int k = 0; k < 3; ++k) mi += mc.longitudes()[k] * m[k][i];
        if (mi != 2 * p) return false;
      }
    }
    return true;
  };

  int matches = 0;
  for (const auto& m : candidates) {
    if (!reproduces(m)) continue;
    ++matches;
    const auto s = SurfaceModel::chain(2);
    for (int j = 0; j < 3; ++j) {
      for (int i = 0; i < 3; ++i) EXPECT_EQ(m[j][i], pairing(s, j, i)) << j << "," << i;
    }
  }
  EXPECT_EQ(matches, 1);
}

TEST(Surface, BoundaryCountExample) {
  const auto k = generate(FamilySpec::exactly(4, 2));
  EXPECT_EQ(boundary_count(k, CurveClass::meridian(0)), 4);
  EXPECT_EQ(boundary_count(k, CurveClass::longitude(1)), 9);
}

TEST(Surface, MultiCurveValidation) {
  const auto s = SurfaceModel::chain(2);
  EXPECT_THROW(MultiCurve(s, {1, 1}, {1, 1, 1}), InputError);
  EXPECT_THROW(MultiCurve(s, {1, -1, 1}, {1, 1, 1}), InputError);
  EXPECT_THROW(MultiCurve(s, {0, 0, 0}, {0, 0, 0}), InputError);
  EXPECT_NO_THROW(MultiCurve(s, {0, 0, 1}, {0, 0, 0}));
  const MultiCurve mc(s, {1, 2, 3}, {4, 5, 6});
  EXPECT_EQ(mc.coefficient(CurveClass::longitude(2)), 6);
  EXPECT_THROW(mc.coefficient(CurveClass::meridian(3)), InputError);
}

TEST(Surface, JsonRoundTrip) {
  const MultiCurve mc(SurfaceModel::chain(2), {7, 7, 7}, {2, 2, 2});
  const nlohmann::json j = mc;
  EXPECT_EQ(j.dump(), R"({"longitudes":[2,2,2],"meridians":[7,7,7],"surface":{"genus":2,"kind":"chain"}})");
  EXPECT_EQ(multicurve_from_json(j), mc);
  const nlohmann::json torus = MultiCurve(SurfaceModel::standard_torus(), {3}, {2});
  EXPECT_EQ(multicurve_from_json(torus).surface(), SurfaceModel::standard_torus());
  EXPECT_THROW(multicurve_from_json(nlohmann::json::parse(R"({"surface":{"kind":"klein"}})")), InputError);
  EXPECT_THROW(multicurve_from_json(nlohmann::json::parse(R"({"meridians":[1]})")), InputError);
}
