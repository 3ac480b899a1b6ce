#include <gtest/gtest.h>

#include "reptopo/certificate.hpp"
#include "reptopo/families.hpp"

using namespace reptopo;

TEST(Certificate, LowerBoundForExactly42) {
  const auto k = generate(FamilySpec::exactly(4, 2));
  EXPECT_TRUE(certify_lower(k, 4).lower_ok);
  EXPECT_FALSE(certify_lower(k, 5).lower_ok);
  EXPECT_EQ(certify_lower(k, 4).pieces.size(), 4u);
}

TEST(Certificate, UpperBoundWitness) {
  const auto ub = upper_bound(generate(FamilySpec::exactly(4, 2)));
  EXPECT_EQ(ub.value, 4);
  EXPECT_EQ(ub.witness, CurveClass::meridian(0));
  EXPECT_EQ(upper_bound(generate(FamilySpec::torus(3, 5))).value, 3);
}

TEST(Certificate, ExactValues) {
  EXPECT_EQ(representativity_exact(generate(FamilySpec::exactly(4, 2))).exact, 4);
  EXPECT_EQ(representativity_exact(generate(FamilySpec::lpq(2, 7))).exact, 4);
  EXPECT_EQ(representativity_exact(generate(FamilySpec::exactly(6, 3))).exact, 6);
  EXPECT_EQ(representativity_exact(generate(FamilySpec::exactly(5, 1))).exact, 5);
}

// For odd n and g >= 2 the meridian pieces carry floor(n/2) arcs between
// circles 0 and 1, and an arc from circle 2 around circle 1 meets only those.
TEST(Certificate, OddNMeridianPiecesAdmitAShortArc) {
  const auto rep = representativity_exact(generate(FamilySpec::exactly(5, 2)));
  EXPECT_EQ(rep.lower, 4);
  EXPECT_EQ(rep.upper, 5);
  EXPECT_FALSE(rep.exact.has_value());
  EXPECT_EQ(rep.certificate.pieces[0].arc_min, 2);
}

TEST(Certificate, MonotoneInN) {
  for (const auto& spec : {FamilySpec::exactly(4, 3), FamilySpec::lpq(3, 10), FamilySpec::exactly(7, 2)}) {
    const auto k = generate(spec);
    bool previous = true;
    for (int n = 0; n <= 20; ++n) {
      const bool ok = certify_lower(k, n).lower_ok;
      if (!previous) EXPECT_FALSE(ok) << to_string(spec) << " n=" << n;
      previous = ok;
    }
  }
}

TEST(Certificate, HandEncodedPieces) {
  auto pants = [](const std::string& id, int m) {
    return PlanarPiece(id, 3, {{0, 1, m}, {1, 2, m}, {0, 2, m}});
  };
  const std::vector<PlanarPiece> pieces{pants("F1+", 2), pants("F1-", 2), pants("F2+", 7), pants("F2-", 7)};
  const auto cert = certify_pieces(pieces, 4, 4);
  EXPECT_TRUE(cert.lower_ok);
  EXPECT_EQ(cert.exact, 4);
  EXPECT_FALSE(certify_pieces(pieces, 5, 4).lower_ok);
  EXPECT_THROW(certify_pieces(std::vector<PlanarPiece>{}, 4), InputError);
}

TEST(Certificate, ArcBoundIsComparedExactly) {
  // arc minimum 2 certifies n = 4 but not n = 5 (2 < 5/2)
  const std::vector<PlanarPiece> pieces{PlanarPiece("P", 3, {{0, 1, 3}, {1, 2, 3}, {0, 2, 2}})};
  EXPECT_EQ(*min_essential_arc(pieces[0]), 2);
  EXPECT_TRUE(certify_pieces(pieces, 4).lower_ok);
  EXPECT_FALSE(certify_pieces(pieces, 5).lower_ok);
}

TEST(Certificate, JsonShape) {
  const auto k = generate(FamilySpec::exactly(4, 2));
  auto cert = certify_lower(k, 4);
  cert.upper = 4;
  const nlohmann::json j = cert;
  EXPECT_EQ(j["n"], 4);
  EXPECT_EQ(j["pieces"][0]["id"], "F1+");
  EXPECT_EQ(j["pieces"][0]["loop_min"], 4);
  EXPECT_EQ(j["pieces"][0]["arc_min"], 2);
  EXPECT_EQ(j["lower_ok"], true);
  EXPECT_EQ(j["upper"], 4);
  EXPECT_TRUE(j["exact"].is_null());  // settle() runs inside the certify functions
}
