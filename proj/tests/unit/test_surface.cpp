#include <gtest/gtest.h>

#include "cytforge/model_io.hpp"
#include "cytforge/surface.hpp"

using namespace cytforge;

TEST(Models, BuiltIns) {
  SurfaceModel b2 = blowup_cp2(2, Position::General);
  EXPECT_EQ(b2.rank(), 3u);
  EXPECT_EQ(b2.c1, (CohClass{3, -1, -1}));
  EXPECT_EQ(b2.intersect(b2.c1, b2.c1), Scalar(7));

  SurfaceModel q = quadric();
  EXPECT_EQ(q.c1, (CohClass{2, 2}));
  EXPECT_EQ(q.intersect(q.c1, q.c1), Scalar(8));

  SurfaceModel p = projective_plane();
  EXPECT_EQ(p.rank(), 1u);
  EXPECT_EQ(p.c1, (CohClass{3}));
}

TEST(Models, AnticanonicalDegree) {
  const int expected[] = {8, 7, 6, 5, 4, 3, 2, 1, 0, -1, -2, -3};
  for (int k = 1; k <= 12; ++k) {
    SurfaceModel m = blowup_cp2(k, k <= 8 ? Position::General : Position::OnCubic);
    EXPECT_EQ(m.intersect(m.c1, m.c1), Scalar(9 - k)) << k;
    EXPECT_EQ(m.intersect(m.c1, m.c1), Scalar(expected[k - 1]));
  }
}

TEST(Models, PositionPreconditions) {
  EXPECT_THROW(blowup_cp2(9, Position::General), Error);
  EXPECT_THROW(blowup_cp2(0, Position::General), Error);
  EXPECT_NO_THROW(blowup_cp2(12, Position::OnCubic));
}

TEST(Models, CustomValidation) {
  EXPECT_THROW(custom_model("bad", {"A", "B"}, IntMatrix::from_rows({{1, 2}, {0, 1}}), CohClass{1, 0}, std::nullopt,
                            std::nullopt),
               Error);
  SurfaceModel m = custom_model("ok", {"A"}, IntMatrix::identity(1), CohClass{3}, std::vector<CohClass>{},
                                CohClass{1});
  EXPECT_EQ(m.intersect(CohClass{2}, CohClass{5}), Scalar(10));
}

TEST(Intersect, Examples) {
  SurfaceModel b2 = blowup_cp2(2, Position::General);
  EXPECT_EQ(b2.intersect(parse_class(b2, "3H-E1-E2"), parse_class(b2, "H-2E1-E2")), Scalar(0));
  SurfaceModel q = quadric();
  CohClass F = parse_class(q, "1/2 C + 1/2 D");
  EXPECT_EQ(q.intersect(F, F).str(), "1/2");
  SurfaceModel b5 = blowup_cp2(5, Position::General);
  EXPECT_EQ(b5.intersect(b5.c1, parse_class(b5, "E1-E2")), Scalar(0));
  EXPECT_THROW(b5.intersect(CohClass{1, 0}, b5.c1), Error);
}

TEST(Intersect, SurdCoefficients) {
  SurfaceModel m = blowup_cp2(9, Position::OnCubic);
  CohClass F = CohClass::zero(10);
  F[0] = Scalar::parse("38-20*sqrt(3)");
  for (int i = 1; i <= 4; ++i) F[i] = Scalar::parse("-10+5*sqrt(3)");
  for (int i = 5; i <= 9; ++i) F[i] = Scalar::parse("-14+8*sqrt(3)");
  EXPECT_EQ(m.intersect(F, F), Scalar(4));
}

TEST(Parse, ClassExpressions) {
  SurfaceModel m = blowup_cp2(3, Position::General);
  EXPECT_EQ(parse_class(m, "3H-E1-E2-E3"), m.c1);
  EXPECT_EQ(parse_class(m, "-K"), m.c1);
  EXPECT_EQ(parse_class(m, "K"), -m.c1);
  EXPECT_EQ(parse_class(m, "2(-K)"), Scalar(2) * m.c1);
  EXPECT_EQ(parse_class(m, "[1,0,-1,2]"), (CohClass{1, 0, -1, 2}));
  EXPECT_THROW(parse_class(m, "E4"), Error);
  EXPECT_THROW(parse_class(m, "[1,2]"), Error);
  EXPECT_EQ(format_class(m, CohClass{3, -1, -1, -1}), "3H-E1-E2-E3");
  EXPECT_EQ(format_class(m, CohClass::zero(4)), "0");
}

TEST(Lattice, BasisExtension) {
  SurfaceModel b5 = blowup_cp2(5, Position::General);
  EXPECT_TRUE(basis_extension_check(b5, {b5.c1, parse_class(b5, "E1-E2")}));
  SurfaceModel p = projective_plane();
  EXPECT_FALSE(basis_extension_check(p, {CohClass{2}}));
  SurfaceModel b2 = blowup_cp2(2, Position::General);
  EXPECT_TRUE(basis_extension_check(b2, {parse_class(b2, "H"), parse_class(b2, "E1")}));
  EXPECT_FALSE(basis_extension_check(b2, {parse_class(b2, "H"), parse_class(b2, "2H")}));
}

TEST(Lattice, Divisibility) {
  EXPECT_EQ(divisibility_index(projective_plane(), CohClass{3}), 3);
  EXPECT_EQ(divisibility_index(quadric(), CohClass{2, 2}), 2);
  SurfaceModel b3 = blowup_cp2(3, Position::General);
  EXPECT_EQ(divisibility_index(b3, b3.c1), 1);
  EXPECT_THROW(divisibility_index(b3, CohClass::zero(4)), Error);
}

TEST(FunctionalModel, DeclaredPairingsOnly) {
  PairingFunctionalModel k = kummer_model();
  CohClass w = parse_class(k, "C1-C2");
  EXPECT_EQ(k.intersect(w, w), Scalar(-4));
  EXPECT_EQ(k.intersect(w, parse_class(k, "F")), Scalar(0));
  // Q(F,F) was never declared
  EXPECT_FALSE(k.try_intersect(parse_class(k, "F"), parse_class(k, "F")));
  EXPECT_THROW(k.intersect(parse_class(k, "F"), parse_class(k, "F")), Error);
  EXPECT_THROW(kummer_model({1, 2, 1, 1}), Error);
}

TEST(ModelIo, BuiltinNames) {
  EXPECT_TRUE(builtin_model("cp2"));
  EXPECT_TRUE(builtin_model("blowup_cp2(4)"));
  auto on = builtin_model("blowup_cp2(10)");
  ASSERT_TRUE(on);
  EXPECT_EQ(std::get<SurfaceModel>(*on).kind, ModelKind::BlowupOnCubic);
  auto g = builtin_model("blowup_cp2(4, on_cubic)");
  ASSERT_TRUE(g);
  EXPECT_EQ(std::get<SurfaceModel>(*g).kind, ModelKind::BlowupOnCubic);
  EXPECT_FALSE(builtin_model("torus"));
  EXPECT_THROW(load_model("no/such/file.json"), Error);
}

TEST(ModelIo, JsonModelMatchesBuiltIn) {
  ordered_json j = ordered_json::parse(R"({
    "name": "two_point", "basis": ["H","E1","E2"],
    "gram": [[1,0,0],[0,-1,0],[0,0,-1]], "c1": "3H-E1-E2",
    "curves": ["E1","E2","H-E1-E2"], "ample_witness": [3,-1,-1]})");
  auto any = model_from_json(j);
  const auto& m = std::get<SurfaceModel>(any);
  SurfaceModel b2 = blowup_cp2(2, Position::General);
  EXPECT_EQ(m.c1, b2.c1);
  EXPECT_EQ(m.gram, b2.gram);
  EXPECT_EQ(m.explicit_curves.size(), 3u);
  EXPECT_NE(model_digest(any), model_digest(AnyModel(b2)));
  EXPECT_EQ(model_digest(any), model_digest(model_from_json(j)));
}
