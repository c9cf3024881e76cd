#include <gtest/gtest.h>

#include "cytforge/cyt.hpp"

using namespace cytforge;

namespace {

auto shared(SurfaceModel m) { return std::make_shared<const SurfaceModel>(std::move(m)); }

BundleSpec<SurfaceModel> bundle(const std::shared_ptr<const SurfaceModel>& m, std::initializer_list<const char*> ws) {
  std::vector<CohClass> v;
  for (auto w : ws) v.push_back(parse_class(*m, w));
  return make_bundle(m, v);
}

}  // namespace

TEST(Bundle, Validation) {
  auto m = shared(blowup_cp2(2, Position::General));
  EXPECT_THROW(make_bundle(m, {m->c1}), Error);
  EXPECT_THROW(make_bundle(m, {}), Error);
  EXPECT_THROW(make_bundle(m, {m->c1, CohClass{1, 0}}), Error);
  CohClass half = m->c1 / Scalar(2);
  try {
    make_bundle(m, {m->c1, half});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidBundle);
  }
  EXPECT_EQ(make_bundle(m, {m->c1, m->c1, m->c1, m->c1}).fiber_rank(), 4u);
}

TEST(Lambda, Examples) {
  SurfaceModel q = quadric();
  CohClass F = parse_class(q, "1/2 C + 1/2 D");
  EXPECT_EQ(lambda_trace(q, parse_class(q, "C"), F), Scalar(2));
  SurfaceModel b5 = blowup_cp2(5, Position::General);
  EXPECT_EQ(lambda_trace(b5, parse_class(b5, "E1-E2"), b5.c1), Scalar(0));
  for (const char* f : {"6H-2E1-2E2-E3", "H", "2H-E4"}) {
    CohClass G = parse_class(b5, f);
    EXPECT_EQ(lambda_trace(b5, G, G), Scalar(2)) << f;
  }
  EXPECT_THROW(lambda_trace(q, parse_class(q, "C"), parse_class(q, "C")), Error);
  EXPECT_EQ(lambda_trace_general(3, Scalar(4), Scalar(6)), Scalar(2));
  EXPECT_THROW(lambda_trace_general(3, Scalar(4), Scalar(0)), Error);
}

TEST(Defect, Examples) {
  auto q = shared(quadric());
  EXPECT_TRUE(cyt_defect(bundle(q, {"C", "D"}), parse_class(*q, "1/2 C + 1/2 D")).is_zero());

  auto m = shared(blowup_cp2(2, Position::General));
  auto b = bundle(m, {"3H-E1-E2", "H-2E1-E2"});
  EXPECT_TRUE(cyt_defect(b, parse_class(*m, "6H-2E1-2E2")).is_zero());
  // at F = omega1 the trace of omega1 is 2, so the defect is c1 - 2 omega1 = -omega1
  EXPECT_EQ(cyt_defect(b, parse_class(*m, "3H-E1-E2")), (CohClass{-3, 1, 1}));
}

TEST(VerifyCyt, PassingExamples) {
  auto b5 = shared(blowup_cp2(5, Position::General));
  auto c = verify_cyt(bundle(b5, {"-K", "E1-E2"}), Scalar(2) * b5->c1);
  EXPECT_TRUE(c.verdict);
  EXPECT_EQ(c.lambdas, (std::vector<Scalar>{Scalar(1), Scalar(0)}));
  EXPECT_TRUE(c.cone.anticanonical_multiple.has_value());

  auto m = shared(blowup_cp2(2, Position::General));
  auto b = bundle(m, {"3H-E1-E2", "H-2E1-E2"});
  EXPECT_TRUE(verify_cyt(b, Scalar(2) * b.curvatures[0]).verdict);
}

TEST(VerifyCyt, FailingExamples) {
  auto m = shared(blowup_cp2(2, Position::General));
  CohClass F = parse_class(*m, "6H-2E1-2E2");
  auto c = verify_cyt(bundle(m, {"E1", "E2"}), F);
  EXPECT_FALSE(c.verdict);
  EXPECT_FALSE(c.defect_zero);
  EXPECT_EQ(c.defect[0], Scalar(3));
  EXPECT_EQ(c.defect[1].str(), "-8/7");

  // right classes, wrong scale: the certificate names the scale that works
  auto b = bundle(m, {"3H-E1-E2", "H-2E1-E2"});
  auto d = verify_cyt(b, parse_class(*m, "3H-E1-E2"));
  EXPECT_FALSE(d.verdict);
  ASSERT_TRUE(d.scale_along_F);
  EXPECT_EQ(*d.scale_along_F, Scalar(2));
}

TEST(VerifyCyt, ScaleSensitivity) {
  auto m = shared(blowup_cp2(2, Position::General));
  auto b = bundle(m, {"3H-E1-E2", "H-2E1-E2"});
  CohClass F = parse_class(*m, "6H-2E1-2E2");
  EXPECT_TRUE(verify_cyt(b, F).verdict);
  EXPECT_FALSE(verify_cyt(b, Scalar(2) * F).verdict);

  auto q = shared(quadric());
  auto bq = bundle(q, {"C", "D"});
  CohClass Fq = parse_class(*q, "1/2 C + 1/2 D");
  EXPECT_TRUE(verify_cyt(bq, Fq).verdict);
  EXPECT_FALSE(verify_cyt(bq, Scalar(2) * Fq).verdict);
}

TEST(SolveScale, Examples) {
  auto m = shared(blowup_cp2(2, Position::General));
  auto b = bundle(m, {"3H-E1-E2", "H-2E1-E2"});
  auto s = solve_scale(b, parse_class(*m, "3H-E1-E2"));
  ASSERT_TRUE(s);
  EXPECT_EQ(*s, Scalar(2));

  auto p = shared(projective_plane());
  auto bp = make_bundle(p, {CohClass{1}, CohClass{0}});
  auto sp = solve_scale(bp, CohClass{1});
  ASSERT_TRUE(sp);
  EXPECT_EQ(sp->str(), "2/3");
  EXPECT_EQ(lambda_trace(*p, CohClass{1}, *sp * CohClass{1}), Scalar(3));

  // trace terms are even in omega: (C,-D) along C+D gives C+D = c1/2
  auto q = shared(quadric());
  auto sq = solve_scale(bundle(q, {"C", "-D"}), parse_class(*q, "C+D"));
  ASSERT_TRUE(sq);
  EXPECT_EQ(sq->str(), "1/2");
  // a genuine NONE: the trace sum is not parallel to c1
  EXPECT_FALSE(solve_scale(make_bundle(q, {parse_class(*q, "C"), CohClass{0, 0}}), parse_class(*q, "C+D")));
  EXPECT_THROW(solve_scale(bundle(q, {"C", "D"}), parse_class(*q, "C")), Error);
}

TEST(SolveScale, SubstitutionVanishes) {
  for (int k = 3; k <= 8; ++k) {
    auto m = shared(blowup_cp2(k, Position::General));
    auto b = bundle(m, {"-K", "E1-E2"});
    auto s = solve_scale(b, m->c1);
    ASSERT_TRUE(s) << k;
    EXPECT_EQ(*s, Scalar(2));
    EXPECT_TRUE(cyt_defect(b, *s * m->c1).is_zero());
  }
}

TEST(Ansatz, NinePoints) {
  auto sol = solve_symmetric_ansatz(9);
  ASSERT_TRUE(sol);
  EXPECT_EQ(sol->n.str(), "38-20*sqrt(3)");
  EXPECT_EQ(sol->n_1to4.str(), "10-5*sqrt(3)");
  EXPECT_EQ(sol->n_rest.str(), "14-8*sqrt(3)");
  SurfaceModel m = blowup_cp2(9, Position::OnCubic);
  EXPECT_EQ(m.intersect(sol->F, sol->F), Scalar(4));
  EXPECT_EQ(m.intersect(sol->omega1, sol->F), Scalar(2));
  EXPECT_EQ(m.intersect(sol->omega2, sol->F), Scalar(2));
  EXPECT_TRUE(sol->cone.verdict);
}

TEST(Ansatz, TenPointsAndRange) {
  auto sol = solve_symmetric_ansatz(10);
  ASSERT_TRUE(sol);
  // (-36 + sqrt(1824)) / 2 = -18 + 2 sqrt(114)
  EXPECT_EQ(sol->n, (Scalar(-36) + Scalar::parse("sqrt(1824)")) / Scalar(2));
  EXPECT_EQ(sol->n.str(), "-18+2*sqrt(114)");
  EXPECT_FALSE(solve_symmetric_ansatz(8));
}

TEST(Ansatz, FullInequalityList) {
  for (int k = 9; k <= 12; ++k) {
    auto sol = solve_symmetric_ansatz(k);
    ASSERT_TRUE(sol) << k;
    SurfaceModel m = blowup_cp2(k, Position::OnCubic);
    EXPECT_EQ(exact_sign(sol->n - Scalar(3)), 1);
    EXPECT_EQ(exact_sign(sol->n_1to4), 1);
    EXPECT_EQ(exact_sign(sol->n_rest), 1);
    for (const auto& a : {sol->n_1to4, sol->n_rest})
      for (const auto& c : {sol->n_1to4, sol->n_rest}) EXPECT_EQ(exact_sign(sol->n - a - c), 1);
    EXPECT_EQ(m.intersect(sol->F, m.c1), Scalar(4));
    auto b = make_bundle(m, {sol->omega1, sol->omega2});
    EXPECT_TRUE(verify_cyt(b, sol->F).verdict) << k;
    EXPECT_FALSE(verify_cyt(b, Scalar(2) * sol->F).verdict) << k;
  }
}

TEST(Ricci, Polynomial) {
  auto q = shared(quadric());
  auto b = bundle(q, {"C", "D"});
  CohClass F = parse_class(*q, "1/2 C + 1/2 D");
  RicciPolynomial r = canonical_ricci_class(b, F);
  EXPECT_EQ(r.evaluate(Scalar(1)), q->c1);
  EXPECT_EQ(r.evaluate(Scalar(-1)), cyt_defect(b, F));
  EXPECT_FALSE(r.is_identically_zero());

  // Ricci-flat base with primitive curvature: zero polynomial
  auto flat = shared(custom_model("flat", {"A", "B"}, IntMatrix::from_rows({{0, 1}, {1, 0}}), CohClass{0, 0},
                                  std::vector<CohClass>{}, CohClass{1, 1}));
  auto bf = make_bundle(flat, {CohClass{1, -1}, CohClass{2, -2}});
  EXPECT_TRUE(canonical_ricci_class(bf, CohClass{1, 1}).is_identically_zero());
  auto s = solve_scale(bf, CohClass{1, 1});
  ASSERT_TRUE(s);
  EXPECT_EQ(*s, Scalar(1));
}

TEST(C1Triviality, Examples) {
  auto m = shared(blowup_cp2(2, Position::General));
  EXPECT_TRUE(c1_bundle_triviality(bundle(m, {"3H-E1-E2", "H-2E1-E2"})));
  auto q = shared(quadric());
  EXPECT_TRUE(c1_bundle_triviality(bundle(q, {"C", "D"})));
  EXPECT_FALSE(c1_bundle_triviality(bundle(m, {"H", "E1"})));
}

TEST(Balanced, Examples) {
  auto k = std::make_shared<const PairingFunctionalModel>(kummer_model());
  auto bk = make_bundle(k, {parse_class(*k, "C1-C2"), parse_class(*k, "C3-C4")});
  EXPECT_TRUE(balanced_check(bk, parse_class(*k, "F")));
  auto bk2 = make_bundle(k, {parse_class(*k, "C1+C2"), parse_class(*k, "C3-C4")});
  EXPECT_FALSE(balanced_check(bk2, parse_class(*k, "F")));

  auto q = shared(quadric());
  EXPECT_FALSE(balanced_check(bundle(q, {"C", "D"}), parse_class(*q, "1/2 C + 1/2 D")));
  EXPECT_TRUE(balanced_check(make_bundle(q, {CohClass{0, 0}, CohClass{0, 0}}), parse_class(*q, "C+D")));
}

TEST(PrimitiveRoute, Examples) {
  auto b5 = shared(blowup_cp2(5, Position::General));
  EXPECT_TRUE(primitive_route_check(bundle(b5, {"-K", "E1-E2"}), b5->c1));
  auto sol = solve_symmetric_ansatz(9);
  ASSERT_TRUE(sol);
  auto m9 = shared(blowup_cp2(9, Position::OnCubic));
  EXPECT_FALSE(primitive_route_check(make_bundle(m9, {sol->omega1, sol->omega2}), sol->F));
  auto q = shared(quadric());
  EXPECT_FALSE(primitive_route_check(bundle(q, {"C", "D"}), parse_class(*q, "C+D")));
}
