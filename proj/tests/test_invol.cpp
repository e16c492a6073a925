#include <gtest/gtest.h>

#include <cctype>
#include <string>

#include "e6kit/invol.hpp"
#include "e6kit/verify.hpp"

using namespace e6kit;

namespace {

std::string param_name(std::string s) {
  for (auto& c : s)
    if (!std::isalnum(static_cast<unsigned char>(c))) c = '_';
  return s;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

}  // namespace

TEST(Octonion, TIsOrderTwoAutomorphismFixingQuaternions) {
  CDAlgebra C = CDAlgebra::split_octonions(FieldSpec::prime_field(7));
  LinMap t = make_t(C);
  EXPECT_TRUE(t.is_order_two());
  EXPECT_TRUE(is_octonion_automorphism(C, t));
  EXPECT_EQ(t.fixed_basis().size(), 4u);
}

TEST(Octonion, TStarWorksInDefaultBasis) {
  CDAlgebra C = CDAlgebra::split_octonions(FieldSpec::rationals());
  LinMap ts = make_t_star(C);
  EXPECT_EQ(ts.basis_tag, "default");
  EXPECT_TRUE(ts.is_order_two());
  EXPECT_EQ(ts.fixed_basis().size(), 4u);
}

TEST(Octonion, MakeTNeedsUnitNorm) {
  FieldSpec f = FieldSpec::prime_field(7);
  CDAlgebra C = CDAlgebra::split_octonions(f);
  Vec p{Scalar(f, 2), Scalar::zero(f), Scalar::zero(f), Scalar(f, 1)};
  EXPECT_EQ(code_of([&] { make_t(C, p); }), ErrorCode::NotUnitNorm);
  Vec unit_norm{Scalar(f, 2), Scalar::zero(f), Scalar::zero(f), Scalar(f, 4)};
  EXPECT_TRUE(is_octonion_automorphism(C, make_t(C, unit_norm)));
}

TEST(Octonion, G2TorusIsAutomorphism) {
  FieldSpec q = FieldSpec::rationals();
  CDAlgebra C = CDAlgebra::split_octonions(q);
  EXPECT_TRUE(is_octonion_automorphism(C, make_g2_torus(C, Scalar(q, 3), Scalar::rational(q, -2, 5))));
  EXPECT_EQ(code_of([&] { make_g2_torus(C, Scalar::zero(q), Scalar(q, 1)); }), ErrorCode::ZeroParameter);
}

TEST(Albert, FixedDimensionsOfSAndT) {
  FieldSpec f = FieldSpec::prime_field(7);
  auto J = AlbertAlgebra::split_hermitian(f);
  FixedReport s = fixed_subalgebra(*J, make_s(*J));
  FixedReport t = fixed_subalgebra(*J, lift_c_to_j(*J, make_t(J->octonions())));
  EXPECT_EQ(s.dimension, 11u);
  EXPECT_TRUE(s.closed);
  EXPECT_EQ(t.dimension, 15u);
  EXPECT_TRUE(t.closed);
}

TEST(Albert, SIsUOfDiagonal) {
  auto J = AlbertAlgebra::split_hermitian(FieldSpec::rationals());
  EXPECT_EQ(make_s(*J).m, J->uop(J->diag(1, -1, -1)));
}

TEST(Dagger, LawsOnSamples) {
  FieldSpec f = FieldSpec::prime_field(11);
  auto J = AlbertAlgebra::split_hermitian(f);
  Sampler rng(6);
  for (int i = 0; i < 10; ++i) {
    Vec x = sample_unit_norm(*J, rng);
    LinMap ux{J->uop(x), Carrier::Albert};
    ASSERT_TRUE(is_inv_member(*J, ux));
    ASSERT_EQ(dagger(*J, ux).m, J->uop(J->jinverse(x)));
    ASSERT_EQ(dagger(*J, dagger(*J, ux)), ux);
  }
  LinMap t = lift_c_to_j(*J, make_t(J->octonions()));
  EXPECT_EQ(dagger(*J, t), t);
}

TEST(Dagger, RejectsNonNormPreserving) {
  FieldSpec f = FieldSpec::prime_field(11);
  auto J = AlbertAlgebra::split_hermitian(f);
  LinMap scale{Scalar(f, 2) * Matrix::identity(f, kAlbertDim), Carrier::Albert};
  EXPECT_FALSE(is_inv_member(*J, scale));
  EXPECT_EQ(code_of([&] { dagger(*J, scale); }), ErrorCode::NotNormPreserving);
}

TEST(Bridge, UVSquaresToSAndIsInverseUnderDagger) {
  FieldSpec q = FieldSpec::rationals();
  auto J = AlbertAlgebra::split_hermitian(q);
  LinMap uv = make_uv_bridge(*J);
  LinMap s = make_s(*J);
  EXPECT_EQ(uv * uv, s);
  EXPECT_EQ(dagger(*J, uv), uv.inverse());
  EXPECT_TRUE(is_inv_member(*J, uv));
  Vec v = find_bridge_vector(J->octonions());
  EXPECT_EQ(J->octonions().qnorm(v).to_string(), "-1");
  EXPECT_TRUE(J->octonions().trace(v).is_zero());
}

TEST(Bridge, CarriesBVarpiOntoBSVarpi) {
  FieldSpec f = FieldSpec::prime_field(7);
  auto J = AlbertAlgebra::split_hermitian(f);
  BrownAlgebra B(J);
  LinMap g = B.lift_inv(make_uv_bridge(*J));
  std::vector<Vec> image;
  for (const auto& v : B.varpi().fixed_basis()) image.push_back(g(v));
  LinMap svarpi = B.lift_aut(make_s(*J)) * B.varpi();
  EXPECT_TRUE(same_span(f, kBrownDim, image, svarpi.fixed_basis()));
}

TEST(Torus, InversionUnderThetaDagger) {
  FieldSpec q = FieldSpec::rationals();
  auto T = AlbertAlgebra::tits(q, Scalar::one(q));
  LinMap theta = make_theta_tits(*T);
  Sampler rng(12);
  for (int i = 0; i < 5; ++i) {
    std::vector<Scalar> p;
    for (int k = 0; k < 6; ++k) p.push_back(rng.nonzero(q));
    LinMap phi = make_torus_element(*T, p, TorusLevel::E6);
    ASSERT_EQ(theta * dagger(*T, phi) * theta, phi.inverse());
  }
}

TEST(Torus, Errors) {
  FieldSpec f = FieldSpec::prime_field(7);
  auto T = AlbertAlgebra::tits(f, Scalar::one(f));
  auto H = AlbertAlgebra::split_hermitian(f);
  std::vector<Scalar> four(4, Scalar::one(f)), six(6, Scalar::one(f));
  EXPECT_EQ(code_of([&] { make_torus_element(*T, four, TorusLevel::E6); }), ErrorCode::ArityMismatch);
  EXPECT_EQ(code_of([&] { make_torus_element(*H, six, TorusLevel::E6); }), ErrorCode::ModelMismatch);
  six[2] = Scalar::zero(f);
  EXPECT_EQ(code_of([&] { make_torus_element(*T, six, TorusLevel::E6); }), ErrorCode::ZeroParameter);
  EXPECT_EQ(code_of([&] { make_theta_tits(*H); }), ErrorCode::ModelMismatch);
}

TEST(Torus, OrderTwoIffParameterSquaresAreOneOverQ) {
  FieldSpec q = FieldSpec::rationals();
  auto T = AlbertAlgebra::tits(q, Scalar::one(q));
  auto ps = [&](std::initializer_list<long long> v) {
    std::vector<Scalar> out;
    for (auto x : v) out.emplace_back(q, x);
    return out;
  };
  EXPECT_TRUE(order_divides_two(make_torus_element(*T, ps({1, 1, 1, 1, -1, 1}), TorusLevel::E6)));
  EXPECT_TRUE(order_divides_two(make_torus_element(*T, ps({-1, -1, 1, -1, -1, 1}), TorusLevel::E6)));
  EXPECT_FALSE(order_divides_two(make_torus_element(*T, ps({2, 1, 1, 1, 1, 1}), TorusLevel::E6)));
  EXPECT_FALSE(order_divides_two(make_torus_element(*T, ps({1, 1, 1, 1, -5, -2}), TorusLevel::E6)));
}

TEST(Conjugacy, TransportOfFixedSpaces) {
  FieldSpec f = FieldSpec::prime_field(13);
  auto J = AlbertAlgebra::split_hermitian(f);
  LinMap s = make_s(*J), t = lift_c_to_j(*J, make_t(J->octonions()));
  Sampler rng(21);
  for (int i = 0; i < 4; ++i) {
    LinMap g = sample_automorphism(*J, rng);
    ASSERT_TRUE(is_aut_member(*J, g));
    for (const LinMap* base : {&s, &t}) {
      LinMap c = conjugate_involution(*J, g, *base);
      ASSERT_TRUE(c.is_order_two());
      ASSERT_TRUE(verify_conjugacy_transport(g, *base, c));
    }
  }
}

TEST(Grading, LawsForSAndT) {
  FieldSpec f = FieldSpec::prime_field(7);
  auto J = AlbertAlgebra::split_hermitian(f);
  Grading gs = grade_decompose(*J, make_s(*J));
  EXPECT_EQ(gs.plus.size(), 11u);
  EXPECT_EQ(gs.minus.size(), 16u);
  EXPECT_TRUE(gs.law_holds);
  Grading gt = grade_decompose(*J, lift_c_to_j(*J, make_t(J->octonions())));
  EXPECT_EQ(gt.plus.size(), 15u);
  EXPECT_TRUE(gt.law_holds);
  LinMap ux{J->uop(J->diag(2, 4, 1)), Carrier::Albert};
  EXPECT_EQ(code_of([&] { grade_decompose(*J, ux); }), ErrorCode::NotOrderTwo);
}

TEST(Outer, FixedConditionForDaggerCompatibleMaps) {
  // phi = id, delta = U_x: id U_x id = U_x^dagger holds iff U_x = U_{x^-1}
  FieldSpec f = FieldSpec::prime_field(7);
  auto J = AlbertAlgebra::split_hermitian(f);
  LinMap id = LinMap::identity(f, Carrier::Albert);
  LinMap s = make_s(*J);
  EXPECT_TRUE(outer_fixed_condition(*J, s, id));
  LinMap ux{J->uop(J->diag(2, 4, 1)), Carrier::Albert};
  EXPECT_FALSE(outer_fixed_condition(*J, ux, id));
  // s U_x s = U_{s x} and for diagonal x that is U_x; U_x^dagger = U_{x^-1} differs
  EXPECT_FALSE(outer_fixed_condition(*J, ux, s));
}

TEST(Isotope, UxUyIsAutomorphismOfIsotope) {
  FieldSpec f = FieldSpec::prime_field(7);
  auto J = AlbertAlgebra::split_hermitian(f);
  EXPECT_TRUE(isotope_automorphism_check(*J, J->diag(4, 1, -1), J->diag(2, 1, 1)));
  auto Q = AlbertAlgebra::split_hermitian(FieldSpec::rationals());
  EXPECT_EQ(code_of([&] { isotope_automorphism_check(*Q, Q->diag(4, 1, -1), Q->diag(2, 1, 1)); }), ErrorCode::NotOrderTwo);
  FieldSpec q = FieldSpec::rationals();
  Vec y = Q->diag(Scalar(q, 2), Scalar(q, 3), Scalar(q, -1));
  Vec x = Q->diag(Scalar::rational(q, 1, 2), Scalar::rational(q, -1, 3), Scalar(q, 1));
  EXPECT_TRUE(isotope_automorphism_check(*Q, x, y));
}

TEST(Descriptors, ParseAndRealize) {
  FieldSpec f = FieldSpec::prime_field(7);
  auto toks = parse_descriptor(f, "t:1,1,1,1,-1,1.varpi");
  ASSERT_EQ(toks.size(), 2u);
  EXPECT_EQ(toks[0].name, "tpar");
  EXPECT_EQ(toks[0].params.size(), 6u);
  EXPECT_EQ(toks[1].name, "varpi");
  EXPECT_EQ(code_of([&] { parse_descriptor(f, "q"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([&] { parse_descriptor(f, "t:1,1,1"); }), ErrorCode::ArityMismatch);
  EXPECT_EQ(code_of([&] { parse_descriptor(f, ""); }), ErrorCode::ParseError);
  InvolutionCatalog cat(f);
  EXPECT_EQ(code_of([&] { cat.realize("s.t:1,1,1,1", Space::J); }), ErrorCode::ModelMismatch);
  EXPECT_EQ(code_of([&] { cat.realize("varpi", Space::J); }), ErrorCode::InvalidArgument);
}

struct ShapeCase {
  const char* descriptor;
  std::size_t dimension;
  const char* shape;
};

void PrintTo(const ShapeCase& c, std::ostream* os) { *os << c.descriptor; }

class BrownFixed : public ::testing::TestWithParam<ShapeCase> {};

TEST_P(BrownFixed, DimensionAndShape) {
  const auto& c = GetParam();
  InvolutionCatalog cat(FieldSpec::prime_field(7));
  bool tits = cat.uses_tits(parse_descriptor(cat.field(), c.descriptor));
  const BrownAlgebra& B = cat.brown(tits);
  LinMap phi = cat.realize(c.descriptor, Space::B);
  FixedReport r = fixed_subalgebra(B, phi);
  EXPECT_EQ(r.dimension, c.dimension);
  EXPECT_TRUE(r.closed);
  EXPECT_TRUE(r.binv_closed);
  EXPECT_EQ(brown_fixed_shape(B, r.basis), c.shape);
}

INSTANTIATE_TEST_SUITE_P(Catalog, BrownFixed,
                         ::testing::Values(ShapeCase{"s", 24, "B^s"}, ShapeCase{"t", 32, "B^t"},
                                           ShapeCase{"varpi", 28, "B^varpi"}, ShapeCase{"t.varpi", 28, "B^{t varpi}"},
                                           ShapeCase{"s.varpi", 28, "B^{s varpi}"},
                                           ShapeCase{"t:1,1,1,1,-1,1", 32, "B^t"},
                                           ShapeCase{"t:1,1,1,1,-1,1.varpi", 28, "B^{t varpi}"},
                                           ShapeCase{"id", 56, "B"}),
                         [](const auto& info) { return param_name(info.param.descriptor); });
