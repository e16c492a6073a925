#include <gtest/gtest.h>

#include "e6kit/brown.hpp"
#include "e6kit/invol.hpp"

using namespace e6kit;

namespace {

struct Fixture {
  FieldSpec f = FieldSpec::prime_field(7);
  AlbertPtr J = AlbertAlgebra::split_hermitian(f);
  BrownAlgebra B{J};
};

}  // namespace

TEST(Brown, UnitAndInvolution) {
  Fixture fx;
  const auto& B = fx.B;
  Sampler rng(1);
  for (int i = 0; i < 40; ++i) {
    Vec x = B.sample(rng), y = B.sample(rng);
    ASSERT_EQ(B.mul(B.unit(), x), x);
    ASSERT_EQ(B.mul(x, B.unit()), x);
    ASSERT_EQ(B.binv(B.mul(x, y)), B.mul(B.binv(y), B.binv(x)));
    ASSERT_EQ(B.binv(B.binv(x)), x);
  }
}

TEST(Brown, SkewElementsAndType) {
  Fixture fx;
  auto skew = fx.B.skew_basis();
  ASSERT_EQ(skew.size(), 1u);
  EXPECT_TRUE(same_span(fx.f, kBrownDim, skew, {fx.B.s0()}));
  EXPECT_EQ(fx.B.mul(fx.B.s0(), fx.B.s0()), fx.B.unit());
  EXPECT_EQ(fx.B.type(), BrownType::Type1);
}

TEST(Brown, BlockAccessors) {
  Fixture fx;
  Vec j = fx.J->diag(1, 2, 3), l = fx.J->diag(4, 5, 6);
  Vec x = fx.B.elem(Scalar(fx.f, 2), Scalar(fx.f, 3), j, l);
  EXPECT_EQ(BrownAlgebra::alpha(x).to_string(), "2");
  EXPECT_EQ(BrownAlgebra::beta(x).to_string(), "3");
  EXPECT_EQ(BrownAlgebra::jpart(x), j);
  EXPECT_EQ(BrownAlgebra::lpart(x), l);
}

TEST(Brown, LiftsPreserveProduct) {
  Fixture fx;
  LinMap s = make_s(*fx.J), t = lift_c_to_j(*fx.J, make_t(fx.J->octonions()));
  EXPECT_TRUE(fx.B.is_automorphism(fx.B.lift_aut(s)));
  EXPECT_TRUE(fx.B.preserves_product_on_samples(fx.B.lift_aut(t), 60, 3));
  EXPECT_TRUE(fx.B.preserves_product_on_samples(fx.B.varpi(), 60, 4));
  Vec x = fx.J->diag(2, 4, 1);  // N = 1 mod 7
  ASSERT_TRUE(fx.J->norm(x).is_one());
  LinMap ux{fx.J->uop(x), Carrier::Albert};
  EXPECT_TRUE(fx.B.preserves_product_on_samples(fx.B.lift_inv(ux), 30, 5));
}

TEST(Brown, VarpiConjugatesLiftToDaggerLift) {
  Fixture fx;
  Vec x = fx.J->diag(3, 3, 4);  // 36 = 1 mod 7
  ASSERT_TRUE(fx.J->norm(x).is_one());
  LinMap ux{fx.J->uop(x), Carrier::Albert};
  EXPECT_EQ(fx.B.varpi() * fx.B.lift_inv(ux) * fx.B.varpi(), fx.B.lift_inv(dagger(*fx.J, ux)));
}

TEST(Brown, LiftAutRejectsNonAutomorphism) {
  Fixture fx;
  LinMap ux{fx.J->uop(fx.J->diag(2, 4, 1)), Carrier::Albert};
  try {
    fx.B.lift_aut(ux);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAutomorphism);
  }
}

TEST(Brown, CommutingPairSubalgebra) {
  Fixture fx;
  LinMap s = make_s(*fx.J), t = lift_c_to_j(*fx.J, make_t(fx.J->octonions()));
  auto basis = fx.B.commuting_pair_subalgebra(s, t);
  EXPECT_EQ(span_rank(fx.f, kBrownDim, basis), 28u);
  EXPECT_TRUE(fx.B.is_subalgebra(basis));
  LinMap ux{fx.J->uop(fx.J->diag(2, 4, 1)), Carrier::Albert};
  EXPECT_THROW(fx.B.commuting_pair_subalgebra(ux, s), Error);
}

TEST(Brown, ZetaMustBeNonzero) {
  Fixture fx;
  EXPECT_THROW(BrownAlgebra(fx.J, Scalar::zero(fx.f)), Error);
}
