#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "e6kit/scalar.hpp"

using namespace e6kit;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

}  // namespace

TEST(FieldSpec, ParsesEveryKind) {
  EXPECT_EQ(FieldSpec::parse("Q").kind, FieldKind::Rationals);
  EXPECT_EQ(FieldSpec::parse("R").kind, FieldKind::RealPlace);
  EXPECT_EQ(FieldSpec::parse("Kbar").kind, FieldKind::AlgClosed);
  FieldSpec f = FieldSpec::parse("Fp:11");
  EXPECT_EQ(f.kind, FieldKind::PrimeField);
  EXPECT_EQ(f.p, 11u);
  FieldSpec q = FieldSpec::parse("Qp:2");
  EXPECT_EQ(q.kind, FieldKind::PadicPlace);
  EXPECT_EQ(q.p, 2u);
  EXPECT_EQ(f.to_string(), "Fp:11");
  EXPECT_EQ(q.to_string(), "Qp:2");
}

TEST(FieldSpec, RejectsBadSpecs) {
  for (const char* s : {"Fp:4", "Fp:2", "Fp:3", "Fp:1", "Fp:", "Fp:x", "Qp:9", "Z", ""}) {
    EXPECT_EQ(code_of([&] { FieldSpec::parse(s); }), ErrorCode::InvalidFieldSpec) << s;
  }
}

TEST(FieldSpec, LargePrimeAccepted) {
  FieldSpec f = FieldSpec::parse("Fp:1000000007");
  Scalar a(f, 123456789);
  EXPECT_TRUE((a * a.inverse()).is_one());
}

TEST(Scalar, PrimeFieldArithmetic) {
  FieldSpec f = FieldSpec::prime_field(7);
  Scalar a(f, 3), b(f, 5);
  EXPECT_EQ((a + b).to_string(), "1");
  EXPECT_EQ((a - b).to_string(), "5");
  EXPECT_EQ((a * b).to_string(), "1");
  EXPECT_EQ(a.inverse().to_string(), "5");
  EXPECT_EQ((a / b).to_string(), "2");
  EXPECT_EQ(Scalar(f, -1).to_string(), "6");
  EXPECT_EQ(a.pow(6).to_string(), "1");
  EXPECT_EQ(a.pow(-1), a.inverse());
}

TEST(Scalar, RationalArithmetic) {
  FieldSpec q = FieldSpec::rationals();
  Scalar a = Scalar::rational(q, 2, 3), b = Scalar::parse(q, "-5/4");
  EXPECT_EQ((a + b).to_string(), "-7/12");
  EXPECT_EQ((a * b).to_string(), "-5/6");
  EXPECT_EQ(b.inverse().to_string(), "-4/5");
  EXPECT_EQ(Scalar::rational(q, 4, -6).to_string(), "-2/3");
  EXPECT_EQ(a.pow(-2).to_string(), "9/4");
}

TEST(Scalar, ParseReducesModP) {
  FieldSpec f = FieldSpec::prime_field(7);
  EXPECT_EQ(Scalar::parse(f, "1/2").to_string(), "4");
  EXPECT_EQ(Scalar::parse(f, "-3").to_string(), "4");
  EXPECT_EQ(code_of([&] { Scalar::parse(f, "1/7"); }), ErrorCode::DivisionByZero);
  EXPECT_EQ(code_of([&] { Scalar::parse(f, "abc"); }), ErrorCode::ParseError);
}

TEST(Scalar, Errors) {
  FieldSpec f = FieldSpec::prime_field(7), g = FieldSpec::prime_field(11);
  EXPECT_EQ(code_of([&] { Scalar::zero(f).inverse(); }), ErrorCode::DivisionByZero);
  EXPECT_EQ(code_of([&] { Scalar::zero(FieldSpec::rationals()).inverse(); }), ErrorCode::DivisionByZero);
  EXPECT_EQ(code_of([&] { (void)(Scalar(f, 1) + Scalar(g, 1)); }), ErrorCode::MixedFields);
  EXPECT_FALSE(Scalar(f, 1) == Scalar(g, 1));
  EXPECT_EQ(code_of([&] { Scalar(FieldSpec::real_place(), 1); }), ErrorCode::NonArithmeticField);
}

TEST(Scalar, SquaresModP) {
  FieldSpec f = FieldSpec::prime_field(7);
  std::vector<bool> expect{true, true, true, false, true, false, false};  // 0,1,2,4 are squares mod 7
  for (int i = 0; i < 7; ++i) EXPECT_EQ(Scalar(f, i).is_square(), expect[i]) << i;
}

TEST(Scalar, SquaresOverQ) {
  FieldSpec q = FieldSpec::rationals();
  EXPECT_TRUE(Scalar::rational(q, 4, 9).is_square());
  EXPECT_FALSE(Scalar::rational(q, 2, 9).is_square());
  EXPECT_FALSE(Scalar(q, -1).is_square());
  EXPECT_TRUE(Scalar(q, 0).is_square());
}

TEST(Sampler, DeterministicPerSeed) {
  FieldSpec q = FieldSpec::rationals();
  Sampler a(42), b(42), c(43);
  std::vector<Scalar> xa, xb, xc;
  for (int i = 0; i < 20; ++i) {
    xa.push_back(a.scalar(q));
    xb.push_back(b.scalar(q));
    xc.push_back(c.scalar(q));
  }
  EXPECT_EQ(xa, xb);
  EXPECT_NE(xa, xc);
  for (const auto& s : xa) {
    mpq_class v = s.rational_value();
    EXPECT_LE(abs(v.get_num()), 5);
    EXPECT_LE(v.get_den(), 5);
  }
}

TEST(Sampler, NonzeroAndPrimeFieldRange) {
  FieldSpec f = FieldSpec::prime_field(5);
  Sampler s(1);
  std::set<std::string> seen;
  for (int i = 0; i < 200; ++i) {
    Scalar x = s.nonzero(f);
    EXPECT_FALSE(x.is_zero());
    seen.insert(x.to_string());
  }
  EXPECT_EQ(seen.size(), 4u);
}

TEST(Cardinal, Printing) {
  EXPECT_EQ(Cardinal::infinite().to_string(), "infinite");
  EXPECT_EQ(Cardinal::finite(6).to_string(), "6");
  EXPECT_TRUE(Cardinal::infinite().is_infinite());
}

TEST(SquareClasses, CountsPerField) {
  EXPECT_EQ(square_class_count(FieldSpec::alg_closed()).to_string(), "1");
  EXPECT_EQ(square_class_count(FieldSpec::prime_field(7)).to_string(), "2");
  EXPECT_EQ(square_class_count(FieldSpec::real_place()).to_string(), "2");
  EXPECT_EQ(square_class_count(FieldSpec::padic_place(5)).to_string(), "4");
  EXPECT_EQ(square_class_count(FieldSpec::padic_place(2)).to_string(), "8");
  EXPECT_TRUE(square_class_count(FieldSpec::rationals()).is_infinite());
}
