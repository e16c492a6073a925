#include <gtest/gtest.h>

#include <cctype>
#include <string>

#include <cmath>
#include <cstdlib>

#include "e6kit/qclass.hpp"

using namespace e6kit;

namespace {

std::string param_name(std::string s) {
  for (auto& c : s)
    if (!std::isalnum(static_cast<unsigned char>(c))) c = '_';
  return s;
}

// (a, b)_v for a, b in [-6, 6] minus 0, row-major in a; '+' is 1.
// Frozen from tests/oracles/hilbert_oracle.py (brute-force solvability mod p^k).
const std::vector<std::pair<std::string, std::string>> kHilbertGrid{
    {"R", "------++++++------++++++------++++++------++++++------++++++------++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++"},
    {"Qp:2", "+-+--++--+-+---++-+--++++--+--++-++--+++-++-+++--+----++++-++--+--++-++-++++++++++++--+-++++-+-----++-+--+++++++++++++++-+++-++-+++-++--+-+-++--"},
    {"Qp:3", "-+-++-+--+-+++++++++++++-++-++++-++-++--+-+-++--++++++++++++-++-++++-++-++++++++++++-++-++++-++--+-++-+--+-+++++++++++++-++-++++-++-++--+-+-++--"},
    {"Qp:5", "+++++++++++++++--++--++++++++++++++++-++++++++-++-++++++++-++++++++++++++++++++++++++-++++++++-++-++++++++-++++++++++++++++--++--+++++++++++++++"},
    {"Qp:7", "++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++"},
};

}  // namespace

TEST(Hilbert, MatchesBruteForceGrid) {
  for (const auto& [place, row] : kHilbertGrid) {
    FieldSpec f = FieldSpec::parse(place);
    std::size_t k = 0;
    for (long a = -6; a <= 6; ++a) {
      if (!a) continue;
      for (long b = -6; b <= 6; ++b) {
        if (!b) continue;
        ASSERT_EQ(hilbert_symbol(a, b, f), row[k++] == '+' ? 1 : -1) << place << " " << a << " " << b;
      }
    }
  }
}

TEST(Hilbert, KnownValues) {
  EXPECT_EQ(hilbert_symbol(2, 5, FieldSpec::padic_place(5)), -1);
  EXPECT_EQ(hilbert_symbol(-1, -1, FieldSpec::real_place()), -1);
  EXPECT_EQ(hilbert_symbol(-1, -1, FieldSpec::padic_place(2)), -1);
  EXPECT_EQ(hilbert_symbol(-1, -1, FieldSpec::padic_place(3)), 1);
  EXPECT_EQ(hilbert_symbol(mpq_class(3, 4), mpq_class(-7, 9), FieldSpec::padic_place(7)), hilbert_symbol(3, -7, FieldSpec::padic_place(7)));
}

TEST(Hilbert, ProductFormulaOnRationalPairs) {
  Sampler rng(77);
  for (int i = 0; i < 100; ++i) {
    auto draw = [&](long lo, long hi) { return static_cast<long>(rng.between(lo, hi)); };
    mpq_class a(draw(1, 60) * (rng.below(2) ? 1 : -1), draw(1, 30));
    mpq_class b(draw(1, 60) * (rng.below(2) ? 1 : -1), draw(1, 30));
    a.canonicalize();
    b.canonicalize();
    int prod = hilbert_symbol(a, b, FieldSpec::real_place());
    for (auto p : relevant_primes(a, b)) prod *= hilbert_symbol(a, b, FieldSpec::padic_place(p));
    ASSERT_EQ(prod, 1) << a << " " << b;
  }
}

TEST(Quaternion, SplitOverQAgreesWithIsotropySearch) {
  // z^2 = a x^2 + b y^2 has a nonzero integer solution of small height iff (a, b)_Q splits
  auto squarefree = [](long n) {
    for (long d = 2; d * d <= std::labs(n); ++d)
      while (n % (d * d) == 0) n /= d * d;
    return n;
  };
  auto isotropic = [&](long a, long b) {
    a = squarefree(a);
    b = squarefree(b);
    for (long x = 0; x <= 60; ++x)
      for (long y = 0; y <= 60; ++y) {
        if (!x && !y) continue;
        long r = a * x * x + b * y * y;
        if (r < 0) continue;
        long z = std::lround(std::sqrt(static_cast<double>(r)));
        if (z * z == r) return true;
      }
    return false;
  };
  FieldSpec q = FieldSpec::rationals();
  for (long a = -20; a <= 20; ++a)
    for (long b = -20; b <= 20; ++b) {
      if (!a || !b) continue;
      ASSERT_EQ(is_split(QuatPresentation(a, b), q), isotropic(a, b)) << a << " " << b;
    }
}

TEST(Quaternion, ZeroArgumentRejected) {
  try {
    QuatPresentation(0, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroArgument);
  }
}

TEST(Quaternion, SplitAtLocalAndFiniteFields) {
  EXPECT_TRUE(is_split(QuatPresentation(-1, -1), FieldSpec::prime_field(7)));
  EXPECT_TRUE(is_split(QuatPresentation(-1, -1), FieldSpec::alg_closed()));
  EXPECT_FALSE(is_split(QuatPresentation(-1, -1), FieldSpec::real_place()));
  EXPECT_FALSE(is_split(QuatPresentation(-1, 3), FieldSpec::padic_place(3)));
  EXPECT_TRUE(is_split(QuatPresentation(-1, 3), FieldSpec::padic_place(5)));
}

TEST(Quaternion, ClassCounts) {
  EXPECT_EQ(quaternion_class_count(FieldSpec::alg_closed()).to_string(), "1");
  EXPECT_EQ(quaternion_class_count(FieldSpec::prime_field(13)).to_string(), "1");
  EXPECT_EQ(quaternion_class_count(FieldSpec::real_place()).to_string(), "2");
  EXPECT_EQ(quaternion_class_count(FieldSpec::padic_place(2)).to_string(), "2");
  EXPECT_TRUE(quaternion_class_count(FieldSpec::rationals()).is_infinite());
}

TEST(Quaternion, DivisionFamilyPrimes) {
  EXPECT_EQ(division_family_primes(24), (std::vector<unsigned long>{3, 7, 11, 19, 23}));
  FieldSpec q = FieldSpec::rationals();
  for (auto p : division_family_primes(50)) EXPECT_FALSE(is_split(QuatPresentation(-1, static_cast<long>(p)), q)) << p;
  EXPECT_EQ(smallest_nonresidue(5), 2u);
  EXPECT_EQ(smallest_nonresidue(7), 3u);
  EXPECT_EQ(smallest_nonresidue(23), 5u);
}

struct Totals {
  const char* field;
  const char* total;
};

void PrintTo(const Totals& t, std::ostream* os) { *os << t.field; }

class E6Totals : public ::testing::TestWithParam<Totals> {};

TEST_P(E6Totals, MatchesTheorem) {
  ClassReport r = class_report(FieldSpec::parse(GetParam().field), GroupLevel::E6);
  EXPECT_EQ(r.total.to_string(), GetParam().total);
  EXPECT_EQ(r.count("sigma").to_string(), "1");
  EXPECT_EQ(r.count("dagger").to_string(), "1");
  EXPECT_EQ(r.count("theta").to_string(), r.count("theta_dagger").to_string());
}

INSTANTIATE_TEST_SUITE_P(Fields, E6Totals,
                         ::testing::Values(Totals{"Kbar", "4"}, Totals{"Fp:7", "4"}, Totals{"Fp:13", "4"}, Totals{"R", "6"},
                                           Totals{"Qp:2", "6"}, Totals{"Qp:3", "6"}, Totals{"Qp:5", "6"},
                                           Totals{"Qp:7", "6"}, Totals{"Q", "infinite"}),
                         [](const auto& info) { return param_name(info.param.field); });

TEST(ClassReport, Representatives) {
  auto reps = [](const char* f) { return class_report(FieldSpec::parse(f), GroupLevel::E6).representatives; };
  EXPECT_EQ(reps("Fp:7"), (std::vector<std::string>{"s", "varpi", "t:1,1,1,1,1,1", "t:1,1,1,1,1,1.varpi"}));
  EXPECT_EQ(reps("R"), (std::vector<std::string>{"s", "varpi", "t:1,1,1,1,-1,1", "t:1,1,1,1,1,1", "t:1,1,1,1,-1,1.varpi",
                                                 "t:1,1,1,1,1,1.varpi"}));
  EXPECT_EQ(reps("Qp:5"), (std::vector<std::string>{"s", "varpi", "t:1,1,1,1,-1,1", "t:1,1,1,1,-5,-2",
                                                    "t:1,1,1,1,-1,1.varpi", "t:1,1,1,1,-5,-2.varpi"}));
  ClassReport q = class_report(FieldSpec::rationals(), GroupLevel::E6);
  EXPECT_EQ(q.family, (std::vector<std::string>{"(-1,3)", "(-1,7)", "(-1,11)", "(-1,19)", "(-1,23)"}));
}

TEST(ClassReport, F4AndG2Levels) {
  EXPECT_EQ(class_report(FieldSpec::real_place(), GroupLevel::F4).total.to_string(), "4");
  EXPECT_EQ(class_report(FieldSpec::padic_place(3), GroupLevel::F4).total.to_string(), "3");
  EXPECT_EQ(class_report(FieldSpec::prime_field(7), GroupLevel::F4).total.to_string(), "2");
  EXPECT_EQ(class_report(FieldSpec::real_place(), GroupLevel::G2).total.to_string(), "2");
  EXPECT_EQ(class_report(FieldSpec::prime_field(7), GroupLevel::G2).total.to_string(), "1");
  EXPECT_TRUE(class_report(FieldSpec::rationals(), GroupLevel::G2).total.is_infinite());
  EXPECT_THROW(parse_level("E7"), Error);
}
