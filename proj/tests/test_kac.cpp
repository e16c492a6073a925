#include <gtest/gtest.h>

#include "e6kit/kac.hpp"

using namespace e6kit;

namespace {

using Row = std::pair<std::vector<int>, std::string>;

std::vector<Row> rows(const std::vector<KacSolution>& sols) {
  std::vector<Row> out;
  for (const auto& s : sols) out.push_back({s.s, s.residual_type()});
  return out;
}

// Frozen from tests/oracles/kac_oracle.py (root counts of Cartan submatrices).
const std::vector<Row> kUntwisted3{
  {{2,1,0,0,0,0,0}, "D5"},
  {{2,0,0,0,0,0,1}, "D5"},
  {{1,2,0,0,0,0,0}, "D5"},
  {{1,1,0,0,0,0,1}, "D4"},
  {{1,0,1,0,0,0,0}, "A4xA1"},
  {{1,0,0,0,1,0,0}, "A5"},
  {{1,0,0,0,0,1,0}, "A4xA1"},
  {{1,0,0,0,0,0,2}, "D5"},
  {{0,2,0,0,0,0,1}, "D5"},
  {{0,1,1,0,0,0,0}, "A5"},
  {{0,1,0,0,1,0,0}, "A4xA1"},
  {{0,1,0,0,0,1,0}, "A4xA1"},
  {{0,1,0,0,0,0,2}, "D5"},
  {{0,0,1,0,0,0,1}, "A4xA1"},
  {{0,0,0,1,0,0,0}, "A2xA2xA2"},
  {{0,0,0,0,1,0,1}, "A4xA1"},
  {{0,0,0,0,0,1,1}, "A5"}
};

const std::vector<Row> kFolded4{
  {{4,0,0,0,0,0,0}, "F4"},
  {{2,1,0,0,0,0,1}, "C3"},
  {{0,2,0,0,0,0,2}, "C4"},
  {{0,0,1,0,0,1,0}, "A3xA1"},
  {{0,0,0,0,2,0,0}, "B3xA1"}
};

const std::vector<Row> kUntwisted2NoGcd{
  {{2,0,0,0,0,0,0}, "E6"},
  {{1,1,0,0,0,0,0}, "D5"},
  {{1,0,0,0,0,0,1}, "D5"},
  {{0,2,0,0,0,0,0}, "E6"},
  {{0,1,0,0,0,0,1}, "D5"},
  {{0,0,1,0,0,0,0}, "A5xA1"},
  {{0,0,0,0,1,0,0}, "A5xA1"},
  {{0,0,0,0,0,1,0}, "A5xA1"},
  {{0,0,0,0,0,0,2}, "E6"}
};

}  // namespace

TEST(Kac, OrderOneGivesThreeE6Rows) {
  auto sols = enumerate(e6_affine(), 1, true, false);
  EXPECT_EQ(rows(sols), (std::vector<Row>{{{1, 0, 0, 0, 0, 0, 0}, "E6"}, {{0, 1, 0, 0, 0, 0, 0}, "E6"}, {{0, 0, 0, 0, 0, 0, 1}, "E6"}}));
  auto orbits = reduce_by_symmetry(e6_affine(), sols);
  ASSERT_EQ(orbits.size(), 1u);
  EXPECT_EQ(orbits[0].s, (std::vector<int>{1, 0, 0, 0, 0, 0, 0}));
}

TEST(Kac, OrderTwoUntwisted) {
  auto sols = enumerate(e6_affine(), 2, true, false);
  EXPECT_EQ(rows(sols), (std::vector<Row>{{{1, 1, 0, 0, 0, 0, 0}, "D5"},
                                          {{1, 0, 0, 0, 0, 0, 1}, "D5"},
                                          {{0, 1, 0, 0, 0, 0, 1}, "D5"},
                                          {{0, 0, 1, 0, 0, 0, 0}, "A5xA1"},
                                          {{0, 0, 0, 0, 1, 0, 0}, "A5xA1"},
                                          {{0, 0, 0, 0, 0, 1, 0}, "A5xA1"}}));
  for (const auto& s : sols) EXPECT_TRUE(s.gcd_one);
  EXPECT_EQ(reduce_by_symmetry(e6_affine(), sols).size(), 2u);
}

TEST(Kac, OrderTwoWithoutGcdFilter) { EXPECT_EQ(rows(enumerate(e6_affine(), 2, false, false)), kUntwisted2NoGcd); }

TEST(Kac, OrderThreeMatchesOracle) { EXPECT_EQ(rows(enumerate(e6_affine(), 3, true, false)), kUntwisted3); }

TEST(Kac, OrderFourCount) { EXPECT_EQ(enumerate(e6_affine(), 4, true, false).size(), 33u); }

TEST(Kac, FoldedOrderTwo) {
  auto sols = enumerate(e6_twisted(), 2, false, true);
  EXPECT_EQ(rows(sols), (std::vector<Row>{{{2, 0, 0, 0, 0, 0, 0}, "F4"}, {{0, 1, 0, 0, 0, 0, 1}, "C4"}}));
}

TEST(Kac, FoldedOrderFourMatchesOracle) { EXPECT_EQ(rows(enumerate(e6_twisted(), 4, false, true)), kFolded4); }

TEST(Kac, DiagramAutomorphismsOfExtendedE6) {
  auto autos = diagram_automorphisms(e6_affine());
  EXPECT_EQ(autos.size(), 6u);
}

TEST(Kac, ClassifierRecognizesTypes) {
  // path 0-1-2-3 is A4
  std::vector<DiagramEdge> path{{0, 1, 1}, {1, 2, 1}, {2, 3, 1}};
  auto comps = classify_diagram({0, 1, 2, 3}, path);
  ASSERT_EQ(comps.size(), 1u);
  EXPECT_EQ(comps[0].type, "A4");
  // 0 => 1 - 2 with 0 long: C3; with 2 long at the other end it is B3
  EXPECT_EQ(classify_diagram({0, 1, 2}, {{0, 1, 2}, {1, 2, 1}})[0].type, "C3");
  EXPECT_EQ(classify_diagram({0, 1, 2}, {{1, 0, 2}, {1, 2, 1}})[0].type, "B3");
  EXPECT_EQ(classify_diagram({0, 1}, {{0, 1, 3}})[0].type, "G2");
  EXPECT_EQ(classify_diagram({0, 1, 2, 3}, {{0, 1, 1}, {1, 2, 2}, {2, 3, 1}})[0].type, "F4");
  EXPECT_EQ(classify_diagram({0, 1, 2, 3}, {{0, 1, 1}, {1, 2, 1}, {1, 3, 1}})[0].type, "D4");
  // a cycle is not a finite Dynkin diagram
  EXPECT_THROW(classify_diagram({0, 1, 2}, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}}), Error);
}

TEST(Kac, Validation) {
  EXPECT_THROW(enumerate(e6_affine(), 0, true, false), Error);
  EXPECT_THROW(enumerate(e6_affine(), 2, true, true), Error);
  MarkedDiagram bad = e6_affine();
  bad.marks[0] = 0;
  EXPECT_THROW(bad.validate(), Error);
  bad = e6_twisted();
  bad.folding = {{1, 2}};
  EXPECT_THROW(bad.validate(), Error);
  EXPECT_THROW(builtin_diagram("e7~"), Error);
}
