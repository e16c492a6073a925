#include <gtest/gtest.h>

#include "e6kit/verify.hpp"

using namespace e6kit;

namespace {

Json strip_times(Json j) {
  for (auto& s : j["checks"]) s.erase("seconds");
  return j;
}

}  // namespace

TEST(Verify, AllSuitesPassOverF7) {
  SuiteConfig cfg;
  cfg.samples = 40;
  for (const auto& r : run_suites("all", cfg)) {
    EXPECT_TRUE(r.pass()) << r.to_text();
    EXPECT_FALSE(r.checks.empty());
  }
}

TEST(Verify, AlbertSuiteOverQ) {
  SuiteConfig cfg{FieldSpec::rationals(), 0, 12};
  auto reps = run_suites("albert", cfg);
  ASSERT_EQ(reps.size(), 1u);
  EXPECT_TRUE(reps[0].pass()) << reps[0].to_text();
  const CheckResult* c = reps[0].find("[Her3(C, id)] (x^#)^# = N(x)x");
  ASSERT_NE(c, nullptr);
  EXPECT_TRUE(c->pass);
  EXPECT_NE(reps[0].to_text().find("(x^#)^# = N(x)x: PASS"), std::string::npos);
}

TEST(Verify, SameSeedSameReport) {
  SuiteConfig cfg{FieldSpec::prime_field(11), 9, 15};
  Json a = strip_times(run_suites("composition", cfg)[0].to_json());
  Json b = strip_times(run_suites("composition", cfg)[0].to_json());
  EXPECT_EQ(a, b);
}

TEST(Verify, ConfigurationErrors) {
  SuiteConfig cfg;
  EXPECT_THROW(run_suites("nonsense", cfg), Error);
  cfg.field = FieldSpec::real_place();
  EXPECT_THROW(run_suites("all", cfg), Error);
}

TEST(Verify, FailureCarriesCounterexample) {
  SuiteReport rep{"probe", "Fp:7", 0, {}};
  Recorder rec(rep);
  rec.trials("even", 10, [](std::size_t i) { return unless(i < 3, Json{{"i", i}}); });
  rec.single("throws", []() -> std::optional<Json> { fail(ErrorCode::Internal, "boom"); });
  ASSERT_EQ(rep.checks.size(), 2u);
  EXPECT_FALSE(rep.pass());
  EXPECT_EQ(rep.checks[0].trials, 4u);
  EXPECT_EQ(rep.checks[0].counterexample["i"], 3);
  EXPECT_FALSE(rep.checks[1].pass);
  EXPECT_NE(rep.checks[1].detail.find("boom"), std::string::npos);
  Json j = rep.to_json();
  EXPECT_EQ(j["pass"], false);
  EXPECT_EQ(j["checks"][0]["counterexample"]["i"], 3);
  EXPECT_NE(rep.to_text().find("even: FAIL"), std::string::npos);
}
