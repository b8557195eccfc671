#include <gtest/gtest.h>

#include "fncalc/exterior/text.hpp"
#include "suites.hpp"

using namespace fncalc::cli;

namespace {
SuiteReport run(SuiteConfig config) { return run_suite(config); }
}  // namespace

TEST(Cli, SuiteNames) {
  const auto& names = suite_names();
  EXPECT_EQ(names.size(), 9U);
  SuiteConfig bad;
  bad.suite = "no-such-suite";
  EXPECT_THROW((void)run_suite(bad), std::invalid_argument);
}

TEST(Cli, StarPhiIsMaurerCartan) {
  SuiteConfig c;
  c.suite = "mc-check";
  c.psi = "star-phi";
  const auto report = run(c);
  EXPECT_TRUE(report.pass());
  const auto json = Json::parse(render_json(report, false));
  EXPECT_EQ(json["status"], "pass");
  EXPECT_TRUE(json["witness"].is_null());
  EXPECT_FALSE(json.contains("timing_ms"));
  EXPECT_TRUE(Json::parse(render_json(report, true)).contains("timing_ms"));
}

TEST(Cli, ProbeWitness) {
  SuiteConfig c;
  c.suite = "mc-check";
  c.psi = "x1 e{1,2}";
  const auto report = run(c);
  EXPECT_FALSE(report.pass());
  EXPECT_EQ(Json::parse(render_json(report, false))["witness"], "(4*x1 e{1,2})⊗e2");
}

TEST(Cli, DeterministicOutput) {
  SuiteConfig c;
  c.suite = "gla-axioms";
  c.samples = 20;
  const auto first = render_json(run(c), false);
  EXPECT_EQ(first, render_json(run(c), false));
  c.seed = 7;
  EXPECT_TRUE(Json::parse(render_json(run(c), false))["status"] == "pass");
}

TEST(Cli, ReportSchema) {
  SuiteConfig c;
  c.suite = "kahler-dc";
  c.samples = 5;
  const auto json = Json::parse(render_json(run(c), false));
  ASSERT_TRUE(json.contains("suite"));
  ASSERT_TRUE(json["checks"].is_array());
  for (const auto& check : json["checks"]) {
    EXPECT_TRUE(check.contains("check"));
    EXPECT_TRUE(check["status"] == "pass" || check["status"] == "fail");
    EXPECT_TRUE(check.contains("witness"));
    EXPECT_TRUE(check.contains("tolerance"));
  }
  EXPECT_FALSE(render_table(run(c), false).empty());
}

TEST(Cli, LinftyPlane) {
  SuiteConfig c;
  c.suite = "linfty";
  c.plane = {1, 2, 4};
  c.check = "none";
  const auto json = Json::parse(render_json(run_linfty(c), false));
  EXPECT_EQ(json["associative"], false);
  const std::string witness = json["witness"];
  EXPECT_TRUE(witness.ends_with("⊗e7")) << witness;
}

TEST(Cli, TorusDegreeOne) {
  SuiteConfig c;
  c.suite = "torus-cohomology";
  c.degree = 1;
  const auto report = run(c);
  EXPECT_TRUE(report.pass());
  const auto& totals = report.data["totals"]["1"];
  EXPECT_EQ(totals["zero_mode_harmonic"], 7);
  EXPECT_EQ(totals["nonzero_harmonic_complex"], 0);
}

TEST(Cli, Parse) {
  const auto json = Json::parse(render_json(run_parse("3/2*x1 e{2}", false, 3, std::nullopt, false), false));
  EXPECT_EQ(json["canonical"], "3/2*x1 e{2}");
  EXPECT_THROW((void)run_parse("e{2,1}", false, 3, std::nullopt, false), fncalc::exterior::ParseError);
}
