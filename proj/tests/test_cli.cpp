#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "frobpair/cli.hpp"

using namespace frobpair;
using namespace frobpair::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

template <class Cmd, class Fn>
Run run(const Cmd& cmd, Fn fn) {
  std::ostringstream out, err;
  int code = fn(cmd, out, err);
  return {code, out.str(), err.str()};
}

LevelCommand level(std::uint64_t p, std::vector<std::string> vars, std::string num, std::string den) {
  LevelCommand c;
  c.p = p;
  c.vars = std::move(vars);
  c.num = std::move(num);
  c.den = std::move(den);
  return c;
}

int examples(const ExamplesCommand& cmd, std::ostream& out, std::ostream& err) { return run_examples(cmd, out, err); }

} // namespace

TEST(CliLevel, FermatPair) {
  auto r = run(level(2, {"x", "y", "z"}, "x*y*z", "x^3+y^3+z^3"), run_level);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "level = 2\n");
}

TEST(CliLevel, Undetermined) {
  auto cmd = level(2, {"x", "y"}, "x", "x^3+y^3");
  cmd.e_max = 4;
  auto r = run(cmd, run_level);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "level > 4 (undetermined)\n");
}

TEST(CliLevel, OrdinaryCubic) {
  auto r = run(level(7, {"x", "y", "z"}, "1", "x^3+y^3+z^3"), run_level);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "level = 1\n");
}

TEST(CliLevel, Zero) {
  auto r = run(level(3, {"x", "y"}, "x^2*y", "x"), run_level);
  EXPECT_EQ(r.out, "level = 0\n");
}

TEST(CliLevel, Certificate) {
  auto cmd = level(2, {"x", "y", "z"}, "x*y*z", "x^3+y^3+z^3");
  cmd.want_certificate = true;
  auto r = run(cmd, run_level);
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("certificate (e = 2"), std::string::npos);
  EXPECT_NE(r.out.find("verified: yes"), std::string::npos);
}

TEST(CliLevel, JsonRoundTrip) {
  auto cmd = level(2, {"x", "y", "z"}, "z*y*x", "z^3+x^3+y^3");
  cmd.want_certificate = true;
  cmd.json = true;
  auto r = run(cmd, run_level);
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["query"]["p"], 2);
  EXPECT_EQ(j["query"]["vars"], (std::vector<std::string>{"x", "y", "z"}));
  EXPECT_EQ(j["query"]["num"], "x*y*z");
  EXPECT_EQ(j["query"]["den"], "x^3+y^3+z^3");
  EXPECT_EQ(j["query"]["e_max"], 6);
  EXPECT_EQ(j["outcome"]["kind"], "finite");
  EXPECT_EQ(j["outcome"]["e"], 2);
  EXPECT_EQ(j["certificate"]["e"], 2);
  EXPECT_TRUE(j["certificate"]["verified"].get<bool>());

  // Rebuild the certificate from JSON and verify it independently.
  Ring R(PrimeField(2), VarContext({"x", "y", "z"}));
  FrobeniusCertificate cert{2, parse_poly(j["query"]["num"].get<std::string>(), R),
                            parse_poly(j["query"]["den"].get<std::string>(), R), {}};
  for (const auto& t : j["certificate"]["terms"]) {
    auto a = t["alpha"].get<std::vector<Exponent>>();
    cert.terms.push_back({parse_poly(t["cofactor"].get<std::string>(), R), Monomial(a)});
  }
  EXPECT_TRUE(verify_certificate(cert));
  // Re-running on the echoed canonical input gives the same report.
  auto again = level(2, j["query"]["vars"].get<std::vector<std::string>>(), j["query"]["num"], j["query"]["den"]);
  again.want_certificate = true;
  again.json = true;
  EXPECT_EQ(run(again, run_level).out, r.out);
}

TEST(CliLevel, JsonOmitsOptionalFields) {
  auto cmd = level(3, {"x", "y"}, "x^2*y", "x");
  cmd.json = true;
  auto j = nlohmann::json::parse(run(cmd, run_level).out);
  EXPECT_EQ(j["outcome"]["kind"], "zero");
  EXPECT_FALSE(j["outcome"].contains("e"));
  EXPECT_FALSE(j.contains("certificate"));

  auto ex = level(2, {"x", "y"}, "x", "x^3+y^3");
  ex.e_max = 3;
  ex.json = true;
  auto k = nlohmann::json::parse(run(ex, run_level).out);
  EXPECT_EQ(k["outcome"]["kind"], "exceeds_bound");
  EXPECT_EQ(k["outcome"]["e"], 3);
}

TEST(CliLevel, ExitCodes) {
  EXPECT_EQ(run(level(2, {"x"}, "x+", "x"), run_level).code, 2);
  EXPECT_EQ(run(level(2, {"x"}, "y", "x"), run_level).code, 2);
  EXPECT_EQ(run(level(4, {"x"}, "1", "x"), run_level).code, 2);
  EXPECT_EQ(run(level(2, {"x", "x"}, "1", "x"), run_level).code, 2);
  EXPECT_EQ(run(level(2, {"x"}, "1", "0"), run_level).code, 2);
  auto zero_e = level(2, {"x"}, "1", "x+1");
  zero_e.e_max = 0;
  EXPECT_EQ(run(zero_e, run_level).code, 2);
  auto r = run(level(2, {"x"}, "x+", "x"), run_level);
  EXPECT_NE(r.err.find("parse error"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
}

TEST(CliLevel, OverflowExitCode) {
  auto cmd = level(2, {"x", "y"}, "x", "x^3+y^3");
  cmd.e_max = 40;
  auto saved = term_limit();
  set_term_limit(200);
  auto r = run(cmd, run_level);
  set_term_limit(saved);
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("resource limit"), std::string::npos);

  auto big = level(2, {"x", "y"}, "y", "x^1000000000");
  big.e_max = 3;
  auto o = run(big, run_level);
  EXPECT_EQ(o.code, 3);
  EXPECT_NE(o.err.find("overflow"), std::string::npos);
}

TEST(CliRoots, FermatRoots) {
  RootsCommand cmd{3, 1, {"x", "y", "z"}, "x*y*z*(x^3+y^3+z^3)^2", false};
  auto r = run(cmd, run_roots);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "I_1 = (x^2+2*x*y+y^2+2*x*z+2*y*z+z^2)\n");
  cmd.json = true;
  auto j = nlohmann::json::parse(run(cmd, run_roots).out);
  EXPECT_EQ(j["generators"].size(), 1u);
  EXPECT_EQ(j["query"]["e"], 1);
  cmd.e = 0;
  EXPECT_EQ(run(cmd, run_roots).code, 2);
}

TEST(CliCurve, Outputs) {
  CurveCommand c13;
  c13.p = 13;
  c13.h = "x^5+1";
  auto r = run(c13, run_curve);
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("cartier-manin = [[0,0],[6,0]]"), std::string::npos);
  EXPECT_NE(r.out.find("a_number = 1"), std::string::npos);
  EXPECT_NE(r.out.find("p_rank = 0"), std::string::npos);
  EXPECT_NE(r.out.find("kernel = [[0,1]]"), std::string::npos);

  CurveCommand c19 = c13;
  c19.p = 19;
  EXPECT_NE(run(c19, run_curve).out.find("superspecial: yes"), std::string::npos);

  CurveCommand c17;
  c17.p = 17;
  c17.h = "x^8-1";
  c17.json = true;
  auto j = nlohmann::json::parse(run(c17, run_curve).out);
  EXPECT_TRUE(j["ordinary"].get<bool>());
  EXPECT_EQ(j["p_rank"], 3);
  EXPECT_EQ(j["genus"], 3);
}

TEST(CliCurve, Stratified) {
  CurveCommand c;
  c.p = 13;
  c.h = "x^5+1";
  c.stratified = std::vector<Coeff>{0, 1};
  EXPECT_NE(run(c, run_curve).out.find("stratified: yes"), std::string::npos);
  c.stratified = std::vector<Coeff>{1, 0};
  EXPECT_NE(run(c, run_curve).out.find("stratified: no"), std::string::npos);
  c.stratified = std::vector<Coeff>{0, 0};
  EXPECT_EQ(run(c, run_curve).code, 2);
}

TEST(CliCurve, Errors) {
  CurveCommand c;
  c.p = 2;
  c.h = "x^5+1";
  EXPECT_EQ(run(c, run_curve).code, 2);
  c.p = 5;
  c.h = "(x+1)^2*(x^3+2)";
  EXPECT_EQ(run(c, run_curve).code, 2);
}

TEST(CliExamples, FilterAndTable) {
  ExamplesCommand cmd;
  cmd.filter = "determinantal";
  auto r = run(cmd, examples);
  EXPECT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::string line;
  int cases = 0;
  while (std::getline(lines, line)) {
    if (line.rfind("PASS", 0) == 0 || line.rfind("FAIL", 0) == 0) {
      ++cases;
      EXPECT_NE(line.find("determinantal/"), std::string::npos);
    }
  }
  EXPECT_EQ(cases, 9);
}

TEST(CliExamples, DefaultRunPassesAndSorted) {
  ExamplesCommand cmd;
  cmd.json = true;
  auto r = run(cmd, examples);
  EXPECT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["passed"].get<bool>());
  std::vector<std::string> names;
  for (const auto& c : j["cases"]) {
    names.push_back(c["name"]);
    EXPECT_FALSE(c["long_running"].get<bool>());
    EXPECT_TRUE(c["passed"].get<bool>()) << c["name"];
  }
  EXPECT_TRUE(std::is_sorted(names.begin(), names.end()));
  EXPECT_EQ(std::count(names.begin(), names.end(), "level4/pair/p5"), 0);
}

TEST(CliExamples, IncludeLongAddsLevelFourP5) {
  ExamplesCommand cmd;
  cmd.filter = "level4";
  cmd.include_long = true;
  cmd.json = true;
  auto j = nlohmann::json::parse(run(cmd, examples).out);
  bool found = false;
  for (const auto& c : j["cases"])
    if (c["name"] == "level4/pair/p5") {
      found = true;
      EXPECT_TRUE(c["long_running"].get<bool>());
      EXPECT_TRUE(c["passed"].get<bool>());
    }
  EXPECT_TRUE(found);
}

TEST(CliExamples, FailureExitCode) {
  std::vector<regression::RegressionCase> cases;
  cases.push_back({"broken", "", "pass", "computed", false, [] { return regression::CaseResult{false, "fail"}; }});
  cases.push_back({"throws", "", "pass", "computed", false, []() -> regression::CaseResult {
                     throw std::runtime_error("boom");
                   }});
  auto reports = regression::run_cases(cases, "", false, 2);
  ASSERT_EQ(reports.size(), 2u);
  EXPECT_FALSE(reports[0].passed);
  EXPECT_FALSE(reports[1].passed);
  EXPECT_EQ(reports[1].observed, "error: boom");

  std::ostringstream out, err;
  EXPECT_EQ(run_examples(ExamplesCommand{}, cases, out, err), 4);
  EXPECT_NE(out.str().find("FAIL  broken"), std::string::npos);
  EXPECT_NE(out.str().find("0/2 cases passed"), std::string::npos);
}
