#include <sstream>

#include <gtest/gtest.h>

#include "hambypass/cli.hpp"

using namespace hambypass;

namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = cli::dispatch(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string without_elapsed(const std::string& report) {
  std::istringstream lines(report);
  std::string line, kept;
  while (std::getline(lines, line)) {
    if (line.rfind("elapsed_ms:", 0) != 0) kept += line + '\n';
  }
  return kept;
}

}  // namespace

TEST(Cli, T5HasNoBypass) {
  const CliRun gen = run({"gen", "--family", "t5"});
  ASSERT_EQ(gen.code, 0);
  const CliRun find = run({"find", "--what", "bypass"}, gen.out);
  EXPECT_EQ(find.code, 1);
  EXPECT_EQ(find.out, "absent\n");
}

TEST(Cli, TriangleSatisfiesMeynielVacuously) {
  const CliRun gen = run({"gen", "--family", "c3"});
  const CliRun check = run({"check", "--condition", "meyniel"}, gen.out);
  EXPECT_EQ(check.code, 0);
  EXPECT_EQ(check.out, "condition=meyniel holds=true\n");
}

TEST(Cli, CheckReportsEachConditionAndFailsIfAnyFails) {
  const CliRun gen = run({"gen", "--family", "cn", "--n", "4"});
  const CliRun check = run({"check", "--condition", "strong", "--condition", "meyniel"}, gen.out);
  EXPECT_EQ(check.code, 1);
  EXPECT_NE(check.out.find("condition=strong holds=true\n"), std::string::npos);
  EXPECT_NE(check.out.find("condition=meyniel holds=false witness=0,2"), std::string::npos);
}

TEST(Cli, VerifyInDegreeSuiteOrderFour) {
  const CliRun v = run({"verify", "--theorem", "thm12", "--n", "4", "--mode", "exhaustive"});
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(v.out.find("violations: 0\n"), std::string::npos);
}

TEST(Cli, FindThenVerifyCertificate) {
  const CliRun gen = run({"gen", "--family", "kstar", "--n", "5"});
  const CliRun find = run({"find", "--what", "bypass"}, gen.out);
  ASSERT_EQ(find.code, 0);
  std::string cert = find.out.substr(0, find.out.find('\n'));
  const CliRun check = run({"verify-cert", "--cert", cert}, gen.out);
  EXPECT_EQ(check.code, 0);
  EXPECT_EQ(check.out, "valid\n");
  const CliRun wrong = run({"verify-cert", "--cert", cert}, run({"gen", "--family", "cn", "--n", "5"}).out);
  EXPECT_EQ(wrong.code, 1);
  EXPECT_EQ(wrong.out, "invalid\n");
}

TEST(Cli, ConstructiveReportsMethod) {
  const CliRun gen = run({"gen", "--family", "kstar", "--n", "6"});
  const CliRun find = run({"find", "--what", "constructive"}, gen.out);
  EXPECT_EQ(find.code, 0);
  EXPECT_NE(find.out.find("method=good-cycle\n"), std::string::npos);
}

TEST(Cli, HamPathEndpoints) {
  const CliRun gen = run({"gen", "--family", "cn", "--n", "4"});
  EXPECT_EQ(run({"find", "--what", "hampath", "--from", "1", "--to", "0"}, gen.out).out, "kind=hampath order=1,2,3,0\n");
  EXPECT_EQ(run({"find", "--what", "hampath", "--from", "0", "--to", "1"}, gen.out).code, 1);
}

TEST(Cli, BudgetExhaustionIsUnknown) {
  const CliRun gen = run({"gen", "--family", "dn", "--n", "9"});
  const CliRun find = run({"find", "--what", "bypass", "--budget", "1"}, gen.out);
  EXPECT_EQ(find.code, 3);
  EXPECT_EQ(find.out, "unknown\n");
}

TEST(Cli, ConvertRoundTrip) {
  const CliRun gen = run({"gen", "--family", "d7"});
  const CliRun js = run({"convert", "--to", "structured"}, gen.out);
  ASSERT_EQ(js.code, 0);
  EXPECT_EQ(js.out.front(), '{');
  const CliRun back = run({"convert", "--to", "text"}, js.out);
  EXPECT_EQ(back.out, gen.out);
}

TEST(Cli, MalformedInputNamesTheLine) {
  const CliRun r = run({"find", "--what", "bypass"}, "n 3\n0 1\n1 q\n");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 3"), std::string::npos);
}

TEST(Cli, UsageAndCapabilityErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"gen", "--family", "d0", "--n", "6"}).code, 2);
  EXPECT_EQ(run({"gen", "--family", "nope"}).code, 2);
  EXPECT_EQ(run({"verify", "--theorem", "thm4", "--n", "6"}).code, 2);
  EXPECT_EQ(run({"verify", "--theorem", "thm4", "--n", "5", "--mode", "sample"}).code, 2);
  EXPECT_EQ(run({"find", "--what", "cycle:9"}, "n 3\n0 1\n").code, 2);
  EXPECT_EQ(run({"check", "--condition", "bogus"}, "n 3\n0 1\n").code, 2);
  EXPECT_EQ(run({"hunt", "--n", "4"}).code, 2);
}

TEST(Cli, HuntIsReproducible) {
  const std::vector<std::string> args{"hunt", "--preset", "conjecture", "--n", "4..5", "--mode", "sample",
                                      "--count", "200", "--seed", "5"};
  const CliRun a = run(args), b = run(args);
  EXPECT_EQ(a.code, b.code);
  EXPECT_LE(a.code, 1);
  EXPECT_EQ(without_elapsed(a.out), without_elapsed(b.out));
  EXPECT_NE(a.out.find("mode: sample count=200 seed=5\n"), std::string::npos);
}

TEST(Cli, FalseClaimHuntFindsTriangles) {
  const CliRun r = run({"hunt", "--hypothesis", "strong", "--target", "bypass", "--n", "3"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("violations: 5\n"), std::string::npos);
  EXPECT_NE(r.out.find("n 3\n0 1\n1 2\n2 0\n"), std::string::npos);
}

TEST(Cli, StructuredVerdict) {
  const CliRun r = run({"verify", "--theorem", "thm12", "--n", "4", "--format", "structured"});
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["violations"].size(), 0U);
}
