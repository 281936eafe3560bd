#include <gtest/gtest.h>

#include <sstream>

#include "sip/cli/cli.hpp"
#include "sip/error.hpp"

using namespace sip;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> with_json(std::vector<std::string> args) {
  args.insert(args.begin(), {"--format", "json"});
  return args;
}

}  // namespace

TEST(Cli, HelpSolveExamples) {
  auto r = run({"help-solve", "--table", "table4.ctab", "--order", "4", "--m-symbolic"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("1 solution\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("u: (1a, 2a, 2b, 4a) = (0, 0, 0, 1)"), std::string::npos) << r.out;

  r = run({"help-solve", "--table", "table1.ctab", "--order", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("#1 trivial"), std::string::npos);
  EXPECT_EQ(r.out.find("#2"), std::string::npos);

  EXPECT_EQ(run({"help-solve", "--table", "table5.ctab", "--order", "8"}).code, 1);
}

TEST(Cli, HelpSolveJson) {
  auto r = run(with_json({"help-solve", "--table", "table5.ctab", "--order", "4"}));
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["count"], 2);
  for (const auto& s : j["solutions"]) EXPECT_TRUE(s["trivial"].get<bool>());
}

TEST(Cli, SubgroupExamples) {
  auto r = run({"subgroup", "--table", "table3.ctab", "--target", "c4xc2", "--m-symbolic"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find(")/8: not a non-negative integer"), std::string::npos) << r.out;

  r = run({"subgroup", "--table", "table1.ctab", "--target", "e2^3", "--m-symbolic"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("(-4*m)/8"), std::string::npos);

  r = run({"subgroup", "--table", "dixon:c4xc2", "--target", "c4xc2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find(": feasible"), std::string::npos);
}

TEST(Cli, SubgroupJsonWitnessesReCheck) {
  auto r = run(with_json({"subgroup", "--table", "table4.ctab", "--target", "c4xc2"}));
  ASSERT_EQ(r.code, 1) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_FALSE(j["feasible"].get<bool>());
  ASSERT_FALSE(j["witnesses"].empty());
  for (const auto& w : j["witnesses"]) EXPECT_TRUE(w["violated"].get<bool>());
  EXPECT_EQ(j["witnesses"][0]["denominator"], "8");
}

TEST(Cli, PaperAndLemmaExamples) {
  EXPECT_EQ(run({"paper", "--case", "qd", "--m-symbolic"}).code, 0);
  EXPECT_EQ(run({"lemma", "--two-groups", "--max-order", "16"}).code, 0);
  auto r = run({"paper", "--case", "d", "--q", "15"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("prime power"), std::string::npos);
  EXPECT_EQ(run({"paper", "--case", "q", "--m", "1,3,5"}).code, 0);
  EXPECT_EQ(run({"paper", "--case", "q", "--m", "4"}).code, 2);
  EXPECT_EQ(run({"lemma", "--two-groups", "--max-order", "12"}).code, 2);
}

TEST(Cli, RejectsBadInvocations) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"paper", "--case", "q", "--bogus"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"lemma"}).code, 2);
  EXPECT_EQ(run({"paper"}).code, 2);
  EXPECT_EQ(run({"--format", "xml", "dixon", "--group", "q8"}).code, 2);
  EXPECT_EQ(run({"help-solve", "--table", "table1.ctab", "--order", "2", "--m", "3", "--m-symbolic"}).code, 2);
  EXPECT_EQ(run({"help-solve", "--table", "no_such_table.ctab", "--order", "2"}).code, 2);
  EXPECT_EQ(run({"dixon", "--group", "x17"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, ExitCodeIndependentOfFormat) {
  std::vector<std::vector<std::string>> cases = {
      {"help-solve", "--table", "table4.ctab", "--order", "4"},
      {"help-solve", "--table", "table5.ctab", "--order", "8"},
      {"subgroup", "--table", "table2.ctab", "--target", "c4xc2"},
      {"subgroup", "--table", "dixon:q8", "--target", "q8"},
      {"paper", "--case", "thm2_q8"},
      {"paper", "--case", "d", "--q", "15"},
      {"tables-verify", "--q", "3,9"},
      {"dixon", "--group", "d8"},
  };
  for (const auto& c : cases) EXPECT_EQ(run(c).code, run(with_json(c)).code) << c[0];
}

TEST(Cli, RepeatedRunsAreByteIdentical) {
  for (auto args : std::vector<std::vector<std::string>>{{"paper", "--all"}, {"subgroup", "--table", "table1.ctab",
                                                                             "--target", "q8"}}) {
    auto a = run(args), b = run(args);
    EXPECT_EQ(a.out, b.out);
    auto ja = run(with_json(args)), jb = run(with_json(args));
    EXPECT_EQ(ja.out, jb.out);
  }
}

TEST(Cli, PaperAllTimingsOnlyOnRequest) {
  auto r = run({"paper", "--all", "--q", "none"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.find(" s\n"), std::string::npos);
  EXPECT_EQ(r.out.find("vs ffrep"), std::string::npos);
  r = run({"paper", "--all", "--timings", "--q", ""});
  EXPECT_NE(r.out.find(" s\n"), std::string::npos);
}

TEST(Json, CaseReportRoundTrip) {
  for (CaseId id : all_cases()) {
    CaseParams p;
    p.id = id;
    auto r = run_case(p);
    auto j = cli::to_json(r);
    EXPECT_EQ(cli::case_report_from_json(nlohmann::json::parse(j.dump())), r) << to_string(id);
  }
  auto t = verify_tables({3, 9});
  EXPECT_EQ(cli::case_report_from_json(cli::to_json(t)), t);
}

TEST(Json, CliOutputParsesBackToTheReport) {
  auto r = run(with_json({"paper", "--case", "prop3_pgl"}));
  ASSERT_EQ(r.code, 0) << r.err;
  CaseParams p;
  p.id = CaseId::Prop3Pgl;
  EXPECT_EQ(cli::case_report_from_json(nlohmann::json::parse(r.out)), run_case(p));
}

TEST(Json, SchemaViolationsThrow) {
  using nlohmann::json;
  EXPECT_THROW(cli::case_report_from_json(json::parse("{}")), ParseError);
  EXPECT_THROW(cli::case_report_from_json(json::parse(R"({"id": 3, "inputs": [], "checks": []})")), ParseError);
  auto bad_status = json::parse(
      R"({"id": "x", "inputs": [], "checks": [{"name": "a", "status": "MAYBE", "expected": "", "observed": "", "certificate": []}]})");
  EXPECT_THROW(cli::case_report_from_json(bad_status), ParseError);
  auto wrong_pass = json::parse(
      R"({"id": "x", "inputs": [], "pass": true, "checks": [{"name": "a", "status": "FAIL", "expected": "", "observed": "", "certificate": []}]})");
  EXPECT_THROW(cli::case_report_from_json(wrong_pass), ParseError);
}

TEST(Json, DixonTable) {
  auto r = run(with_json({"dixon", "--group", "q8"}));
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["classes"].size(), 5u);
  EXPECT_EQ(j["rows"].size(), 5u);
  EXPECT_EQ(cli::resolve_table("dixon:q8"), dixon_table(group_build(parse_group_spec("q8"))));
}
