#include <gtest/gtest.h>

#include <sstream>

#include "sip/error.hpp"
#include "sip/papercases/papercases.hpp"

using namespace sip;

namespace {

std::string dump(const CaseReport& r) {
  std::ostringstream os;
  os << r.id << "\n";
  for (const auto& c : r.checks) {
    os << "  " << to_string(c.status) << " " << c.name << "\n    expected: " << c.expected << "\n    observed: " << c.observed
       << "\n";
    for (const auto& l : c.certificate) os << "      " << l << "\n";
  }
  return os.str();
}

CaseParams params(CaseId id, std::vector<MMode> modes = {MMode::symbolic()}) {
  CaseParams p;
  p.id = id;
  p.modes = std::move(modes);
  return p;
}

std::vector<CheckStatus> statuses(const CaseReport& r) {
  std::vector<CheckStatus> out;
  for (const auto& c : r.checks) out.push_back(c.status);
  return out;
}

}  // namespace

TEST(CaseId, RoundTrip) {
  for (CaseId id : all_cases()) EXPECT_EQ(parse_case_id(to_string(id)), id);
  EXPECT_EQ(parse_case_id("qd"), CaseId::QdCase);
  EXPECT_EQ(parse_case_id("d"), CaseId::DCase);
  EXPECT_THROW(parse_case_id("e"), InvalidArgument);
  EXPECT_EQ(all_cases().size(), 10u);
}

TEST(Cases, EveryCasePassesSymbolically) {
  for (CaseId id : all_cases()) {
    auto r = run_case(params(id));
    EXPECT_TRUE(r.pass()) << dump(r);
    EXPECT_FALSE(r.checks.empty()) << to_string(id);
  }
}

TEST(Cases, SampledVerdictsMatchSymbolic) {
  std::vector<MMode> sampled;
  for (long m = 1; m <= 19; m += 2) sampled.push_back(MMode::fixed(m));
  for (CaseId id : all_cases()) {
    if (id == CaseId::Lemma2Groups) continue;
    CaseParams p = params(id, sampled);
    p.q = std::vector<long>{};
    auto r = run_case(p);
    EXPECT_TRUE(r.pass()) << dump(r);
  }
}

TEST(Cases, QdCertificateHasDenominatorEight) {
  auto r = run_case(params(CaseId::QdCase));
  bool seen = false;
  for (const auto& c : r.checks)
    if (c.name.rfind("C4xC2 in table3.ctab", 0) == 0) {
      seen = true;
      EXPECT_EQ(c.status, CheckStatus::Pass);
      ASSERT_FALSE(c.certificate.empty());
      // 4m(1 - eps_2a(t) - eps_2a(st)) with both eps even: 4m modulo 8m.
      EXPECT_NE(c.certificate.front().find("*m)/8: not a non-negative integer"), std::string::npos) << c.certificate.front();
    }
  EXPECT_TRUE(seen);
}

TEST(Cases, QCaseOrderFourSolutions) {
  auto r = run_case(params(CaseId::QCase));
  bool seen = false;
  for (const auto& c : r.checks)
    if (c.name == "units of order 4 [symbolic]") {
      seen = true;
      EXPECT_EQ(c.observed, "(2a, 2b, 4a) in {(0, 0, 1)}");
    }
  EXPECT_TRUE(seen) << dump(r);
}

TEST(Cases, Q8ParityForBothSigns) {
  CaseParams p = params(CaseId::Thm2Q8);
  p.q = std::vector<long>{7, 9, 17, 23};
  auto r = run_case(p);
  EXPECT_TRUE(r.pass()) << dump(r);
  int parity = 0;
  for (const auto& c : r.checks) parity += c.name.find("eta'") != std::string::npos && c.status == CheckStatus::Pass;
  EXPECT_EQ(parity, 4);
}

TEST(Cases, Prop3ReportsCriterionAndSkipsA7) {
  auto r = run_case(params(CaseId::Prop3Pgl));
  EXPECT_TRUE(r.pass()) << dump(r);
  ASSERT_FALSE(r.checks.empty());
  EXPECT_EQ(r.checks.back().name, "A7");
  EXPECT_EQ(r.checks.back().status, CheckStatus::Skipped);
  bool d8 = false;
  for (const auto& c : r.checks)
    if (c.name.rfind("D8:", 0) == 0) d8 = c.observed.rfind("criterion satisfied", 0) == 0;
  EXPECT_TRUE(d8) << dump(r);
}

TEST(Cases, LemmaTwoGroups) {
  CaseParams p = params(CaseId::Lemma2Groups);
  p.max_order = 16;
  auto r = run_case(p);
  EXPECT_TRUE(r.pass()) << dump(r);
  p.max_order = 12;
  EXPECT_THROW(run_case(p), InvalidArgument);
}

TEST(Cases, ParameterValidation) {
  CaseParams d = params(CaseId::DCase);
  d.q = std::vector<long>{15};
  EXPECT_THROW(run_case(d), InvalidArgument);
  d.q = std::vector<long>{27};
  EXPECT_THROW(run_case(d), InvalidArgument);
  CaseParams q8 = params(CaseId::Thm2Q8);
  q8.q = std::vector<long>{5};
  EXPECT_THROW(run_case(q8), InvalidArgument);
  CaseParams p1 = params(CaseId::PslTable1);
  p1.q = std::vector<long>{11};
  EXPECT_THROW(run_case(p1), InvalidArgument);
  CaseParams even = params(CaseId::QCase, {MMode::fixed(4)});
  EXPECT_THROW(run_case(even), InvalidArgument);
  EXPECT_THROW(eta_prime_row(13), InvalidArgument);
}

TEST(Tables, Verify) {
  auto r = verify_tables({3, 5, 7, 9, 25});
  EXPECT_TRUE(r.pass()) << dump(r);
  auto find = [&](const std::string& name) -> const SubCheck& {
    for (const auto& c : r.checks)
      if (c.name == name) return c;
    throw std::logic_error("missing " + name);
  };
  EXPECT_EQ(find("table3.ctab vs ffrep, q=3").observed, "chi = (10, -2, 0)");
  EXPECT_EQ(find("table3.ctab vs ffrep, q=5").observed, "chi = (10, -2, 0)");
  EXPECT_EQ(find("table4.ctab vs ffrep, q=3").observed, "chi = (1, 1, -1, 1)");
  EXPECT_EQ(find("table5.ctab vs ffrep, q=9").observed, "chi = (1, 1, 1, -1); psi = (6, -2, 2, 0); eta = (4, 0, -2, 0)");
  EXPECT_EQ(find("table1.ctab vs ffrep, q=7").observed.substr(0, 22), "chi = (1, 1, 1, -1); p");
  EXPECT_NE(find("table1.ctab vs ffrep, q=7").observed.find("psi+ = (3, -1, 1, -1)"), std::string::npos);
  EXPECT_THROW(verify_tables({15}), InvalidArgument);
}

TEST(RunAll, EmptyQSetSkipsTables) {
  auto s = run_all({MMode::symbolic()}, std::vector<long>{});
  EXPECT_TRUE(s.pass());
  EXPECT_EQ(s.entries.size(), all_cases().size());
  for (const auto& r : s.reports)
    for (const auto& c : r.checks) EXPECT_EQ(c.name.find("vs ffrep"), std::string::npos) << c.name;
}

TEST(RunAll, SampledMatchesSymbolic) {
  auto sym = run_all({MMode::symbolic()}, std::vector<long>{});
  auto smp = run_all({MMode::fixed(1), MMode::fixed(3), MMode::fixed(5)}, std::vector<long>{});
  ASSERT_EQ(sym.entries.size(), smp.entries.size());
  for (std::size_t i = 0; i < sym.entries.size(); ++i) EXPECT_EQ(sym.entries[i].pass, smp.entries[i].pass);
  EXPECT_TRUE(smp.pass());
}

TEST(Report, PassIffNoFailure) {
  CaseReport r;
  r.checks = {{"a", CheckStatus::Pass, "", "", {}}, {"b", CheckStatus::Skipped, "", "", {}}};
  EXPECT_TRUE(r.pass());
  r.checks.push_back({"c", CheckStatus::Fail, "", "", {}});
  EXPECT_FALSE(r.pass());
  EXPECT_EQ(statuses(r).size(), 3u);
}
