#include "sip/papercases/papercases.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "sip/error.hpp"
#include "sip/ffrep/ffrep.hpp"
#include "sip/help/help.hpp"
#include "sip/numtheory.hpp"

namespace sip {

namespace {

const std::vector<std::pair<CaseId, std::string>>& case_names() {
  static const std::vector<std::pair<CaseId, std::string>> names{
      {CaseId::PslTable1, "psl_table1"},      {CaseId::PslTable2, "psl_table2"}, {CaseId::Thm2C4xC2, "thm2_c4xc2"},
      {CaseId::Thm2C2Cubed, "thm2_c2cubed"},  {CaseId::Thm2Q8, "thm2_q8"},       {CaseId::QdCase, "qd_case"},
      {CaseId::QCase, "q_case"},              {CaseId::DCase, "d_case"},         {CaseId::Prop3Pgl, "prop3_pgl"},
      {CaseId::Lemma2Groups, "lemma_2groups"}};
  return names;
}

}  // namespace

std::string to_string(CaseId id) {
  for (const auto& [c, n] : case_names())
    if (c == id) return n;
  return "?";
}

CaseId parse_case_id(const std::string& text) {
  for (const auto& [c, n] : case_names())
    if (n == text || n == text + "_case") return c;
  throw InvalidArgument("unknown case id " + text);
}

const std::vector<CaseId>& all_cases() {
  static const std::vector<CaseId> ids = [] {
    std::vector<CaseId> v;
    for (const auto& p : case_names()) v.push_back(p.first);
    return v;
  }();
  return ids;
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skipped: return "SKIPPED";
  }
  return "?";
}

CheckStatus parse_check_status(const std::string& text) {
  for (auto s : {CheckStatus::Pass, CheckStatus::Fail, CheckStatus::Skipped})
    if (to_string(s) == text) return s;
  throw ParseError("unknown check status " + text);
}

bool CaseReport::pass() const {
  return std::none_of(checks.begin(), checks.end(), [](const SubCheck& c) { return c.status == CheckStatus::Fail; });
}

bool Summary::pass() const {
  return std::all_of(reports.begin(), reports.end(), [](const CaseReport& r) { return r.pass(); });
}

namespace {

long eps_of(long q) { return q % 4 == 1 ? 1 : -1; }
bool pm1_mod8(long q) { return q % 8 == 1 || q % 8 == 7; }

void require_odd_prime_power(long q) {
  if (q < 3 || !nt::is_prime_power(q) || q % 2 == 0)
    throw InvalidArgument("q must be an odd prime power, got " + std::to_string(q));
}

bool is_square_power(long q) {
  auto [p, k] = nt::prime_power(q);
  return p != 0 && k % 2 == 0;
}

std::string mode_tag(const MMode& m) { return "[" + m.to_string() + "]"; }

std::string join(const std::vector<std::string>& parts, const std::string& sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string q_list_text(const std::vector<long>& qs) {
  std::vector<std::string> s;
  for (long q : qs) s.push_back(std::to_string(q));
  return join(s);
}

SubCheck make(const std::string& name, bool ok, std::string expected, std::string observed,
              std::vector<std::string> cert = {}) {
  return {name, ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(expected), std::move(observed), std::move(cert)};
}

// ---- table cross-checks -------------------------------------------------

// Compares ffrep values (m = 1) with the table rows; row_map: ffrep -> table.
SubCheck table_check(const std::string& name, const CharacterTable& t, const CaseValues& v,
                     const std::vector<std::pair<std::string, std::string>>& row_map) {
  bool ok = true;
  std::vector<std::string> expected, observed, cert;
  for (const auto& [from, to] : row_map) {
    const auto& got = v.row(from);
    int ri = t.row_index(to);
    if (ri < 0) throw InvalidState("table " + t.name + " has no row " + to);
    std::vector<std::string> e, o;
    for (std::size_t i = 0; i < v.classes.size(); ++i) {
      int c = t.class_index(v.classes[i]);
      if (c < 0) throw InvalidState("table " + t.name + " has no class " + v.classes[i]);
      CharValue want = apply_mode(t.rows[ri].at(c), MMode::fixed(1));
      CharValue have(got.values[i]);
      ok &= want == have;
      e.push_back(want.to_string());
      o.push_back(have.to_string());
    }
    expected.push_back(to + " = (" + join(e) + ")");
    observed.push_back(to + " = (" + join(o) + ")");
  }
  for (const auto& el : v.elements) cert.push_back(el.class_name + ": element of " + el.description);
  for (const auto& n : v.notes) cert.push_back(n);
  return make(name, ok, "on (" + join(v.classes) + "): " + join(expected, "; "), join(observed, "; "), cert);
}

void psl_table_checks(CaseReport& rep, const std::vector<long>& qs) {
  for (long q : qs) {
    bool in_psl = pm1_mod8(q);
    const char* file = in_psl ? "table1.ctab" : "table2.ctab";
    rep.checks.push_back(table_check(std::string(file) + " vs ffrep, q=" + std::to_string(q), load_ctab(file),
                                     psl_values(q, in_psl), {{"chi", "chi"}, {"psi+", "psi+"}, {"psi-", "psi-"}}));
  }
}

// ---- engine helpers --------------------------------------------------------

SolutionSet solve(const CharacterTable& t, long n, const MMode& mode) {
  HelpProblem p{n, t, {}};
  p.options.mode = mode;
  return solve_eps(p);
}

std::set<std::vector<long>> tops(const SolutionSet& s, const CharacterTable& t, const std::vector<std::string>& cls) {
  std::set<std::vector<long>> out;
  for (const auto& ch : s.top()) {
    std::vector<long> v;
    for (const auto& c : cls) v.push_back(ch.top()[t.class_index(c)]);
    out.insert(v);
  }
  return out;
}

std::string tops_text(const std::set<std::vector<long>>& s, const std::vector<std::string>& cls) {
  std::vector<std::string> items;
  for (const auto& v : s) {
    std::vector<std::string> e;
    for (long x : v) e.push_back(std::to_string(x));
    items.push_back("(" + join(e) + ")");
  }
  return "(" + join(cls) + ") in {" + join(items) + "}";
}

SubCheck solutions_check(const std::string& name, const CharacterTable& t, long n, const MMode& mode,
                         const std::vector<std::string>& cls, const std::set<std::vector<long>>& want) {
  auto s = solve(t, n, mode);
  auto got = tops(s, t, cls);
  std::vector<std::string> cert;
  for (const auto& ch : s.top()) cert.push_back(ch.top().to_string(t) + (is_trivial_chain(ch) ? " trivial" : " non-trivial"));
  for (const auto& note : s.notices) cert.push_back(note);
  return make(name, got == want, tops_text(want, cls), tops_text(got, cls), cert);
}

const TargetGroup& target(const std::string& spec) {
  static const std::map<std::string, TargetGroup> cache = [] {
    std::map<std::string, TargetGroup> m;
    for (const char* s : {"c4xc2", "e2^3", "e2^2", "q8", "d8"}) m.emplace(s, TargetGroup::make(parse_group_spec(s)));
    return m;
  }();
  return cache.at(spec);
}

Certificate subgroup_search(const std::string& U, const CharacterTable& host, const CharacterTable& help_table,
                            const MMode& mode, const std::vector<std::string>& rows = {}) {
  ModHelpOptions o;
  o.mode = mode;
  o.host_rows = rows;
  const auto& T = target(U);
  return search_assignments(T, host, solve(help_table, T.group.exponent(), mode).by_order, o);
}

std::vector<std::string> certificate_lines(const Certificate& c, const TargetGroup& U, const CharacterTable& host,
                                           std::size_t cap = 6) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < c.witnesses.size() && i < cap; ++i)
    out.push_back(c.witnesses[i].to_string() + " for " + c.witnesses[i].assignment.to_string(U, host));
  for (std::size_t i = 0; i < c.assignments.size() && i < cap; ++i) {
    std::string line = "survivor " + c.assignments[i].to_string(U, host);
    if (c.survivor_m[i]) line += " (m=" + c.survivor_m[i]->get_str() + ")";
    out.push_back(line);
  }
  out.push_back(std::to_string(c.branches) + " complete assignments, " + std::to_string(c.rejected) + " rejected");
  for (const auto& n : c.notes) out.push_back(n);
  return out;
}

// Infeasible, every witness re-checks as violated (also at sampled m), and
// `expect` holds for at least one witness.
SubCheck exclusion_check(const std::string& name, const std::string& U, const CharacterTable& host,
                         const CharacterTable& help_table, const MMode& mode, const std::string& expected,
                         const std::function<bool(const Witness&)>& expect,
                         const std::vector<std::string>& rows = {}) {
  auto cert = subgroup_search(U, host, help_table, mode, rows);
  bool recheck = !cert.witnesses.empty();
  for (const auto& w : cert.witnesses) {
    recheck &= w.violated(mode);
    if (mode.is_symbolic())
      for (long m = 1; m <= 19; m += 2) recheck &= w.violated(MMode::fixed(m));
  }
  bool matched = std::any_of(cert.witnesses.begin(), cert.witnesses.end(), expect);
  std::string observed = cert.feasible ? "feasible" : "infeasible";
  if (!cert.feasible) {
    observed += recheck ? ", witnesses re-check" : ", a witness does not re-check";
    observed += matched ? ", expected witness found" : ", expected witness missing";
  }
  return make(name, !cert.feasible && recheck && matched, "infeasible: " + expected, observed,
              certificate_lines(cert, target(U), host));
}

std::function<bool(const Witness&)> numerator_is(const std::string& row_prefix, const CharValue& num,
                                                 WitnessKind kind = WitnessKind::NotNonNegativeInteger) {
  return [=](const Witness& w) {
    return w.kind == kind && w.host_row.rfind(row_prefix, 0) == 0 && w.numerator == num && w.denominator == 8;
  };
}

std::vector<long> pick_q(const CaseParams& p, std::vector<long> defaults) { return p.q ? *p.q : defaults; }

// ---- the cases -----------------------------------------------------------

void psl_case(CaseReport& rep, const CaseParams& p, bool in_psl) {
  const char* file = in_psl ? "table1.ctab" : "table2.ctab";
  auto qs = pick_q(p, in_psl ? std::vector<long>{7, 9, 17} : std::vector<long>{5, 11, 13});
  for (long q : qs) {
    require_odd_prime_power(q);
    if (pm1_mod8(q) != in_psl)
      throw InvalidArgument(std::string(file) + " needs q = " + (in_psl ? "+-1" : "+-3") + " mod 8, got " + std::to_string(q));
  }
  rep.inputs = {{"table", file}, {"q", q_list_text(qs)}};
  psl_table_checks(rep, qs);
  auto t = load_ctab(file);
  const std::vector<std::string> cls{"2a", "2b", "4a"};
  for (const auto& mode : p.modes) {
    rep.checks.push_back(solutions_check("units of order 2 " + mode_tag(mode), t, 2, mode, cls, {{1, 0, 0}, {0, 1, 0}}));
    rep.checks.push_back(solutions_check("units of order 4 " + mode_tag(mode), t, 4, mode, cls, {{0, 0, 1}}));
    auto s = solve(t, 4, mode);
    bool trivial = std::all_of(s.top().begin(), s.top().end(), is_trivial_chain);
    bool square_2a = std::all_of(s.top().begin(), s.top().end(),
                                 [&](const EpsChain& c) { return c.levels.at(2).indicator_class() == t.class_index("2a"); });
    rep.checks.push_back(make("order 4 rationally conjugate, squares in 2a " + mode_tag(mode), trivial && square_2a,
                              "every chain trivial with u^2 in 2a",
                              std::string(trivial ? "trivial" : "non-trivial chain") + (square_2a ? ", u^2 in 2a" : ", u^2 not in 2a")));
  }
}

void thm2_abelian_case(CaseReport& rep, const CaseParams& p, bool c4xc2) {
  auto qs = pick_q(p, {5, 7});
  for (long q : qs) require_odd_prime_power(q);
  rep.inputs = {{"target", c4xc2 ? "c4xc2" : "e2^3"}, {"q", q_list_text(qs)}};
  psl_table_checks(rep, qs);
  const auto m = CharValue::m();
  for (const auto* file : {"table1.ctab", "table2.ctab"}) {
    auto t = load_ctab(file);
    for (const auto& mode : p.modes) {
      CharValue num = c4xc2 ? CharValue(4) * m : CharValue(-4) * m;
      std::string expected = c4xc2 ? "<psi, 1> = (3m - 3m + 4m)/8 = m/2" : "<psi, 1> = (3m - 7m)/8 = -m/2";
      rep.checks.push_back(exclusion_check(std::string(c4xc2 ? "C4xC2" : "C2^3") + " in " + file + " " + mode_tag(mode),
                                           c4xc2 ? "c4xc2" : "e2^3", t, t, mode, expected, numerator_is("psi", num)));
    }
  }
}

void thm2_q8_case(CaseReport& rep, const CaseParams& p) {
  const std::vector<long> defaults{7, 9, 17, 23};
  auto table_q = pick_q(p, defaults);
  auto qs = table_q.empty() ? defaults : table_q;
  for (long q : qs) {
    require_odd_prime_power(q);
    if (!pm1_mod8(q)) throw InvalidArgument("thm2_q8 needs q = +-1 mod 8, got " + std::to_string(q));
  }
  rep.inputs = {{"target", "q8"}, {"q", q_list_text(qs)}};
  psl_table_checks(rep, table_q);
  auto t1 = load_ctab("table1.ctab"), t2 = load_ctab("table2.ctab");
  for (const auto& mode : p.modes) {
    // 4a outside PSL(2,q): the average of chi over Q8 is (2 - 6)/8.
    rep.checks.push_back(exclusion_check(
        "Q8 in table2.ctab, row chi " + mode_tag(mode), "q8", t2, t2, mode, "<chi, 1> = (2 - 6)/8 = -1/2",
        [](const Witness& w) { return w.host_row == "chi" && w.numerator == CharValue(-4); }, {"chi"}));
    for (long q : qs) {
      long e = eps_of(q);
      auto host = q8_host_table(q);
      CharValue num = CharValue(2 * (q + e) + 4 * e) * CharValue::m();
      std::ostringstream ex;
      ex << "<eta', lambda> = (2m(q+eps) + 4m eps)/8 = m((q-eps)/4 + eps) odd, q=" << q << ", eps=" << e;
      rep.checks.push_back(exclusion_check("Q8 in table1.ctab + eta', q=" + std::to_string(q) + " " + mode_tag(mode), "q8",
                                           host, t1, mode, ex.str(),
                                           numerator_is("eta'", num, WitnessKind::OddMultiplicity)));
    }
  }
}

void qd_case(CaseReport& rep, const CaseParams& p) {
  auto qs = pick_q(p, {3, 5});
  for (long q : qs) require_odd_prime_power(q);
  rep.inputs = {{"table", "table3.ctab"}, {"target", "c4xc2"}, {"q", q_list_text(qs)}};
  auto t = load_ctab("table3.ctab");
  for (long q : qs)
    rep.checks.push_back(table_check("table3.ctab vs ffrep, q=" + std::to_string(q), t, qd_values(q), {{"chi'", "chi"}}));
  const int c2 = t.class_index("2a");
  for (const auto& mode : p.modes) {
    // chi(u) = -2m eps_2a(u) with eps_2a(u) even, so 2 chi(u) = 0 mod 8m.
    auto s = solve(t, 4, mode);
    bool even = std::all_of(s.top().begin(), s.top().end(), [&](const EpsChain& c) { return c.top()[c2] % 2 == 0; });
    rep.checks.push_back(make("order 4: eps_2a even " + mode_tag(mode), even && !s.top().empty(),
                              "every solution has eps_2a = 0 mod 2",
                              std::to_string(s.top().size()) + " solutions" + (even ? ", all even" : ", an odd one")));
    rep.checks.push_back(exclusion_check("C4xC2 in table3.ctab " + mode_tag(mode), "c4xc2", t, t, mode,
                                         "(10m - 6m + 2chi(t) + 2chi(st))/8 with 2chi(t) = 2chi(st) = 0 mod 8: 8 | 4m",
                                         [&](const Witness& w) {
                                           if (w.denominator != 8 || w.kind != WitnessKind::NotNonNegativeInteger) return false;
                                           auto v = w.numerator.as_odd_affine();
                                           if (!v) return false;
                                           // residual 4m: m-coefficient = 4 mod 8, no constant term
                                           BigInt s4 = v->slope().numerator();
                                           return v->constant().is_zero() && v->slope().is_integer() && ((s4 % 8) + 8) % 8 == 4;
                                         }));
  }
}

void q_case(CaseReport& rep, const CaseParams& p) {
  auto qs = pick_q(p, {3, 5});
  for (long q : qs) require_odd_prime_power(q);
  rep.inputs = {{"table", "table4.ctab"}, {"target", "c4xc2"}, {"q", q_list_text(qs)}};
  auto t = load_ctab("table4.ctab");
  for (long q : qs)
    rep.checks.push_back(table_check("table4.ctab vs ffrep, q=" + std::to_string(q), t, qgroup_values(q), {{"chi", "chi"}}));
  const std::vector<std::string> cls{"2a", "2b", "4a"};
  for (const auto& mode : p.modes) {
    rep.checks.push_back(solutions_check("units of order 2 " + mode_tag(mode), t, 2, mode, cls, {{1, 0, 0}, {0, 1, 0}}));
    rep.checks.push_back(solutions_check("units of order 4 " + mode_tag(mode), t, 4, mode, cls, {{0, 0, 1}}));
    rep.checks.push_back(exclusion_check("C4xC2 in table4.ctab " + mode_tag(mode), "c4xc2", t, t, mode,
                                         "t^2 is the central element of 2a, <chi, 1> = (6m - 2m)/8 = m/2",
                                         numerator_is("chi", CharValue(4) * CharValue::m())));
  }
}

void d_case(CaseReport& rep, const CaseParams& p) {
  auto qs = pick_q(p, {9, 25});
  for (long q : qs) {
    require_odd_prime_power(q);
    if (!is_square_power(q)) throw InvalidArgument("d_case needs q to be a square, got " + std::to_string(q));
  }
  rep.inputs = {{"table", "table5.ctab"}, {"target", "c4xc2"}, {"q", q_list_text(qs)}};
  auto t = load_ctab("table5.ctab");
  for (long q : qs)
    rep.checks.push_back(table_check("table5.ctab vs ffrep, q=" + std::to_string(q), t, dgroup_values(q),
                                     {{"chi", "chi"}, {"psi", "psi"}, {"eta", "eta"}}));
  const std::vector<std::string> cls{"2a", "4a", "4b"};
  for (const auto& mode : p.modes) {
    rep.checks.push_back(solutions_check("units of order 4 " + mode_tag(mode), t, 4, mode, cls, {{0, 1, 0}, {0, 0, 1}}));
    rep.checks.push_back(exclusion_check("C4xC2 in table5.ctab " + mode_tag(mode), "c4xc2", t, t, mode,
                                         "4eta(t) = 0 mod 8 forces m/2 to be an integer",
                                         [](const Witness& w) { return w.denominator == 8; }));
  }
}

void prop3_case(CaseReport& rep, const CaseParams& p) {
  auto qs = pick_q(p, {5, 11});
  for (long q : qs) {
    require_odd_prime_power(q);
    if (pm1_mod8(q)) throw InvalidArgument("prop3_pgl uses order-4 elements outside PSL(2,q): q = +-3 mod 8, got " + std::to_string(q));
  }
  rep.inputs = {{"table", "table2.ctab"}, {"targets", "d8, e2^2"}, {"q", q_list_text(qs)}};
  psl_table_checks(rep, qs);
  auto t = load_ctab("table2.ctab");
  const int h2a = t.class_index("2a"), h2b = t.class_index("2b"), h4a = t.class_index("4a");
  for (const auto& mode : p.modes) {
    {
      const auto& U = target("d8");
      ModHelpOptions o;
      o.mode = mode;
      auto cert = search_assignments(U, t, solve(t, 4, mode).by_order, o);
      bool ok = cert.feasible;
      for (const auto& a : cert.assignments) {
        int central_ok = 0, split_2b = 0, split_2a = 0, order4_ok = 0;
        for (std::size_t c = 0; c < U.classes.classes.size(); ++c) {
          const auto& cl = U.classes.classes[c];
          auto x = a.eps[c].indicator_class();
          if (cl.rep_order == 2 && cl.size == 1) central_ok += x == h2a;
          if (cl.rep_order == 2 && cl.size > 1) {
            split_2a += x == h2a;
            split_2b += x == h2b;
          }
          if (cl.rep_order == 4) order4_ok += x == h4a;
        }
        ok &= central_ok == 1 && split_2a == 1 && split_2b == 1 && order4_ok == 1;
      }
      rep.checks.push_back(make("D8: central involution in 2a, non-central split 2a/2b " + mode_tag(mode), ok,
                                "every surviving assignment sends the centre to 2a and exactly one non-central class to 2b",
                                ok ? "criterion satisfied (" + std::to_string(cert.assignments.size()) + " survivors)"
                                   : "distribution differs",
                                certificate_lines(cert, U, t)));
    }
    {
      const auto& U = target("e2^2");
      ModHelpOptions o;
      o.mode = mode;
      auto cert = search_assignments(U, t, solve(t, 2, mode).by_order, o);
      std::set<int> counts;
      bool all_indicators = true;
      for (const auto& a : cert.assignments) {
        int in2b = 0;
        for (std::size_t c = 0; c < U.classes.classes.size(); ++c) {
          if (U.classes.classes[c].rep_order != 2) continue;
          auto x = a.eps[c].indicator_class();
          all_indicators &= x.has_value();
          in2b += x == h2b;
        }
        counts.insert(in2b);
      }
      bool ok = cert.feasible && all_indicators && counts == std::set<int>{0, 2};
      std::vector<std::string> seen;
      for (int k : counts) seen.push_back(std::to_string(k));
      rep.checks.push_back(make("C2xC2: zero or exactly two involutions in 2b " + mode_tag(mode), ok,
                                "number of involutions in 2b in {0, 2}",
                                (ok ? "criterion satisfied, counts {" : "counts {") + join(seen) + "}",
                                certificate_lines(cert, U, t)));
    }
  }
  rep.checks.push_back({"A7", CheckStatus::Skipped, "rational conjugacy of units of order 4 in V(ZA7)",
                        "not known; excluded from the statement", {}});
}

void lemma_case(CaseReport& rep, const CaseParams& p) {
  rep.inputs = {{"max_order", std::to_string(p.max_order)}};
  auto lr = verify_lemma_2groups(p.max_order);
  std::map<std::string, int> kinds;
  std::vector<std::string> cert;
  int with = 0;
  for (const auto& e : lr.entries) {
    ++kinds[to_string(e.kind)];
    with += e.has_c4xc2;
    cert.push_back(e.group + ": " + to_string(e.kind) + (e.has_c4xc2 ? ", contains C4xC2" : ", no C4xC2"));
  }
  std::vector<std::string> k;
  for (const auto& [name, n] : kinds) k.push_back(name + " " + std::to_string(n));
  rep.checks.push_back(make("C4xC2-free iff one of the five families", lr.pass(),
                            "no counterexample",
                            std::to_string(lr.entries.size()) + " groups (" + join(k) + "), " + std::to_string(with) +
                                " contain C4xC2, " + std::to_string(lr.counterexamples.size()) + " counterexamples",
                            cert));
}

}  // namespace

CharacterRow eta_prime_row(long q) {
  require_odd_prime_power(q);
  if (!pm1_mod8(q)) throw InvalidArgument("eta' is used for q = +-1 mod 8, got " + std::to_string(q));
  const long e = eps_of(q);
  CharacterRow r;
  r.name = "eta'";
  r.real_afforded = true;
  r.values = {CharValue(q + e) * CharValue::m(), CharValue(-2 * e) * CharValue::m(), CharValue(0), std::nullopt};
  return r;
}

CharacterTable q8_host_table(long q) {
  auto t = load_ctab("table1.ctab");
  t.rows.push_back(eta_prime_row(q));
  return t;
}

CaseReport run_case(const CaseParams& params) {
  if (params.modes.empty()) throw InvalidArgument("at least one m mode is needed");
  for (const auto& m : params.modes)
    if (m.value && (*m.value < 1 || *m.value % 2 == 0)) throw InvalidArgument("m must be a positive odd integer");
  CaseReport rep;
  rep.id = to_string(params.id);
  switch (params.id) {
    case CaseId::PslTable1: psl_case(rep, params, true); break;
    case CaseId::PslTable2: psl_case(rep, params, false); break;
    case CaseId::Thm2C4xC2: thm2_abelian_case(rep, params, true); break;
    case CaseId::Thm2C2Cubed: thm2_abelian_case(rep, params, false); break;
    case CaseId::Thm2Q8: thm2_q8_case(rep, params); break;
    case CaseId::QdCase: qd_case(rep, params); break;
    case CaseId::QCase: q_case(rep, params); break;
    case CaseId::DCase: d_case(rep, params); break;
    case CaseId::Prop3Pgl: prop3_case(rep, params); break;
    case CaseId::Lemma2Groups: lemma_case(rep, params); break;
  }
  std::vector<std::string> modes;
  for (const auto& m : params.modes) modes.push_back(m.to_string());
  rep.inputs.push_back({"m", join(modes)});
  return rep;
}

CaseReport verify_tables(const std::vector<long>& q_list) {
  CaseReport rep;
  rep.id = "tables_verify";
  rep.inputs = {{"q", q_list_text(q_list)}};
  for (long q : q_list) require_odd_prime_power(q);
  psl_table_checks(rep, q_list);
  auto t3 = load_ctab("table3.ctab"), t4 = load_ctab("table4.ctab"), t5 = load_ctab("table5.ctab");
  for (long q : q_list) {
    std::string tag = ", q=" + std::to_string(q);
    rep.checks.push_back(table_check("table3.ctab vs ffrep" + tag, t3, qd_values(q), {{"chi'", "chi"}}));
    rep.checks.push_back(table_check("table4.ctab vs ffrep" + tag, t4, qgroup_values(q), {{"chi", "chi"}}));
    if (is_square_power(q))
      rep.checks.push_back(table_check("table5.ctab vs ffrep" + tag, t5, dgroup_values(q),
                                       {{"chi", "chi"}, {"psi", "psi"}, {"eta", "eta"}}));
  }
  return rep;
}

Summary run_all(const std::vector<MMode>& modes, const std::optional<std::vector<long>>& q_set) {
  Summary s;
  for (CaseId id : all_cases()) {
    CaseParams p;
    p.id = id;
    p.modes = modes;
    if (q_set && q_set->empty()) p.q = std::vector<long>{};
    auto start = std::chrono::steady_clock::now();
    s.reports.push_back(run_case(p));
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    s.entries.push_back({s.reports.back().id, s.reports.back().pass(), secs});
  }
  if (q_set && !q_set->empty()) {
    auto start = std::chrono::steady_clock::now();
    s.reports.push_back(verify_tables(*q_set));
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    s.entries.push_back({s.reports.back().id, s.reports.back().pass(), secs});
  }
  return s;
}

}  // namespace sip
