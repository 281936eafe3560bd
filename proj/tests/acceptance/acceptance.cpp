// One line per acceptance criterion; exit status 1 when any line fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "reference_tables.hpp"
#include "sip/chartab/table.hpp"
#include "sip/ffrep/ffrep.hpp"
#include "sip/group/group.hpp"
#include "sip/help/help.hpp"
#include "sip/modhelp/modhelp.hpp"
#include "sip/papercases/papercases.hpp"

using namespace sip;

namespace {

const std::vector<long> kSampleM{1, 3, 5, 7, 9};

// Collects failure descriptions; the criterion passes when none are logged.
struct Log {
  std::vector<std::string> failures;
  int checks = 0;
  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
};

std::set<EpsVector> top_set(const SolutionSet& s) {
  std::set<EpsVector> out;
  for (const auto& ch : s.top()) out.insert(ch.top());
  return out;
}

SolutionSet solve(const CharacterTable& t, long n, const MMode& mode) {
  HelpProblem p{n, t, {}};
  p.options.mode = mode;
  return solve_eps(p);
}

// ---- 1 ---------------------------------------------------------------------

void tables(Log& log) {
  auto r = verify_tables({3, 5, 7, 9, 25});
  std::map<std::string, const SubCheck*> by_name;
  for (const auto& c : r.checks) {
    by_name[c.name] = &c;
    log.expect(c.status == CheckStatus::Pass, c.name + ": " + c.observed);
  }
  auto observed = [&](const std::string& name, const std::string& want) {
    auto it = by_name.find(name);
    log.expect(it != by_name.end() && it->second->observed == want, name + " should read " + want);
  };
  for (long q : {3, 5}) observed("table3.ctab vs ffrep, q=" + std::to_string(q), "chi = (10, -2, 0)");
  for (long q : {3, 5}) observed("table4.ctab vs ffrep, q=" + std::to_string(q), "chi = (1, 1, -1, 1)");
  for (long q : {9, 25})
    observed("table5.ctab vs ffrep, q=" + std::to_string(q),
             "chi = (1, 1, 1, -1); psi = (6, -2, 2, 0); eta = (4, 0, -2, 0)");
  observed("table2.ctab vs ffrep, q=5", "chi = (1, 1, -1, -1); psi+ = (3, -1, 1, -1); psi- = (3, -1, -1, 1)");
  for (long q : {7, 9})
    observed("table1.ctab vs ffrep, q=" + std::to_string(q),
             "chi = (1, 1, 1, -1); psi+ = (3, -1, 1, -1); psi- = (3, -1, 1, 1)");
}

// ---- 2 (and the sampled half of 7) -----------------------------------------

struct HelpCase {
  const char* table;
  long order;
  std::vector<const char*> classes;  // expected tops are the indicators of these
};
const std::vector<HelpCase> kHelpCases{
    {"table4.ctab", 4, {"4a"}},
    {"table1.ctab", 2, {"2a", "2b"}},
    {"table5.ctab", 4, {"4a", "4b"}},
};

std::set<EpsVector> expected_tops(const CharacterTable& t, const HelpCase& c) {
  std::set<EpsVector> want;
  for (const char* name : c.classes) want.insert(EpsVector::indicator(t.num_classes(), t.class_index(name)));
  return want;
}

void cyclic_help(Log& log) {
  for (const auto& c : kHelpCases) {
    auto t = load_ctab(c.table);
    auto s = solve(t, c.order, MMode::symbolic());
    log.expect(top_set(s) == expected_tops(t, c), std::string(c.table) + " order " + std::to_string(c.order));
    for (const auto& ch : s.top()) log.expect(!ch.conditional, std::string(c.table) + ": conditional chain");
  }
}

// ---- 3 (and the subgroup half of 7) ----------------------------------------

struct Exclusion {
  std::string label;
  std::string target;
  CharacterTable host;
  std::vector<std::string> rows;
  std::function<bool(const Witness&)> expect;
};

std::function<bool(const Witness&)> numerator_over_8(CharValue num) {
  return [num](const Witness& w) {
    return w.kind == WitnessKind::NotNonNegativeInteger && w.numerator == num && w.denominator == 8;
  };
}

std::vector<Exclusion> exclusions() {
  const CharValue m = CharValue::m();
  std::vector<Exclusion> out;
  for (const char* t : {"table1.ctab", "table2.ctab"}) {
    out.push_back({std::string("C4xC2 vs ") + t, "c4xc2", load_ctab(t), {}, numerator_over_8(4 * m)});
    out.push_back({std::string("C2^3 vs ") + t, "e2^3", load_ctab(t), {}, numerator_over_8(-4 * m)});
  }
  out.push_back({"Q8 vs table2.ctab (chi)", "q8", load_ctab("table2.ctab"), {"chi"}, numerator_over_8(-4)});
  for (long q : {7, 9, 17, 23})
    out.push_back({"Q8 vs table1.ctab + eta', q=" + std::to_string(q), "q8", q8_host_table(q), {},
                   [](const Witness& w) { return w.kind == WitnessKind::OddMultiplicity && w.host_row == "eta'"; }});
  out.push_back({"C4xC2 vs table3.ctab", "c4xc2", load_ctab("table3.ctab"), {}, [](const Witness& w) {
                   auto v = w.numerator.as_odd_affine();
                   if (!v || w.denominator != 8 || v->constant() != Rational(0)) return false;
                   auto slope = v->slope();
                   return slope.is_integer() && (slope.numerator() % 8 + 8) % 8 == 4;
                 }});
  out.push_back({"C4xC2 vs table4.ctab", "c4xc2", load_ctab("table4.ctab"), {}, numerator_over_8(4 * m)});
  out.push_back({"C4xC2 vs table5.ctab", "c4xc2", load_ctab("table5.ctab"), {}, numerator_over_8(4 * m)});
  return out;
}

Certificate search(const Exclusion& e, const MMode& mode) {
  auto U = TargetGroup::make(parse_group_spec(e.target));
  ModHelpOptions o;
  o.mode = mode;
  o.host_rows = e.rows;
  return search_assignments(U, e.host, solve(e.host, U.group.exponent(), mode).by_order, o);
}

void subgroup_exclusions(Log& log) {
  for (const auto& e : exclusions()) {
    auto cert = search(e, MMode::symbolic());
    log.expect(!cert.feasible, e.label + ": feasible");
    log.expect(!cert.witnesses.empty(), e.label + ": no witness");
    bool matched = false;
    for (const auto& w : cert.witnesses) {
      log.expect(w.violated(), e.label + ": witness does not re-check: " + w.to_string());
      for (long m : kSampleM) log.expect(w.violated(MMode::fixed(m)), e.label + ": witness holds at m=" + std::to_string(m));
      matched |= e.expect(w);
    }
    log.expect(matched, e.label + ": expected witness missing");
  }
}

// ---- 4 ---------------------------------------------------------------------

void lemma(Log& log) {
  auto r = verify_lemma_2groups(64);
  int catalogue16 = 0;
  std::set<long> orders;
  for (const auto& e : r.entries) {
    log.expect(e.consistent, e.group + ": C4xC2 presence disagrees with the family");
    catalogue16 += e.group.rfind("o16:", 0) == 0;
    orders.insert(e.order);
  }
  log.expect(catalogue16 == 14, "order-16 catalogue has " + std::to_string(catalogue16) + " groups");
  log.expect(orders.count(64) == 1, "no group of order 64");
  log.expect(r.pass(), "counterexamples reported");
}

// ---- 5 ---------------------------------------------------------------------

void soundness(Log& log) {
  const std::vector<std::string> targets{"e2^2", "c4xc2", "q8", "d8"};
  std::map<std::string, TargetGroup> U;
  for (const auto& s : targets) U.emplace(s, TargetGroup::make(parse_group_spec(s)));
  for (const auto& spec : small_group_catalogue(100)) {
    auto G = group_build(spec);
    auto t = dixon_table(G);
    auto cl = conjugacy_classes(G);
    std::map<long, std::vector<int>> by_order;
    for (int c = 0; c < t.num_classes(); ++c) by_order[t.classes[c].rep_order].push_back(c);
    for (const auto& [n, cls] : by_order) {
      auto s = solve(t, n, MMode::symbolic());
      for (int c : cls) log.expect(s.contains(genuine_chain(t, c)), spec.to_string() + ": class " + t.classes[c].name);
    }
    for (const auto& name : targets) {
      const auto& T = U.at(name);
      auto gens = find_embedding(G, T.spec);
      if (!gens) continue;
      auto genuine = genuine_assignment(T, G, cl, embedding_map(G, T.group, *gens));
      auto w = evaluate_assignment(T, t, genuine);
      log.expect(!w, spec.to_string() + " > " + name + ": genuine assignment rejected" + (w ? ": " + w->to_string() : ""));
      ModHelpOptions o;
      o.max_survivors = 1;
      auto cert = search_assignments(T, t, solve(t, T.group.exponent(), MMode::symbolic()).by_order, o);
      log.expect(cert.feasible, spec.to_string() + " > " + name + ": search infeasible");
    }
  }
}

// ---- 6 ---------------------------------------------------------------------

void dixon(Log& log) {
  struct Ref {
    const char* name;
    GroupSpec spec;
    CharacterTable ref;
  };
  std::vector<Ref> refs{
      {"D8", GroupSpec::dihedral(8), load_ctab("d8.ctab")},
      {"Q8", GroupSpec::quaternion(8), load_ctab("q8.ctab")},
      {"SD16", GroupSpec::semidihedral(16), parse_ctab(reftables::kSD16)},
      {"C4xC2", GroupSpec::direct_product({GroupSpec::cyclic(4), GroupSpec::cyclic(2)}), load_ctab("c4xc2.ctab")},
      {"S4", GroupSpec::symmetric(4), parse_ctab(reftables::kS4)},
      {"A5", GroupSpec::alternating(5), parse_ctab(reftables::kA5)},
  };
  for (const auto& r : refs) {
    auto t = dixon_table(group_build(r.spec));
    auto orth = check_orthogonality(t);
    log.expect(orth.ok(), std::string(r.name) + ": orthogonality");
    log.expect(tables_equivalent(t, r.ref), std::string(r.name) + ": differs from the reference table");
  }
  auto q8 = dixon_table(group_build(GroupSpec::quaternion(8)));
  int two_dim = -1;
  for (int i = 0; i < static_cast<int>(q8.rows.size()); ++i)
    if (q8.rows[i].at(q8.identity_class()) == CharValue(2)) two_dim = i;
  log.expect(two_dim >= 0 && fs_indicator(q8, q8.rows[two_dim]) == -1, "Q8: indicator of the 2-dim row");
}

// ---- 7 ---------------------------------------------------------------------

void agreement(Log& log) {
  for (const auto& c : kHelpCases) {
    auto t = load_ctab(c.table);
    auto sym = top_set(solve(t, c.order, MMode::symbolic()));
    for (long m : kSampleM)
      log.expect(top_set(solve(t, c.order, MMode::fixed(m))) == sym,
                 std::string(c.table) + " order " + std::to_string(c.order) + " at m=" + std::to_string(m));
  }
  for (const auto& e : exclusions()) {
    bool sym = search(e, MMode::symbolic()).feasible;
    for (long m : kSampleM)
      log.expect(search(e, MMode::fixed(m)).feasible == sym, e.label + " at m=" + std::to_string(m));
  }
}

// ---- 8 ---------------------------------------------------------------------

void prop3(Log& log) {
  CaseParams p;
  p.id = CaseId::Prop3Pgl;
  p.q = std::vector<long>{};
  auto r = run_case(p);
  log.expect(r.pass(), "prop3_pgl fails");
  bool d8 = false, klein = false, a7 = false;
  for (const auto& c : r.checks) {
    if (c.name.rfind("D8:", 0) == 0)
      d8 = c.status == CheckStatus::Pass && c.observed.rfind("criterion satisfied", 0) == 0;
    if (c.name.rfind("C2xC2:", 0) == 0) klein = c.status == CheckStatus::Pass;
    if (c.name == "A7") a7 = c.status == CheckStatus::Skipped;
  }
  log.expect(d8, "D8 distribution not reported as criterion satisfied");
  log.expect(klein, "C2xC2 distribution check");
  log.expect(a7, "A7 not surfaced as skipped");
}

struct Criterion {
  int id;
  const char* title;
  double budget;  // seconds; 0 = none stated
  void (*run)(Log&);
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "table regression", 30, tables},
      {2, "cyclic HeLP regression", 5, cyclic_help},
      {3, "subgroup exclusions", 60, subgroup_exclusions},
      {4, "2-group lemma oracle", 60, lemma},
      {5, "soundness on the catalogue", 0, soundness},
      {6, "Dixon oracle", 30, dixon},
      {7, "symbolic/sampled agreement", 0, agreement},
      {8, "PGL-branch distribution checks", 5, prop3},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Log log;
    auto start = std::chrono::steady_clock::now();
    try {
      c.run(log);
    } catch (const std::exception& e) {
      log.failures.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget > 0 && secs >= c.budget) log.failures.push_back("over the time budget");
    bool ok = log.failures.empty();
    failed += !ok;
    std::string budget = c.budget > 0 ? ", budget " + std::to_string(static_cast<int>(c.budget)) + " s" : "";
    std::printf("%s criterion %d: %s (%d checks, %.2f s%s)\n", ok ? "PASS" : "FAIL", c.id, c.title, log.checks, secs,
                budget.c_str());
    for (std::size_t i = 0; i < log.failures.size() && i < 10; ++i) std::printf("    %s\n", log.failures[i].c_str());
  }
  return failed ? 1 : 0;
}
