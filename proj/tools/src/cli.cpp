#include <algorithm>
#include <iomanip>
#include <ostream>

#include "CLI11.hpp"
#include "sip/cli/cli.hpp"
#include "sip/error.hpp"

namespace sip::cli {

using nlohmann::json;

namespace {

struct Common {
  std::string format = "text";
  bool json() const { return format == "json"; }
};

MMode odd_mode(long m) {
  if (m < 1 || m % 2 == 0) throw InvalidArgument("--m must be a positive odd integer, got " + std::to_string(m));
  return MMode::fixed(m);
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

// "none" or an empty value stands for the empty list.
std::vector<long> q_list(const std::vector<std::string>& items) {
  std::vector<long> out;
  for (const auto& s : items) {
    if (s.empty() || s == "none") continue;
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size()) throw InvalidArgument("--q expects integers, got \"" + s + "\"");
    out.push_back(v);
  }
  return out;
}

// ---- help-solve ------------------------------------------------------------

struct HelpSolveArgs {
  std::string table;
  long order = 1;
  bool no_congruences = false;
  long m = 0;
  bool m_symbolic = false;
  std::vector<std::string> rows;
};

int help_solve(const HelpSolveArgs& a, const Common& common, std::ostream& out) {
  if (a.order < 1) throw InvalidArgument("--order must be at least 1");
  HelpProblem p{a.order, resolve_table(a.table), {}};
  p.options.use_cl_congruences = !a.no_congruences;
  p.options.mode = a.m ? odd_mode(a.m) : MMode::symbolic();
  p.options.rows = a.rows;
  auto s = solve_eps(p);
  const auto& t = p.table;
  if (common.json()) {
    emit(out, solutions_json(s, t, p.options.mode));
  } else {
    out << "table " << t.name << ", order " << a.order << ", " << p.options.mode.to_string() << "\n";
    out << s.top().size() << (s.top().size() == 1 ? " solution" : " solutions") << "\n";
    int k = 0;
    for (const auto& ch : s.top()) {
      out << "  #" << ++k << " " << (is_trivial_chain(ch) ? "trivial" : "non-trivial");
      if (ch.conditional) out << ", conditional" << (ch.witness_m ? " (m=" + std::to_string(*ch.witness_m) + ")" : "");
      out << "\n";
      for (const auto& [d, e] : ch.levels) {
        if (d == a.order && d > 1) continue;
        out << "      " << (d == 1 ? std::string("u") : "u^" + std::to_string(d)) << ": " << e.to_string(t) << "\n";
      }
    }
    for (const auto& n : s.notices) out << "note: " << n << "\n";
  }
  return s.top().empty() ? kFail : kPass;
}

// ---- subgroup --------------------------------------------------------------

struct SubgroupArgs {
  std::string table;
  std::string target;
  long m = 0;
  bool m_symbolic = false;
  std::vector<std::string> rows;
};

int subgroup(const SubgroupArgs& a, const Common& common, std::ostream& out) {
  auto host = resolve_table(a.table);
  auto U = TargetGroup::make(parse_group_spec(a.target));
  ModHelpOptions o;
  o.mode = a.m ? odd_mode(a.m) : MMode::symbolic();
  o.host_rows = a.rows;
  HelpProblem p{U.group.exponent(), host, {}};
  p.options.mode = o.mode;
  auto cert = search_assignments(U, host, solve_eps(p).by_order, o);
  if (common.json()) {
    emit(out, certificate_json(cert, U, host, o.mode));
  } else {
    out << "target " << U.name() << " in " << host.name << ", " << o.mode.to_string() << ": "
        << (cert.feasible ? "feasible" : "infeasible") << "\n";
    for (std::size_t i = 0; i < cert.assignments.size(); ++i) {
      out << "  survivor " << cert.assignments[i].to_string(U, host);
      if (cert.survivor_m[i]) out << " (m=" << cert.survivor_m[i]->get_str() << ")";
      out << "\n";
    }
    for (const auto& w : cert.witnesses) {
      out << "  witness " << w.to_string() << "\n";
      out << "      for " << w.assignment.to_string(U, host) << "\n";
    }
    out << "  " << cert.branches << " complete assignments, " << cert.rejected << " rejected\n";
    for (const auto& n : cert.notes) out << "note: " << n << "\n";
  }
  return cert.feasible ? kPass : kFail;
}

// ---- paper -----------------------------------------------------------------

struct PaperArgs {
  std::string case_id;
  bool all = false;
  std::vector<std::string> q;
  bool q_given = false;
  bool m_symbolic = false;
  std::vector<long> m;
  bool timings = false;
};

int paper(const PaperArgs& a, const Common& common, std::ostream& out) {
  std::vector<MMode> modes;
  for (long m : a.m) modes.push_back(odd_mode(m));
  if (modes.empty()) modes.push_back(MMode::symbolic());
  std::optional<std::vector<long>> q;
  if (a.q_given) q = q_list(a.q);

  if (!a.all) {
    CaseParams p;
    p.id = parse_case_id(a.case_id);
    p.q = q;
    p.modes = modes;
    auto r = run_case(p);
    if (common.json())
      emit(out, to_json(r));
    else
      out << case_report_text(r);
    return r.pass() ? kPass : kFail;
  }

  auto s = run_all(modes, q);
  if (common.json()) {
    emit(out, to_json(s, a.timings));
  } else {
    for (const auto& r : s.reports) out << case_report_text(r) << "\n";
    out << "summary\n";
    for (const auto& e : s.entries) {
      out << "  " << (e.pass ? "PASS" : "FAIL") << "  " << e.id;
      if (a.timings) out << "  " << std::fixed << std::setprecision(3) << e.seconds << " s";
      out << "\n";
    }
  }
  return s.pass() ? kPass : kFail;
}

// ---- lemma -----------------------------------------------------------------

int lemma(long max_order, const Common& common, std::ostream& out) {
  auto r = verify_lemma_2groups(max_order);
  if (common.json()) {
    emit(out, to_json(r));
  } else {
    out << "2-groups of order <= " << max_order << ": " << (r.pass() ? "PASS" : "FAIL") << "\n";
    for (const auto& e : r.entries)
      out << "  " << std::left << std::setw(28) << e.group << std::setw(5) << e.order << std::setw(14)
          << to_string(e.kind) << (e.has_c4xc2 ? "contains C4xC2" : "no C4xC2") << (e.consistent ? "" : "  MISMATCH")
          << "\n";
    for (const auto& c : r.counterexamples) out << "counterexample: " << c << "\n";
  }
  return r.pass() ? kPass : kFail;
}

// ---- tables-verify / dixon -------------------------------------------------

int tables_verify(const std::vector<long>& q, const Common& common, std::ostream& out) {
  auto r = verify_tables(q);
  if (common.json())
    emit(out, to_json(r));
  else
    out << case_report_text(r);
  return r.pass() ? kPass : kFail;
}

int dixon(const std::string& spec, const Common& common, std::ostream& out) {
  auto t = dixon_table(group_build(parse_group_spec(spec)));
  if (common.json())
    emit(out, to_json(t));
  else
    out << write_ctab(t);
  return kPass;
}

}  // namespace

CharacterTable resolve_table(const std::string& source) {
  const std::string prefix = "dixon:";
  if (source.rfind(prefix, 0) == 0) {
    return dixon_table(group_build(parse_group_spec(source.substr(prefix.size()))));
  }
  return load_ctab(source);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact HeLP and ModHeLP checks for torsion units and finite subgroups of V(ZG)", "sipcheck"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  Common common;
  app.add_option("--format", common.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  HelpSolveArgs hs;
  auto* c_hs = app.add_subcommand("help-solve", "Enumerate partial augmentations of units of one order");
  c_hs->add_option("--table", hs.table, "Shipped table name, .ctab path or dixon:<group>")->required();
  c_hs->add_option("--order", hs.order, "Unit order")->required();
  c_hs->add_flag("--no-congruences", hs.no_congruences, "Drop the p-power congruence rules");
  auto* hs_m = c_hs->add_option("--m", hs.m, "Fixed odd value of m");
  c_hs->add_flag("--m-symbolic", hs.m_symbolic, "Decide for all odd m (default)")->excludes(hs_m);
  c_hs->add_option("--rows", hs.rows, "Restrict to these rows")->delimiter(',');

  SubgroupArgs sg;
  auto* c_sg = app.add_subcommand("subgroup", "Decide whether a target group can embed in V(ZG)");
  c_sg->add_option("--table", sg.table, "Shipped table name, .ctab path or dixon:<group>")->required();
  c_sg->add_option("--target", sg.target, "Group spec, e.g. c4xc2, e2^3, q8, d8")->required();
  auto* sg_m = c_sg->add_option("--m", sg.m, "Fixed odd value of m");
  c_sg->add_flag("--m-symbolic", sg.m_symbolic, "Decide for all odd m (default)")->excludes(sg_m);
  c_sg->add_option("--rows", sg.rows, "Host rows to use")->delimiter(',');

  PaperArgs pa;
  auto* c_pa = app.add_subcommand("paper", "Run a named reproduction case");
  auto* pa_case = c_pa->add_option("--case", pa.case_id, "Case id, e.g. qd, d_case, thm2_q8");
  auto* pa_all = c_pa->add_flag("--all", pa.all, "Run every case with a summary");
  pa_case->excludes(pa_all);
  auto* pa_q = c_pa->add_option("--q", pa.q, "Comma-separated field sizes, or none to skip table checks")->delimiter(',');
  auto* pa_m = c_pa->add_option("--m", pa.m, "Comma-separated odd values of m")->delimiter(',');
  c_pa->add_flag("--m-symbolic", pa.m_symbolic, "Decide for all odd m (default)")->excludes(pa_m);
  c_pa->add_flag("--timings", pa.timings, "Show wall-clock times in the --all summary");

  bool two_groups = false;
  long max_order = 16;
  auto* c_le = app.add_subcommand("lemma", "Check the C4xC2-free 2-group classification");
  c_le->add_flag("--two-groups", two_groups, "The 2-group statement")->required();
  c_le->add_option("--max-order", max_order, "Largest group order, a power of 2 up to 64");

  std::vector<long> tq{3, 5, 7, 9, 25};
  auto* c_tv = app.add_subcommand("tables-verify", "Compare generated character values with the shipped tables");
  c_tv->add_option("--q", tq, "Comma-separated field sizes")->delimiter(',');

  std::string group;
  auto* c_dx = app.add_subcommand("dixon", "Print the computed character table of a group");
  c_dx->add_option("--group", group, "Group spec")->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kPass : kError;
  }

  try {
    if (*c_hs) return help_solve(hs, common, out);
    if (*c_sg) return subgroup(sg, common, out);
    if (*c_pa) {
      if (!pa.all && pa.case_id.empty()) throw InvalidArgument("paper needs --case or --all");
      pa.q_given = pa_q->count() > 0;
      return paper(pa, common, out);
    }
    if (*c_le) return lemma(max_order, common, out);
    if (*c_tv) return tables_verify(tq, common, out);
    if (*c_dx) return dixon(group, common, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}

}  // namespace sip::cli
