#include <sstream>

#include "sip/cli/cli.hpp"
#include "sip/error.hpp"

namespace sip::cli {

using nlohmann::json;

namespace {

json opt_value(const std::optional<CharValue>& v) { return v ? json(v->to_string()) : json(nullptr); }

json eps_json(const EpsVector& e, const CharacterTable& t) {
  json o = json::object();
  for (int c = 0; c < t.num_classes(); ++c) o[t.classes[c].name] = e[c];
  return o;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("report json: missing field \"") + key + "\"");
  return j.at(key);
}

std::string string_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_string()) throw ParseError(std::string("report json: field \"") + key + "\" must be a string");
  return v.get<std::string>();
}

}  // namespace

json to_json(const CaseReport& r) {
  json inputs = json::array();
  for (const auto& [k, v] : r.inputs) inputs.push_back({{"name", k}, {"value", v}});
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name},
                      {"status", to_string(c.status)},
                      {"expected", c.expected},
                      {"observed", c.observed},
                      {"certificate", c.certificate}});
  return {{"id", r.id}, {"inputs", inputs}, {"checks", checks}, {"pass", r.pass()}};
}

CaseReport case_report_from_json(const json& j) {
  CaseReport r;
  r.id = string_field(j, "id");
  const json& inputs = field(j, "inputs");
  if (!inputs.is_array()) throw ParseError("report json: \"inputs\" must be an array");
  for (const auto& in : inputs) r.inputs.emplace_back(string_field(in, "name"), string_field(in, "value"));
  const json& checks = field(j, "checks");
  if (!checks.is_array()) throw ParseError("report json: \"checks\" must be an array");
  for (const auto& c : checks) {
    SubCheck s;
    s.name = string_field(c, "name");
    s.status = parse_check_status(string_field(c, "status"));
    s.expected = string_field(c, "expected");
    s.observed = string_field(c, "observed");
    const json& cert = field(c, "certificate");
    if (!cert.is_array()) throw ParseError("report json: \"certificate\" must be an array");
    for (const auto& line : cert) {
      if (!line.is_string()) throw ParseError("report json: certificate lines must be strings");
      s.certificate.push_back(line.get<std::string>());
    }
    r.checks.push_back(std::move(s));
  }
  if (j.contains("pass") && (!j["pass"].is_boolean() || j["pass"].get<bool>() != r.pass()))
    throw ParseError("report json: \"pass\" disagrees with the sub-check statuses");
  return r;
}

json to_json(const Summary& s, bool timings) {
  json entries = json::array();
  for (const auto& e : s.entries) {
    json x = {{"id", e.id}, {"pass", e.pass}};
    if (timings) x["seconds"] = e.seconds;
    entries.push_back(x);
  }
  json reports = json::array();
  for (const auto& r : s.reports) reports.push_back(to_json(r));
  return {{"pass", s.pass()}, {"summary", entries}, {"reports", reports}};
}

json to_json(const CharacterTable& t) {
  json classes = json::array();
  for (const auto& c : t.classes) {
    json powers = json::object();
    for (const auto& [p, idx] : c.powers) powers[std::to_string(p)] = t.classes[idx].name;
    classes.push_back({{"name", c.name}, {"order", c.rep_order}, {"size", opt_value(c.size)}, {"powers", powers}});
  }
  json rows = json::array();
  for (const auto& r : t.rows) {
    json vals = json::array();
    for (const auto& v : r.values) vals.push_back(opt_value(v));
    json row = {{"name", r.name}, {"values", vals}, {"real", r.real_afforded}};
    row["kind"] = r.kind == RowKind::Brauer ? "brauer" : "ordinary";
    if (r.kind == RowKind::Brauer) row["p"] = r.brauer_p;
    rows.push_back(row);
  }
  return {{"name", t.name}, {"order", opt_value(t.order)}, {"classes", classes}, {"rows", rows}};
}

json to_json(const LemmaReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries)
    entries.push_back({{"group", e.group},
                       {"order", e.order},
                       {"kind", to_string(e.kind)},
                       {"has_c4xc2", e.has_c4xc2},
                       {"consistent", e.consistent}});
  return {{"max_order", r.max_order}, {"pass", r.pass()}, {"entries", entries}, {"counterexamples", r.counterexamples}};
}

json solutions_json(const SolutionSet& s, const CharacterTable& t, const MMode& mode) {
  json sols = json::array();
  for (const auto& ch : s.top()) {
    json levels = json::object();
    for (const auto& [d, e] : ch.levels) levels[std::to_string(d)] = eps_json(e, t);
    json x = {{"trivial", is_trivial_chain(ch)}, {"conditional", ch.conditional}, {"levels", levels}};
    x["witness_m"] = ch.witness_m ? json(*ch.witness_m) : json(nullptr);
    sols.push_back(x);
  }
  return {{"table", t.name},     {"order", s.order},  {"mode", mode.to_string()},
          {"count", sols.size()}, {"solutions", sols}, {"notices", s.notices}};
}

json certificate_json(const Certificate& c, const TargetGroup& U, const CharacterTable& host, const MMode& mode) {
  json witnesses = json::array();
  for (const auto& w : c.witnesses) {
    json parts = json::array();
    for (const auto& p : w.parts) parts.push_back(p.to_string());
    witnesses.push_back({{"kind", to_string(w.kind)},
                         {"host_row", w.host_row},
                         {"target_row", w.target_row},
                         {"numerator", w.numerator.to_string()},
                         {"denominator", w.denominator.get_str()},
                         {"assignment", w.assignment.to_string(U, host)},
                         {"parts", parts},
                         {"violated", w.violated(mode)}});
  }
  json survivors = json::array();
  for (std::size_t i = 0; i < c.assignments.size(); ++i) {
    json x = {{"assignment", c.assignments[i].to_string(U, host)}};
    x["m"] = c.survivor_m[i] ? json(c.survivor_m[i]->get_str()) : json(nullptr);
    survivors.push_back(x);
  }
  return {{"target", U.name()},
          {"table", host.name},
          {"mode", mode.to_string()},
          {"feasible", c.feasible},
          {"branches", c.branches},
          {"rejected", c.rejected},
          {"survivors", survivors},
          {"witnesses", witnesses},
          {"notes", c.notes}};
}

std::string case_report_text(const CaseReport& r) {
  std::ostringstream os;
  os << r.id << ": " << (r.pass() ? "PASS" : "FAIL") << "\n";
  for (const auto& [k, v] : r.inputs) os << "  " << k << " = " << v << "\n";
  for (const auto& c : r.checks) {
    os << "  " << to_string(c.status) << "  " << c.name << "\n";
    os << "      expected: " << c.expected << "\n";
    os << "      observed: " << c.observed << "\n";
    for (const auto& line : c.certificate) os << "      | " << line << "\n";
  }
  return os.str();
}

}  // namespace sip::cli
