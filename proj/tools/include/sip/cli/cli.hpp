#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sip/chartab/table.hpp"
#include "sip/group/group.hpp"
#include "sip/help/help.hpp"
#include "sip/modhelp/modhelp.hpp"
#include "sip/papercases/papercases.hpp"

namespace sip::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kPass = 0;
inline constexpr int kFail = 1;
inline constexpr int kError = 2;

/// Runs one invocation. `args` excludes the program name. Reports go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// A shipped table name, a path, or "dixon:<group spec>".
CharacterTable resolve_table(const std::string& source);

nlohmann::json to_json(const CaseReport& r);
/// Throws ParseError on schema mismatch.
CaseReport case_report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Summary& s, bool timings);
nlohmann::json to_json(const CharacterTable& t);
nlohmann::json to_json(const LemmaReport& r);
nlohmann::json solutions_json(const SolutionSet& s, const CharacterTable& t, const MMode& mode);
nlohmann::json certificate_json(const Certificate& c, const TargetGroup& U, const CharacterTable& host,
                                const MMode& mode);

std::string case_report_text(const CaseReport& r);

}  // namespace sip::cli
