#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sip/chartab/table.hpp"
#include "sip/modhelp/modhelp.hpp"

namespace sip {

enum class CaseId {
  PslTable1,
  PslTable2,
  Thm2C4xC2,
  Thm2C2Cubed,
  Thm2Q8,
  QdCase,
  QCase,
  DCase,
  Prop3Pgl,
  Lemma2Groups,
};

/// "psl_table1", "qd_case", ...
std::string to_string(CaseId id);
/// Accepts the full id or its short form without "_case" ("qd", "d").
/// Throws InvalidArgument.
CaseId parse_case_id(const std::string& text);
const std::vector<CaseId>& all_cases();

struct CaseParams {
  CaseId id = CaseId::PslTable1;
  /// Field sizes for the table cross-checks and q-dependent rows. nullopt
  /// selects the case defaults; an empty list skips the cross-checks.
  std::optional<std::vector<long>> q;
  std::vector<MMode> modes{MMode::symbolic()};
  /// lemma_2groups only: a power of 2 up to 64.
  long max_order = 16;
};

enum class CheckStatus { Pass, Fail, Skipped };
std::string to_string(CheckStatus s);
CheckStatus parse_check_status(const std::string& text);

struct SubCheck {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string expected;
  std::string observed;
  /// Witnesses or surviving assignments backing the verdict.
  std::vector<std::string> certificate;

  friend bool operator==(const SubCheck&, const SubCheck&) = default;
};

struct CaseReport {
  std::string id;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<SubCheck> checks;

  /// No sub-check failed. Skipped entries stay visible but do not fail.
  bool pass() const;
  friend bool operator==(const CaseReport&, const CaseReport&) = default;
};

/// Runs one case end to end. Throws InvalidArgument when a parameter does
/// not fit the case (q not an odd prime power, q not a square for d_case,
/// q not +-1 mod 8 for thm2_q8, ...).
CaseReport run_case(const CaseParams& params);

/// ffrep values at m = 1 against the shipped tables, for every family that
/// applies to each q.
CaseReport verify_tables(const std::vector<long>& q_list);

struct SummaryEntry {
  std::string id;
  bool pass = false;
  double seconds = 0;
};
struct Summary {
  std::vector<CaseReport> reports;
  std::vector<SummaryEntry> entries;
  bool pass() const;
};

/// Every case with the given modes. nullopt q_set uses per-case defaults; an
/// empty q_set skips all table verification.
Summary run_all(const std::vector<MMode>& modes, const std::optional<std::vector<long>>& q_set = std::nullopt);

/// The real row of degree q + eps used against Q8: values on 1a, 2a, 4a of
/// table1.ctab, and no value on 2b. q must satisfy q = +-1 mod 8.
CharacterRow eta_prime_row(long q);
/// table1.ctab with eta_prime_row(q) appended.
CharacterTable q8_host_table(long q);

}  // namespace sip
