#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sip/chartab/table.hpp"
#include "sip/group/group.hpp"
#include "sip/help/help.hpp"

namespace sip {

/// A finite group U with its classes and ordinary character table.
struct TargetGroup {
  GroupSpec spec;
  FiniteGroup group;
  ConjClassPartition classes;
  CharacterTable table;  // class order matches `classes`

  static TargetGroup make(const GroupSpec& spec);
  std::string name() const { return spec.to_string(); }
};

/// Partial augmentations for every U-class (identity class -> delta_1a).
struct Assignment {
  std::vector<EpsVector> eps;  // indexed by U-class
  std::string to_string(const TargetGroup& U, const CharacterTable& host) const;
  friend bool operator==(const Assignment&, const Assignment&) = default;
};

/// NoCommonM: each part holds for some odd m, but no single m fits them all.
enum class WitnessKind { NotNonNegativeInteger, OddMultiplicity, NoCommonM };
std::string to_string(WitnessKind k);

/// <chi_hat, psi>_U = numerator / denominator.
struct Witness {
  WitnessKind kind = WitnessKind::NotNonNegativeInteger;
  std::string host_row;
  std::string target_row;
  CharValue numerator;
  BigInt denominator = 1;
  Assignment assignment;
  std::vector<Witness> parts;  // NoCommonM only

  /// Re-checks the violation from the stored numbers alone.
  bool violated(const MMode& mode = MMode::symbolic()) const;
  std::string to_string() const;
};

struct Certificate {
  bool feasible = false;
  std::vector<Assignment> assignments;  // survivors (capped)
  /// Per survivor: an odd m that works when not every m does.
  std::vector<std::optional<BigInt>> survivor_m;
  std::vector<Witness> witnesses;       // first failure per rejected branch (capped)
  long branches = 0;
  long rejected = 0;
  std::vector<std::string> notes;
};

/// sum_x eps_x chi(x); throws InvalidArgument when eps leaves chi's domain.
CharValue aggregated_value(const CharacterRow& chi, const EpsVector& eps);

/// (1/|U|) sum_{u in U} chi_hat(u) psi(u^-1), summed over U-classes.
CharValue subgroup_multiplicity(const TargetGroup& U, const std::vector<CharValue>& chi_hat, const CharacterRow& psi);
/// Numerator of the above over the denominator |U|.
CharValue subgroup_multiplicity_numerator(const TargetGroup& U, const std::vector<CharValue>& chi_hat, const CharacterRow& psi);

/// Evenness of a multiplicity of a row with indicator -1 inside a row
/// afforded by a real representation. Returns the verdict of "even".
/// Throws InvalidArgument when eta is not flagged real or fs(psi) != -1.
Verdict parity_filter(const CharacterRow& eta, const CharacterTable& target, const CharacterRow& psi,
                      const CharValue& multiplicity, const MMode& mode = MMode::symbolic());

struct ModHelpOptions {
  MMode mode = MMode::symbolic();
  /// Host rows to use; empty means all admitted rows.
  std::vector<std::string> host_rows;
  std::vector<std::string> central_classes;
  std::size_t max_survivors = 64;
  std::size_t max_witnesses = 64;
  long branch_limit = 5'000'000;
};

/// Checks one assignment: power compatibility is the caller's concern here,
/// only the scalar products and the parity rule are tested. nullopt = passes.
std::optional<Witness> evaluate_assignment(const TargetGroup& U, const CharacterTable& host, const Assignment& a,
                                           const ModHelpOptions& options = {});

/// Exhaustive branch over chain assignments to U-classes: conjugate elements
/// share a vector, powers follow the chains, Galois conjugates get Galois
/// conjugate values, and a central host element is taken by at most one
/// element of U. `per_order` must hold the chains for every element order
/// of U (e.g. solve_eps(exponent of U).by_order); missing orders throw
/// InvalidState.
Certificate search_assignments(const TargetGroup& U, const CharacterTable& host,
                               const std::map<long, std::vector<EpsChain>>& per_order,
                               const ModHelpOptions& options = {});

/// The assignment induced by an embedding U -> G (element images in G).
Assignment genuine_assignment(const TargetGroup& U, const FiniteGroup& G, const ConjClassPartition& Gclasses,
                              const std::vector<int>& image);

}  // namespace sip
