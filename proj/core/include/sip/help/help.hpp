#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sip/chartab/table.hpp"

namespace sip {

/// Partial augmentations of one unit, one entry per class of the host table.
struct EpsVector {
  std::vector<long> eps;

  long operator[](int c) const { return eps[c]; }
  long sum() const;
  /// The class c when this is the indicator of c.
  std::optional<int> indicator_class() const;
  bool is_indicator() const { return indicator_class().has_value(); }
  static EpsVector indicator(int num_classes, int c);

  /// "(2a, 2b, 4a) = (0, 0, 1)" over the classes with a non-forced entry, or
  /// all classes when `classes` is empty.
  std::string to_string(const CharacterTable& t, const std::vector<int>& classes = {}) const;

  friend bool operator==(const EpsVector&, const EpsVector&) = default;
  friend auto operator<=>(const EpsVector&, const EpsVector&) = default;
};

/// A candidate unit u of order n with its powers: levels[d] = eps(u^d) for
/// every divisor d of n (levels[1] is u, levels[n] the identity).
struct EpsChain {
  long order = 1;
  std::map<long, EpsVector> levels;
  /// Symbolic mode only: the constraints hold for some but not all odd m.
  bool conditional = false;
  std::optional<long> witness_m;

  const EpsVector& top() const { return levels.at(1); }

  friend bool operator==(const EpsChain& a, const EpsChain& b) { return a.order == b.order && a.levels == b.levels; }
};

/// Linear form c + sum_x eps_x * v_x in the partial augmentations.
template <class V>
struct EpsLinear {
  V constant{};
  std::map<int, V> coeffs;
  bool is_constant() const { return coeffs.empty(); }
};
using CharForm = EpsLinear<CharValue>;
using MultiplicityForm = EpsLinear<OddAffine>;

struct HelpOptions {
  bool use_lp_multiplicities = true;
  bool use_cl_congruences = true;
  /// Extra classes to treat as central (besides the classes of size 1).
  std::vector<std::string> central_classes;
  MMode mode = MMode::symbolic();
  /// Rows to use; empty means every row admitted for the unit order.
  std::vector<std::string> rows;
  /// Cap on enumeration nodes per level; exceeding it throws ResourceLimit.
  std::uint64_t node_limit = 50'000'000;
};

struct HelpProblem {
  long order = 1;
  CharacterTable table;
  HelpOptions options;
};

struct SolutionSet {
  long order = 1;
  /// Admissible chains for every divisor d of the order, sorted.
  std::map<long, std::vector<EpsChain>> by_order;
  std::vector<std::string> notices;

  const std::vector<EpsChain>& top() const { return by_order.at(order); }
  bool contains(const EpsChain& c) const;
  /// Index in by_order[order / p] of the chain of u^p, for a prime p.
  std::optional<int> below(const EpsChain& c, long p) const;
};

/// Classes x with eps_x(u) = 0 forced for u of order n: representative order
/// not dividing n, plus the central classes (size 1 or listed) when n > 1.
/// For n = 1 every class except the identity.
std::set<std::string> forced_zero_classes(long n, const CharacterTable& t,
                                          const std::vector<std::string>& extra_central = {});

/// chi(u) as a form in eps(u): sum_x eps_x chi(x) over the given classes.
CharForm unknown_value(const CharacterRow& row, const std::vector<int>& classes);
/// chi(u) for known partial augmentations.
CharValue aggregate(const CharacterRow& row, const EpsVector& eps);

/// mu_l(u, chi) = (1/n) sum_{d | n} Tr_{Q(zeta_{n/d})/Q}(chi(u^d) zeta_n^{-dl}).
/// `chi_on_powers` maps every divisor d of n to chi(u^d).
MultiplicityForm lp_multiplicity(const std::map<long, CharForm>& chi_on_powers, long n, long l);
/// All mu_l for one row, with the lower levels taken from `chain` (levels
/// d > 1 must be present). Brauer rows need gcd(p, n) = 1.
std::vector<MultiplicityForm> row_multiplicities(const CharacterTable& t, const CharacterRow& row,
                                                 const std::map<long, EpsVector>& lower, long n,
                                                 const std::vector<int>& vars);

struct Congruence {
  std::vector<int> classes;  // the sum of eps over these classes
  long modulus = 2;
  long residue = 0;
  std::string to_string(const CharacterTable& t) const;
};
struct CongruenceRules {
  std::vector<Congruence> rules;
  std::optional<std::string> notice;  // set when the rules were skipped
};
/// For n = p^k: the classes of order exactly p^k sum to 1 mod p, and every
/// class of order p^j with 1 <= j < k has eps = 0 mod p.
CongruenceRules cl_congruences(long n, const CharacterTable& t);

/// Exhaustive integer enumeration, bottom-up along the divisors of n. Throws
/// Unbounded when no admitted row bounds the variables and InvalidState when
/// a needed power map is missing.
SolutionSet solve_eps(const HelpProblem& problem);

/// True iff every level of the chain is the indicator of a single class.
bool is_trivial_chain(const EpsChain& chain);

/// The chain delta_{c^d} of a genuine element of class c.
EpsChain genuine_chain(const CharacterTable& t, int c);

}  // namespace sip
