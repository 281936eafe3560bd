#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sip/exactnum/char_value.hpp"
#include "sip/group/group.hpp"

namespace sip {

struct TableClass {
  std::string name;
  long rep_order = 1;
  std::optional<CharValue> size;  // unknown in parametric host tables
  std::vector<std::pair<long, int>> powers;  // prime -> class index

  std::optional<int> power(long p) const;
  /// Size as an integer if known and m-free.
  std::optional<BigInt> size_int() const;

  friend bool operator==(const TableClass&, const TableClass&) = default;
};

enum class RowKind { Ordinary, Brauer };

struct CharacterRow {
  std::string name;
  std::vector<std::optional<CharValue>> values;
  RowKind kind = RowKind::Ordinary;
  /// Characteristic of a Brauer row; 0 stands for "some odd prime".
  long brauer_p = 0;
  bool real_afforded = false;

  bool defined_on(int c) const { return values[c].has_value(); }
  const CharValue& at(int c) const;
  /// True when a Brauer row may be evaluated on elements of order n.
  bool admits_order(long n) const;

  friend bool operator==(const CharacterRow&, const CharacterRow&) = default;
};

class CharacterTable {
 public:
  std::string name;
  std::optional<CharValue> order;
  bool partial = false;
  std::vector<TableClass> classes;
  std::vector<CharacterRow> rows;

  int num_classes() const { return static_cast<int>(classes.size()); }
  /// -1 when absent.
  int class_index(const std::string& name) const;
  int row_index(const std::string& name) const;
  /// The unique class of representative order 1.
  int identity_class() const;
  std::optional<BigInt> order_int() const;
  /// Class of rep(c)^k via the prime power maps; nullopt if a map is missing.
  std::optional<int> power_class(int c, long k) const;
  /// Class containing the inverses of class c.
  std::optional<int> inverse_class(int c) const;

  /// Throws ParseError naming the offending class or row.
  void validate() const;

  friend bool operator==(const CharacterTable&, const CharacterTable&) = default;
};

/// Reads the line-oriented .ctab format.
CharacterTable parse_ctab(const std::string& text);
std::string write_ctab(const CharacterTable& t);
/// A shipped table by file name (e.g. "table4.ctab") or a path on disk.
CharacterTable load_ctab(const std::string& name_or_path);

/// Complete ordinary character table; class order matches conjugacy_classes(G).
CharacterTable dixon_table(const FiniteGroup& G, bool allow_large = false);

/// (1/|G|) sum_g psi(g^2).
int fs_indicator(const CharacterTable& t, const CharacterRow& row);

/// Induces a class function from a normal subgroup: for a host class h the
/// value is index times the size-weighted mean of the fused subgroup values
/// (the plain value when one class fuses). Host classes missed by the fusion
/// get 0.
CharacterRow induce_by_fusion(const CharacterTable& sub, const CharacterRow& row, const std::vector<int>& fusion,
                              const CharValue& index, const CharacterTable& host);

struct OrthogonalityReport {
  bool rows_ok = true;
  bool columns_ok = true;
  bool degrees_ok = true;
  std::vector<std::string> failures;
  bool ok() const { return rows_ok && columns_ok && degrees_ok; }
};
/// Exact row and column orthogonality and sum of squared degrees.
OrthogonalityReport check_orthogonality(const CharacterTable& t);

/// True iff the two tables agree up to a permutation of rows and of classes
/// with equal (representative order, size).
bool tables_equivalent(const CharacterTable& a, const CharacterTable& b);

}  // namespace sip
