#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sip/exactnum/cyclotomic.hpp"
#include "sip/ffrep/matrix.hpp"

namespace sip {

enum class ActionKind { Trace0Conj, Cubics, Hermitian4, Determinant, Sign };
std::string to_string(ActionKind k);

/// A linear action of GL(n, F) on a small space, given by the matrix of each
/// group element in a fixed basis.
///
///  - Trace0Conj(q): GL(2,q) on trace-zero 2x2 matrices by X -> g X g^-1.
///  - Cubics(q, unitary): GL(3,F) on cubic forms in x, y, z by f -> f(g^t v),
///    F = F_q, or F_{q^2} when unitary.
///  - Hermitian4(q = r^2): GL(2,q) on the F_r-space of 2x2 Hermitian matrices
///    by A * H = s(A)^t H A with s the involution of F_q. This is a right
///    action: matrix_of(gh) = matrix_of(h) matrix_of(g).
///  - Determinant(q, unitary): the 1-dimensional action by det.
///  - Sign(q): the 1-dimensional action by the quadratic character of det.
class MatrixAction {
 public:
  ActionKind kind() const { return kind_; }
  long q() const { return q_; }
  bool unitary() const { return unitary_; }
  /// Entries of the acting group matrices.
  const FiniteField& group_field() const { return group_field_; }
  int group_degree() const { return group_degree_; }
  /// Order of the field the space is defined over (r for Hermitian4).
  long scalar_field_order() const { return scalar_q_; }
  int dimension() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& basis_labels() const { return labels_; }
  bool right_action() const { return kind_ == ActionKind::Hermitian4; }

  /// Matrix of g on the space, over group_field().
  FMatrix matrix_of(const FMatrix& g) const;

  /// Hermitian4 only: (the matrix of) the twisted generator of PGL*(2,q).
  /// For r = -1 mod 4 this is H -> s(g)^t s(H) g with g = diag(1, alpha); for
  /// r = 1 mod 4 it uses g = [[0, alpha], [-1, 0]], whose fourth power is
  /// alpha^4, rescaled by alpha^-1 over F_q.
  FMatrix twisted_generator() const;
  /// The matrix g of the twisted generator (so that it acts as g composed
  /// with the field involution).
  FMatrix twisted_g() const;

  /// Checks identity, composition on random pairs and the scalar kernel;
  /// throws InvalidState on failure.
  void verify(std::uint64_t seed = 1, int samples = 50) const;

 private:
  friend MatrixAction action_build(ActionKind, long, bool);
  ActionKind kind_ = ActionKind::Trace0Conj;
  long q_ = 0;
  bool unitary_ = false;
  FiniteField group_field_ = FiniteField::make(3, 1);
  int group_degree_ = 2;
  long scalar_q_ = 0;
  long r_ = 0;               // Hermitian4: q = r^2
  FieldElement w_;           // Hermitian4: F_q = F_r + F_r w
  std::vector<std::string> labels_;
};

/// Throws InvalidArgument for unusable (kind, q, unitary) combinations.
MatrixAction action_build(ActionKind kind, long q, bool unitary = false);

/// Brauer lift for one field: x = prim^a maps to E(|F|-1)^a.
class LiftContext {
 public:
  explicit LiftContext(FiniteField field);
  /// Smallest extension of F containing the n-th roots of unity (p not
  /// dividing n).
  static LiftContext splitting(const FiniteField& F, long n);

  const FiniteField& field() const { return field_; }
  FieldElement primitive() const { return field_.primitive_element(); }
  Cyclotomic lift(const FieldElement& x) const;

 private:
  FiniteField field_;
};

/// Sum of the lifted eigenvalues of M (with multiplicity). M must have order
/// coprime to p and be diagonalizable over ctx.field(), which must contain
/// the field of M.
Cyclotomic brauer_value(const FMatrix& M, const LiftContext& ctx);
/// As above with the splitting field chosen automatically.
Cyclotomic brauer_value(const FMatrix& M);
Cyclotomic brauer_value(const MatrixAction& action, const FMatrix& g);

/// An explicit element used to evaluate a case.
struct PaperElement {
  std::string class_name;
  std::string description;  // which group it lies in, e.g. "SL(3,7)"
  FMatrix matrix;
};

struct ValueRow {
  std::string name;
  std::vector<Cyclotomic> values;  // at m = 1, one per class
};

/// Values of the case characters at m = 1, on the listed classes.
struct CaseValues {
  std::vector<std::string> classes;
  std::vector<ValueRow> rows;
  std::vector<PaperElement> elements;
  std::vector<std::string> notes;

  const ValueRow& row(const std::string& name) const;
};

/// chi, psi+, psi- of PGL(2,q) on (1a, 2a, 4a, 2b). The layout with 4a in
/// PSL(2,q) needs q = +-1 mod 8, the other one q = +-3 mod 8.
CaseValues psl_values(long q, bool fourA_in_psl);
/// Determinant on -I, diag(1,-1), [[0,-1],[1,0]]: classes (1a, 2a, 2b, 4a).
CaseValues qgroup_values(long q);
/// The 10-dimensional cubic-forms character at I, A, B: classes (1a, 2a, 4a).
/// PSL(3,q) for q = 3 mod 4, PSU(3,q) for q = 1 mod 4.
CaseValues qd_values(long q);
/// chi, psi, eta of PGL*(2,q), q = r^2, on (1a, 2a, 4a, 4b).
CaseValues dgroup_values(long q);

}  // namespace sip
