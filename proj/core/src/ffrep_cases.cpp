#include "sip/error.hpp"
#include "sip/ffrep/ffrep.hpp"
#include "sip/numtheory.hpp"

namespace sip {

const ValueRow& CaseValues::row(const std::string& name) const {
  for (const auto& r : rows)
    if (r.name == name) return r;
  throw InvalidArgument("no row named " + name);
}

namespace {

std::pair<long, int> split_q(long q) {
  auto [p, k] = nt::prime_power(q);
  if (p == 0 || p == 2) throw InvalidArgument("q must be an odd prime power, got " + std::to_string(q));
  return {p, static_cast<int>(k)};
}

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidState("paper element check failed: " + what);
}

bool is_square(const FieldElement& x, long q) { return x.pow((q - 1) / 2).is_one(); }

}  // namespace

CaseValues psl_values(long q, bool fourA_in_psl) {
  auto [p, k] = split_q(q);
  bool pm1 = q % 8 == 1 || q % 8 == 7;
  if (pm1 != fourA_in_psl)
    throw InvalidArgument(fourA_in_psl ? "order-4 elements lie in PSL(2,q) only for q = +-1 mod 8"
                                       : "order-4 elements lie outside PSL(2,q) only for q = +-3 mod 8");
  FiniteField F = FiniteField::make(p, k);
  FieldElement nu = F.primitive_element();
  CaseValues out;
  out.classes = {"1a", "2a", "4a", "2b"};
  std::string pgl = "PGL(2," + std::to_string(q) + ")";
  out.elements = {
      {"1a", pgl, FMatrix::identity(F, 2)},
      {"2a", "PSL(2," + std::to_string(q) + ")", FMatrix::from_ints(F, {{0, 1}, {-1, 0}})},
      {"4a", pgl, FMatrix::from_ints(F, {{1, -1}, {1, 1}})},
      {"2b", pgl + " outside PSL", FMatrix::from_elements(F, {{F.zero(), -nu}, {F.one(), F.zero()}})},
  };
  const auto& e = out.elements;
  require(e[1].matrix.projective_order() == 2 && is_square(e[1].matrix.det(), q), "2a is an involution in PSL");
  require(e[2].matrix.projective_order() == 4 && is_square(e[2].matrix.det(), q) == fourA_in_psl, "4a has order 4 on the stated side");
  require(e[3].matrix.projective_order() == 2 && !is_square(e[3].matrix.det(), q), "2b is an involution outside PSL");

  MatrixAction sign = action_build(ActionKind::Sign, q), ad = action_build(ActionKind::Trace0Conj, q);
  ValueRow chi{"chi", {}}, plus{"psi+", {}}, minus{"psi-", {}};
  for (const auto& el : out.elements) {
    Cyclotomic s = brauer_value(sign, el.matrix), v = brauer_value(ad, el.matrix);
    chi.values.push_back(s);
    plus.values.push_back(v);
    minus.values.push_back(s * v);
  }
  out.rows = {chi, plus, minus};
  out.notes.push_back("psi+ is the conjugation action on trace-zero matrices; psi- is its product with chi");
  return out;
}

CaseValues qgroup_values(long q) {
  auto [p, k] = split_q(q);
  FiniteField F = FiniteField::make(p, k);
  CaseValues out;
  out.classes = {"1a", "2a", "2b", "4a"};
  out.elements = {
      {"1a", "N", FMatrix::identity(F, 2)},
      {"2a", "N (central)", FMatrix::from_ints(F, {{-1, 0}, {0, -1}})},
      {"2b", "N", FMatrix::from_ints(F, {{1, 0}, {0, -1}})},
      {"4a", "N", FMatrix::from_ints(F, {{0, -1}, {1, 0}})},
  };
  const auto& e = out.elements;
  require(e[1].matrix.order() == 2 && e[1].matrix.is_scalar(), "2a is the central involution");
  require(e[2].matrix.order() == 2 && !e[2].matrix.is_scalar(), "2b is a non-central involution");
  require(e[3].matrix.order() == 4 && e[3].matrix.pow(2) == e[1].matrix, "4a squares to 2a");
  for (const auto& el : e) {
    FieldElement d = el.matrix.det();
    require(d.is_one() || d == -F.one(), "determinant is +-1");
  }
  MatrixAction det = action_build(ActionKind::Determinant, q);
  ValueRow chi{"chi", {}};
  for (const auto& el : e) chi.values.push_back(brauer_value(det, el.matrix));
  out.rows = {chi};
  return out;
}

CaseValues qd_values(long q) {
  split_q(q);
  bool unitary = q % 4 == 1;
  MatrixAction cubics = action_build(ActionKind::Cubics, q, unitary);
  const FiniteField& F = cubics.group_field();
  std::string grp = (unitary ? "SU(3," : "SL(3,") + std::to_string(q) + ")";
  CaseValues out;
  out.classes = {"1a", "2a", "4a"};
  out.elements = {
      {"1a", grp, FMatrix::identity(F, 3)},
      {"2a", grp, FMatrix::from_ints(F, {{1, 0, 0}, {0, -1, 0}, {0, 0, -1}})},
      {"4a", grp, FMatrix::from_ints(F, {{1, 0, 0}, {0, 0, 1}, {0, -1, 0}})},
  };
  for (const auto& el : out.elements) {
    require(el.matrix.det().is_one(), el.class_name + " has determinant 1");
    if (unitary) require((el.matrix.frobenius(q).transpose() * el.matrix).is_identity(), el.class_name + " preserves the unitary form");
  }
  require(out.elements[1].matrix.order() == 2, "A has order 2");
  require(out.elements[2].matrix.order() == 4 && out.elements[2].matrix.pow(2) == out.elements[1].matrix, "B squares to A");
  ValueRow chi{"chi'", {}};
  for (const auto& el : out.elements) chi.values.push_back(brauer_value(cubics, el.matrix));
  out.rows = {chi};
  out.notes.push_back(std::string("N = ") + (unitary ? "PSU(3," : "PSL(3,") + std::to_string(q) + ")");
  return out;
}

CaseValues dgroup_values(long q) {
  auto [p, k] = split_q(q);
  if (k % 2 != 0) throw InvalidArgument("PGL*(2,q) needs q to be a square, got " + std::to_string(q));
  long r = 1;
  for (int i = 0; i < k / 2; ++i) r *= p;
  MatrixAction herm = action_build(ActionKind::Hermitian4, q);
  MatrixAction ad = action_build(ActionKind::Trace0Conj, q);
  MatrixAction sign = action_build(ActionKind::Sign, q);
  const FiniteField& F = herm.group_field();
  FieldElement alpha = F.max_2power_element();
  long ord = alpha.order();
  FieldElement i = alpha.pow(ord / 4), beta = alpha.pow(ord / 8);
  FMatrix g = herm.twisted_g();
  FMatrix T = herm.twisted_generator();

  CaseValues out;
  out.classes = {"1a", "2a", "4a", "4b"};
  std::string psl = "PSL(2," + std::to_string(q) + ")";
  out.elements = {
      {"1a", psl, FMatrix::identity(F, 2)},
      {"2a", psl, FMatrix::from_elements(F, {{i, F.zero()}, {F.zero(), -i}})},
      {"4a", psl, FMatrix::from_elements(F, {{beta, F.zero()}, {F.zero(), beta.inverse()}})},
      {"4b", "PGL*(2," + std::to_string(q) + ") outside PSL: g composed with the field involution", g},
  };
  const auto& e = out.elements;
  require(e[1].matrix.det().is_one() && e[1].matrix.projective_order() == 2, "2a is an involution in PSL");
  require(e[2].matrix.det().is_one() && e[2].matrix.projective_order() == 4, "4a has order 4 in PSL");
  require(T.order() == 4, "the twisted generator has order 4");
  // Its square is the image of s(g) g, an involution of PSL(2,q).
  FMatrix sq = g.frobenius(r) * g;
  require(sq.projective_order() == 2, "(g s)^2 is an involution");
  require((T.pow(2) * herm.matrix_of(sq).inverse()).is_scalar(), "(g s)^2 acts as s(g) g");

  ValueRow chi{"chi", {}}, psi{"psi", {}}, eta{"eta", {}};
  FMatrix gi = g.inverse();
  for (int c = 0; c < 3; ++c) {
    const FMatrix& x = e[c].matrix;
    chi.values.push_back(brauer_value(sign, x));
    // Induced from PSL to PGL*: x and its image under the outer automorphism.
    psi.values.push_back(brauer_value(ad, x) + brauer_value(ad, gi * x.frobenius(r) * g));
    eta.values.push_back(brauer_value(herm.matrix_of(x)));
  }
  chi.values.emplace_back(-1);
  psi.values.emplace_back(0);
  eta.values.push_back(brauer_value(T));
  out.rows = {chi, psi, eta};
  out.notes.push_back("4a is diag(b, b^-1) with b of order 8; 4b is the class of the twisted generator");
  out.notes.push_back(std::string("r = ") + std::to_string(r) + (r % 4 == 3 ? " = -1 mod 4: g = diag(1, alpha)"
                                                                            : " = 1 mod 4: g = [[0, alpha], [-1, 0]], rescaled by alpha^-1"));
  return out;
}

}  // namespace sip
