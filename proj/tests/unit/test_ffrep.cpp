#include <gtest/gtest.h>


#include "sip/error.hpp"
#include "sip/ffrep/ffrep.hpp"

using namespace sip;

namespace {

std::vector<Cyclotomic> ints(std::initializer_list<long> v) {
  std::vector<Cyclotomic> out;
  for (long x : v) out.emplace_back(Rational(x));
  return out;
}

int eigen_mult(const FMatrix& M, const FieldElement& z) {
  return M.rows() - (M - FMatrix::scalar(z, M.field(), M.rows())).rank();
}

}  // namespace

TEST(Matrix, BasicAlgebra) {
  FiniteField F = FiniteField::make(7, 1);
  FMatrix a = FMatrix::from_ints(F, {{1, 2}, {3, 4}});
  EXPECT_EQ(a * a.inverse(), FMatrix::identity(F, 2));
  EXPECT_EQ(a.det(), F.from_int(-2));
  EXPECT_EQ(a.transpose()(0, 1), F.from_int(3));
  EXPECT_EQ(a.pow(3), a * a * a);
  EXPECT_EQ(a.pow(-1), a.inverse());
  EXPECT_THROW(FMatrix::from_ints(F, {{1, 2}, {2, 4}}).inverse(), InvalidArgument);
  EXPECT_EQ(FMatrix::from_ints(F, {{0, -1}, {1, 0}}).order(), 4);
  EXPECT_EQ(FMatrix::from_ints(F, {{0, -1}, {1, 0}}).projective_order(), 2);
}

TEST(Matrix, EmbeddingIsAHomomorphism) {
  FiniteField F = FiniteField::make(3, 2), E = FiniteField::make(3, 4);
  FieldEmbedding emb(F, E);
  for (std::uint32_t a = 0; a < 9; ++a)
    for (std::uint32_t b = 0; b < 9; ++b) {
      FieldElement x = F.from_code(a), y = F.from_code(b);
      EXPECT_EQ(emb(x + y), emb(x) + emb(y));
      EXPECT_EQ(emb(x * y), emb(x) * emb(y));
    }
  EXPECT_THROW(FieldEmbedding(FiniteField::make(3, 2), FiniteField::make(3, 3)), InvalidArgument);
  EXPECT_THROW(FieldEmbedding(FiniteField::make(3, 1), FiniteField::make(5, 2)), InvalidArgument);
}

TEST(Actions, BuildAndVerify) {
  for (long q : {3, 5, 7, 9, 25}) {
    auto t = action_build(ActionKind::Trace0Conj, q);
    EXPECT_EQ(t.dimension(), 3);
    EXPECT_NO_THROW(t.verify());
    auto c = action_build(ActionKind::Cubics, q, false);
    EXPECT_EQ(c.dimension(), 10);
    EXPECT_NO_THROW(c.verify(2, 20));
  }
  EXPECT_NO_THROW(action_build(ActionKind::Cubics, 5, true).verify(3, 10));
  for (long q : {9, 25, 49, 81}) {
    auto h = action_build(ActionKind::Hermitian4, q);
    EXPECT_EQ(h.dimension(), 4);
    EXPECT_EQ(h.scalar_field_order() * h.scalar_field_order(), q);
    EXPECT_NO_THROW(h.verify());
  }
  EXPECT_NO_THROW(action_build(ActionKind::Sign, 11).verify());
  EXPECT_NO_THROW(action_build(ActionKind::Determinant, 11).verify());
}

TEST(Actions, Errors) {
  EXPECT_THROW(action_build(ActionKind::Hermitian4, 27), InvalidArgument);
  EXPECT_THROW(action_build(ActionKind::Trace0Conj, 8), InvalidArgument);
  EXPECT_THROW(action_build(ActionKind::Trace0Conj, 12), InvalidArgument);
  EXPECT_THROW(action_build(ActionKind::Trace0Conj, 9, true), InvalidArgument);
  auto t = action_build(ActionKind::Trace0Conj, 5);
  EXPECT_THROW(t.matrix_of(FMatrix::identity(FiniteField::make(5, 1), 3)), InvalidArgument);
  EXPECT_THROW(t.twisted_generator(), InvalidArgument);
}

TEST(Actions, CenterActsTrivially) {
  // The centre of SL(2,9) is {+-I}.
  auto t = action_build(ActionKind::Trace0Conj, 9);
  FiniteField F = t.group_field();
  EXPECT_TRUE(t.matrix_of(FMatrix::scalar(-F.one(), F, 2)).is_identity());
}

TEST(Brauer, CubicsEigenspacesAtA) {
  auto c = action_build(ActionKind::Cubics, 3, false);
  FiniteField F = c.group_field();
  FMatrix A = FMatrix::from_ints(F, {{1, 0, 0}, {0, -1, 0}, {0, 0, -1}});
  FMatrix M = c.matrix_of(A);
  EXPECT_EQ(eigen_mult(M, F.one()), 4);
  EXPECT_EQ(eigen_mult(M, -F.one()), 6);
  // x^3, xy^2, xz^2, xyz are fixed.
  for (const std::string lbl : {"x^3", "xy^2", "xz^2", "xyz"}) {
    int j = static_cast<int>(std::find(c.basis_labels().begin(), c.basis_labels().end(), lbl) - c.basis_labels().begin());
    ASSERT_LT(j, 10);
    EXPECT_TRUE(M(j, j).is_one()) << lbl;
  }
  EXPECT_EQ(brauer_value(c, A), Cyclotomic(-2));
}

TEST(Brauer, CubicsEigenspacesAtB) {
  auto c = action_build(ActionKind::Cubics, 3, false);
  FiniteField F = c.group_field();
  FMatrix B = FMatrix::from_ints(F, {{1, 0, 0}, {0, 0, 1}, {0, -1, 0}});
  FMatrix M = FieldEmbedding(F, FiniteField::make(3, 2))(c.matrix_of(B));
  FiniteField E = M.field();
  FieldElement i = E.primitive_element().pow(2);  // order 4 in F_9
  EXPECT_EQ(eigen_mult(M, i), 3);
  EXPECT_EQ(eigen_mult(M, -i), 3);
  EXPECT_EQ(eigen_mult(M, -E.one()), 2);
  EXPECT_EQ(eigen_mult(M, E.one()), 2);
  EXPECT_EQ(brauer_value(c, B), Cyclotomic(0));
  // y^3 + i z^3 is an i-eigenvector.
  FMatrix v(E, 10, 1);
  auto idx = [&](const std::string& l) {
    return static_cast<int>(std::find(c.basis_labels().begin(), c.basis_labels().end(), l) - c.basis_labels().begin());
  };
  v(idx("y^3"), 0) = E.one();
  v(idx("z^3"), 0) = i;
  EXPECT_EQ(M * v, v.scaled(i));
}

TEST(Brauer, IdentityGivesDimensionAndInverseConjugates) {
  for (long q : {5, 7, 9}) {
    auto t = action_build(ActionKind::Trace0Conj, q);
    FiniteField F = t.group_field();
    EXPECT_EQ(brauer_value(t, FMatrix::identity(F, 2)), Cyclotomic(3));
    // Semisimple elements of order prime to p: x and x^-1 give conjugate values.
    FieldElement a = F.primitive_element();
    FMatrix d = FMatrix::from_elements(F, {{a, F.zero()}, {F.zero(), a.pow(3)}});
    EXPECT_EQ(brauer_value(t, d.inverse()), brauer_value(t, d).conj());
  }
  auto h = action_build(ActionKind::Hermitian4, 9);
  EXPECT_EQ(brauer_value(h, FMatrix::identity(h.group_field(), 2)), Cyclotomic(4));
}

TEST(Brauer, Errors) {
  FiniteField F = FiniteField::make(5, 1);
  FMatrix unip = FMatrix::from_ints(F, {{1, 1}, {0, 1}});
  EXPECT_THROW(brauer_value(unip), InvalidArgument);
  LiftContext small(F);
  FMatrix order3 = FMatrix::from_ints(F, {{0, -1}, {1, -1}});
  EXPECT_THROW(brauer_value(order3, small), InvalidArgument);  // cube roots are not in F_5
  EXPECT_EQ(brauer_value(order3), Cyclotomic(-1));
}

TEST(Brauer, LiftIsAHomomorphism) {
  LiftContext ctx(FiniteField::make(3, 4));
  FiniteField E = ctx.field();
  EXPECT_EQ(ctx.lift(E.one()), Cyclotomic(1));
  for (std::uint32_t a = 1; a < 81; a += 7)
    for (std::uint32_t b = 1; b < 81; b += 11) {
      FieldElement x = E.from_code(a), y = E.from_code(b);
      EXPECT_EQ(ctx.lift(x * y), ctx.lift(x) * ctx.lift(y));
    }
  FieldElement x = E.from_code(5);
  EXPECT_EQ(ctx.lift(x.pow(7)), ctx.lift(x).pow(7));
}

TEST(Cases, PslTables) {
  auto t1 = psl_values(7, true);
  EXPECT_EQ(t1.row("chi").values, ints({1, 1, 1, -1}));
  EXPECT_EQ(t1.row("psi+").values, ints({3, -1, 1, -1}));
  EXPECT_EQ(t1.row("psi-").values, ints({3, -1, 1, 1}));
  auto t2 = psl_values(5, false);
  EXPECT_EQ(t2.row("chi").values, ints({1, 1, -1, -1}));
  EXPECT_EQ(t2.row("psi+").values, ints({3, -1, 1, -1}));
  EXPECT_EQ(t2.row("psi-").values, ints({3, -1, -1, 1}));
  for (long q : {9, 17, 23, 25, 31, 49, 81}) EXPECT_EQ(psl_values(q, true).row("psi-").values, ints({3, -1, 1, 1})) << q;
  for (long q : {3, 11, 13, 27, 29}) EXPECT_EQ(psl_values(q, false).row("psi-").values, ints({3, -1, -1, 1})) << q;
  EXPECT_THROW(psl_values(5, true), InvalidArgument);
  EXPECT_THROW(psl_values(7, false), InvalidArgument);
  EXPECT_THROW(psl_values(15, true), InvalidArgument);
}

TEST(Cases, QGroup) {
  for (long q : {3, 5, 7, 9, 25}) EXPECT_EQ(qgroup_values(q).row("chi").values, ints({1, 1, -1, 1})) << q;
}

TEST(Cases, QDGroup) {
  for (long q : {3, 5, 7, 9, 11}) {
    auto v = qd_values(q);
    EXPECT_EQ(v.row("chi'").values, ints({10, -2, 0})) << q;
  }
  EXPECT_NE(qd_values(5).notes[0].find("PSU"), std::string::npos);
  EXPECT_NE(qd_values(7).notes[0].find("PSL"), std::string::npos);
}

TEST(Cases, DGroupMatchesTableForSmallSquares) {
  for (long q : {9, 25}) {
    auto v = dgroup_values(q);
    EXPECT_EQ(v.row("chi").values, ints({1, 1, 1, -1})) << q;
    EXPECT_EQ(v.row("psi").values, ints({6, -2, 2, 0})) << q;
    EXPECT_EQ(v.row("eta").values, ints({4, 0, -2, 0})) << q;
  }
  EXPECT_THROW(dgroup_values(27), InvalidArgument);
  EXPECT_THROW(dgroup_values(7), InvalidArgument);
}

TEST(Cases, DGroupEtaAtFourA) {
  // eta(diag(b, b^-1)) = (l + l^-1)(l^r + l^-r) with l of order 8: -2 for
  // r = +-3 mod 8 and +2 for r = +-1 mod 8.
  for (long q : {9, 25, 49, 81, 121, 169}) {
    long r = q == 9 ? 3 : q == 25 ? 5 : q == 49 ? 7 : q == 81 ? 9 : q == 121 ? 11 : 13;
    long expected = (r % 8 == 3 || r % 8 == 5) ? -2 : 2;
    auto v = dgroup_values(q);
    EXPECT_EQ(v.row("eta").values, ints({4, 0, expected, 0})) << q;
    EXPECT_EQ(v.row("psi").values, ints({6, -2, 2, 0})) << q;
  }
}
