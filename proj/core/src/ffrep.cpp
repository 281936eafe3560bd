#include <algorithm>
#include <array>
#include <numeric>
#include <random>

#include "sip/error.hpp"
#include "sip/ffrep/ffrep.hpp"
#include "sip/numtheory.hpp"

namespace sip {

std::string to_string(ActionKind k) {
  switch (k) {
    case ActionKind::Trace0Conj: return "trace0_conj";
    case ActionKind::Cubics: return "cubics";
    case ActionKind::Hermitian4: return "hermitian4";
    case ActionKind::Determinant: return "determinant";
    case ActionKind::Sign: return "sign";
  }
  return "?";
}

namespace {

std::pair<long, int> odd_prime_power(long q) {
  auto [p, k] = nt::prime_power(q);
  if (p == 0 || p == 2) throw InvalidArgument("q must be an odd prime power, got " + std::to_string(q));
  return {p, static_cast<int>(k)};
}

using Exps = std::array<int, 3>;

std::vector<Exps> cubic_monomials() {
  std::vector<Exps> out;
  for (int a = 3; a >= 0; --a)
    for (int b = 3 - a; b >= 0; --b) out.push_back({a, b, 3 - a - b});
  return out;
}

std::string monomial_label(const Exps& e) {
  std::string s;
  const char* vars = "xyz";
  for (int v = 0; v < 3; ++v) {
    if (!e[v]) continue;
    s += vars[v];
    if (e[v] > 1) s += "^" + std::to_string(e[v]);
  }
  return s;
}

FMatrix random_invertible(const FiniteField& F, int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(0, F.q() - 1);
  for (;;) {
    FMatrix m(F, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = F.from_code(static_cast<std::uint32_t>(dist(rng)));
    if (!m.det().is_zero()) return m;
  }
}

}  // namespace

MatrixAction action_build(ActionKind kind, long q, bool unitary) {
  auto [p, k] = odd_prime_power(q);
  MatrixAction a;
  a.kind_ = kind;
  a.q_ = q;
  a.unitary_ = unitary;
  if (unitary && kind != ActionKind::Cubics && kind != ActionKind::Determinant)
    throw InvalidArgument(to_string(kind) + " has no unitary variant");
  a.group_field_ = FiniteField::make(p, unitary ? 2 * k : k);
  a.scalar_q_ = a.group_field_.q();
  switch (kind) {
    case ActionKind::Trace0Conj:
      a.labels_ = {"E11-E22", "E12", "E21"};
      break;
    case ActionKind::Cubics:
      a.group_degree_ = 3;
      for (const auto& e : cubic_monomials()) a.labels_.push_back(monomial_label(e));
      break;
    case ActionKind::Hermitian4: {
      if (k % 2 != 0) throw InvalidArgument("hermitian4 needs q to be a square, got " + std::to_string(q));
      long r = 1;
      for (int i = 0; i < k / 2; ++i) r *= p;
      a.r_ = r;
      a.scalar_q_ = r;
      a.w_ = a.group_field_.primitive_element();
      a.labels_ = {"E11", "E22", "[0,1;1,0]", "[0,w;s(w),0]"};
      break;
    }
    case ActionKind::Determinant:
    case ActionKind::Sign:
      a.labels_ = {kind == ActionKind::Determinant ? "det" : "sign"};
      break;
  }
  return a;
}

namespace {

struct HermitianBasis {
  const FiniteField& F;
  long r;
  FieldElement w;

  FieldElement s(const FieldElement& x) const { return x.frobenius(r); }

  FMatrix element(int j) const {
    FMatrix h(F, 2, 2);
    switch (j) {
      case 0: h(0, 0) = F.one(); break;
      case 1: h(1, 1) = F.one(); break;
      case 2: h(0, 1) = h(1, 0) = F.one(); break;
      default:
        h(0, 1) = w;
        h(1, 0) = s(w);
    }
    return h;
  }

  std::array<FieldElement, 4> coords(const FMatrix& h) const {
    FieldElement c = h(0, 1);
    FieldElement c2 = (c - s(c)) / (w - s(w));
    FieldElement c1 = c - c2 * w;
    return {h(0, 0), h(1, 1), c1, c2};
  }

  // Matrix of H -> f(H) in the basis, column j = coords of f(H_j).
  template <class Fn>
  FMatrix matrix(Fn&& f) const {
    FMatrix m(F, 4, 4);
    for (int j = 0; j < 4; ++j) {
      FMatrix img = f(element(j));
      if (!(img(1, 0) == s(img(0, 1))) || !(s(img(0, 0)) == img(0, 0)) || !(s(img(1, 1)) == img(1, 1)))
        throw InvalidState("image of a Hermitian matrix is not Hermitian");
      auto c = coords(img);
      for (int i = 0; i < 4; ++i) m(i, j) = c[i];
    }
    return m;
  }
};

}  // namespace

FMatrix MatrixAction::matrix_of(const FMatrix& g) const {
  if (g.rows() != group_degree_ || g.cols() != group_degree_ || !(g.field() == group_field_))
    throw InvalidArgument(to_string(kind_) + " acts on " + std::to_string(group_degree_) + "x" + std::to_string(group_degree_) +
                          " matrices over " + group_field_.name());
  const FiniteField& F = group_field_;
  switch (kind_) {
    case ActionKind::Trace0Conj: {
      FMatrix gi = g.inverse();
      FMatrix out(F, 3, 3);
      std::array<FMatrix, 3> basis = {FMatrix::from_ints(F, {{1, 0}, {0, -1}}), FMatrix::from_ints(F, {{0, 1}, {0, 0}}),
                                      FMatrix::from_ints(F, {{0, 0}, {1, 0}})};
      for (int j = 0; j < 3; ++j) {
        FMatrix y = g * basis[j] * gi;
        out(0, j) = y(0, 0);
        out(1, j) = y(0, 1);
        out(2, j) = y(1, 0);
      }
      return out;
    }
    case ActionKind::Cubics: {
      auto monos = cubic_monomials();
      auto index = [&](const Exps& e) {
        for (std::size_t i = 0; i < monos.size(); ++i)
          if (monos[i] == e) return static_cast<int>(i);
        return -1;
      };
      FMatrix out(F, 10, 10);
      for (int j = 0; j < 10; ++j) {
        // Expand prod_v L_v^{e_v}, L_v = sum_u g(u, v) x_u, as a map exps -> coefficient.
        std::vector<std::pair<Exps, FieldElement>> poly = {{{0, 0, 0}, F.one()}};
        for (int v = 0; v < 3; ++v)
          for (int t = 0; t < monos[j][v]; ++t) {
            std::vector<std::pair<Exps, FieldElement>> next;
            for (const auto& [e, c] : poly)
              for (int u = 0; u < 3; ++u) {
                if (g(u, v).is_zero()) continue;
                Exps e2 = e;
                ++e2[u];
                FieldElement c2 = c * g(u, v);
                auto it = std::find_if(next.begin(), next.end(), [&](const auto& pr) { return pr.first == e2; });
                if (it == next.end()) next.emplace_back(e2, c2);
                else it->second += c2;
              }
            poly = std::move(next);
          }
        for (const auto& [e, c] : poly) out(index(e), j) += c;
      }
      return out;
    }
    case ActionKind::Hermitian4: {
      HermitianBasis hb{F, r_, w_};
      FMatrix st = g.frobenius(r_).transpose();
      return hb.matrix([&](const FMatrix& h) { return st * h * g; });
    }
    case ActionKind::Determinant: {
      FMatrix out(F, 1, 1);
      out(0, 0) = g.det();
      return out;
    }
    case ActionKind::Sign: {
      FMatrix out(F, 1, 1);
      out(0, 0) = g.det().pow((F.q() - 1) / 2);
      return out;
    }
  }
  throw InvalidState("unknown action kind");
}

FMatrix MatrixAction::twisted_g() const {
  if (kind_ != ActionKind::Hermitian4) throw InvalidArgument("only hermitian4 has a twisted generator");
  const FiniteField& F = group_field_;
  FieldElement alpha = F.max_2power_element();
  FMatrix g(F, 2, 2);
  if (r_ % 4 == 3) {
    g(0, 0) = F.one();
    g(1, 1) = alpha;
  } else {
    g(0, 1) = alpha;
    g(1, 0) = -F.one();
  }
  return g;
}

FMatrix MatrixAction::twisted_generator() const {
  FMatrix g = twisted_g();
  const FiniteField& F = group_field_;
  HermitianBasis hb{F, r_, w_};
  FMatrix st = g.frobenius(r_).transpose();
  FMatrix T = hb.matrix([&](const FMatrix& h) { return st * h.frobenius(r_) * g; });
  if (r_ % 4 == 3) return T;
  FieldElement alpha = F.max_2power_element();
  if (!(T.pow(4) == FMatrix::scalar(alpha.pow(4), F, 4)))
    throw InvalidState("fourth power of the twisted generator is not alpha^4");
  return T.scaled(alpha.inverse());
}

void MatrixAction::verify(std::uint64_t seed, int samples) const {
  const FiniteField& F = group_field_;
  std::mt19937_64 rng(seed);
  auto fail = [&](const std::string& what) { throw InvalidState(to_string(kind_) + "(" + std::to_string(q_) + "): " + what); };
  int n = group_degree_;
  if (!matrix_of(FMatrix::identity(F, n)).is_identity()) fail("identity does not act trivially");
  for (int s = 0; s < samples; ++s) {
    FMatrix g = random_invertible(F, n, rng), h = random_invertible(F, n, rng);
    FMatrix lhs = matrix_of(g * h);
    FMatrix rhs = right_action() ? matrix_of(h) * matrix_of(g) : matrix_of(g) * matrix_of(h);
    if (!(lhs == rhs)) fail("composition fails on a sampled pair");
  }
  // Scalars that the construction says act trivially.
  std::vector<FieldElement> kernel;
  FieldElement prim = F.primitive_element();
  switch (kind_) {
    case ActionKind::Trace0Conj: kernel = {prim, prim.pow(5)}; break;
    case ActionKind::Cubics:
      if ((F.q() - 1) % 3 == 0) kernel.push_back(prim.pow((F.q() - 1) / 3));
      kernel.push_back(F.one());
      break;
    case ActionKind::Hermitian4: kernel = {prim.pow(r_ - 1), prim.pow(3 * (r_ - 1))}; break;
    case ActionKind::Determinant: kernel = {F.one()}; break;
    case ActionKind::Sign: kernel = {prim}; break;
  }
  for (const auto& x : kernel)
    if (!matrix_of(FMatrix::scalar(x, F, n)).is_identity()) fail("scalar " + x.to_string() + " does not act trivially");
  if (kind_ == ActionKind::Hermitian4) {
    FMatrix T = twisted_generator();
    if (!(T.pow(4).is_identity()) || T.pow(2).is_identity()) fail("twisted generator does not have order 4");
    // Conjugating by it realizes x -> g^-1 s(x) g on PSL(2,q).
    FMatrix g = twisted_g(), gi = g.inverse(), Ti = T.inverse();
    for (int s = 0; s < samples; ++s) {
      FMatrix x = random_invertible(F, 2, rng);
      if (!(T * matrix_of(x) * Ti == matrix_of(gi * x.frobenius(r_) * g))) fail("twisted generator is not compatible");
    }
  }
}

LiftContext::LiftContext(FiniteField field) : field_(std::move(field)) {}

LiftContext LiftContext::splitting(const FiniteField& F, long n) {
  if (n % F.p() == 0) throw InvalidArgument("order " + std::to_string(n) + " is divisible by the characteristic");
  long q = F.q();
  long qk = q;
  for (int t = 1;; ++t) {
    if ((qk - 1) % n == 0) return LiftContext(FiniteField::make(F.p(), F.k() * t));
    if (qk > 1000000 / q) throw InvalidArgument("no extension of " + F.name() + " up to size 10^6 contains the " + std::to_string(n) + "-th roots of unity");
    qk *= q;
  }
}

Cyclotomic LiftContext::lift(const FieldElement& x) const {
  if (x.field() != field_.impl()) throw InvalidArgument("lift: element is not in " + field_.name());
  long N = field_.q() - 1;
  long L = x.log();
  long g = std::gcd(L, N);
  return Cyclotomic::root_of_unity(N / g, L / g);
}

Cyclotomic brauer_value(const FMatrix& M, const LiftContext& ctx) {
  if (M.rows() != M.cols()) throw InvalidArgument("brauer_value needs a square matrix");
  const FiniteField& E = ctx.field();
  long o = M.order();
  if (o % E.p() == 0) throw InvalidArgument("element order " + std::to_string(o) + " is divisible by the characteristic " + std::to_string(E.p()));
  if ((E.q() - 1) % o != 0) throw InvalidArgument(E.name() + " does not contain the eigenvalues of an element of order " + std::to_string(o));
  FMatrix ME = M.field() == E ? M : FieldEmbedding(M.field(), E)(M);
  int d = M.rows();
  FieldElement step = ctx.primitive().pow((E.q() - 1) / o), zeta = E.one();
  Cyclotomic value(0);
  int total = 0;
  for (long j = 0; j < o; ++j, zeta *= step) {
    int mult = d - (ME - FMatrix::scalar(zeta, E, d)).rank();
    if (!mult) continue;
    total += mult;
    value += Cyclotomic(Rational(mult)) * ctx.lift(zeta);
  }
  if (total != d) throw InvalidArgument("matrix is not diagonalizable over " + E.name());
  return value;
}

Cyclotomic brauer_value(const FMatrix& M) { return brauer_value(M, LiftContext::splitting(M.field(), M.order())); }

Cyclotomic brauer_value(const MatrixAction& action, const FMatrix& g) { return brauer_value(action.matrix_of(g)); }

}  // namespace sip
