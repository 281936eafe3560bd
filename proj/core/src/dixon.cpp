// Dixon-Schneider over F_p: common eigenvectors of the class multiplication
// matrices give the central characters mod p, which are then lifted to exact
// cyclotomic values through eigenvalue multiplicities and verified exactly.

#include <algorithm>

#include "sip/chartab/table.hpp"
#include "sip/error.hpp"
#include "sip/numtheory.hpp"

namespace sip {

namespace {

using Vec = std::vector<long>;
using Mat = std::vector<Vec>;

struct ModP {
  long p;
  long add(long a, long b) const { return (a + b) % p; }
  long sub(long a, long b) const { return nt::mod(a - b, p); }
  long mul(long a, long b) const { return (a * b) % p; }
  long inv(long a) const { return nt::inv_mod(a, p); }
};

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(Mat& m, const ModP& F) {
  std::vector<int> pivots;
  int rows = static_cast<int>(m.size());
  int cols = rows ? static_cast<int>(m[0].size()) : 0;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c]) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    long s = F.inv(m[r][c]);
    for (auto& x : m[r]) x = F.mul(x, s);
    for (int i = 0; i < rows; ++i) {
      if (i == r || !m[i][c]) continue;
      long f = m[i][c];
      for (int k = 0; k < cols; ++k) m[i][k] = F.sub(m[i][k], F.mul(f, m[r][k]));
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

// Basis of the null space {x : M x = 0}.
Mat null_space(Mat m, int cols, const ModP& F) {
  auto piv = rref(m, F);
  std::vector<char> is_piv(cols, 0);
  for (int c : piv) is_piv[c] = 1;
  Mat out;
  for (int free = 0; free < cols; ++free) {
    if (is_piv[free]) continue;
    Vec v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = F.sub(0, m[i][free]);
    out.push_back(std::move(v));
  }
  return out;
}

// Characteristic polynomial (coefficients low to high) via Hessenberg form.
Vec charpoly(Mat h, const ModP& F) {
  int n = static_cast<int>(h.size());
  for (int k = 0; k + 2 <= n; ++k) {
    int piv = -1;
    for (int i = k + 1; i < n; ++i)
      if (h[i][k]) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != k + 1) {
      std::swap(h[piv], h[k + 1]);
      for (int i = 0; i < n; ++i) std::swap(h[i][piv], h[i][k + 1]);
    }
    long inv = F.inv(h[k + 1][k]);
    for (int i = k + 2; i < n; ++i) {
      long f = F.mul(h[i][k], inv);
      if (!f) continue;
      for (int j = 0; j < n; ++j) h[i][j] = F.sub(h[i][j], F.mul(f, h[k + 1][j]));
      for (int j = 0; j < n; ++j) h[j][k + 1] = F.add(h[j][k + 1], F.mul(f, h[j][i]));
    }
  }
  // p_k(x) = (x - h_kk) p_{k-1} - sum_{i<k} h_ik (prod_{j=i+1..k} h_{j,j-1}) p_{i-1}
  std::vector<Vec> P(n + 1);
  P[0] = {1};
  for (int k = 1; k <= n; ++k) {
    Vec cur(k + 1, 0);
    for (int d = 0; d < k; ++d) {
      cur[d + 1] = F.add(cur[d + 1], P[k - 1][d]);
      cur[d] = F.sub(cur[d], F.mul(h[k - 1][k - 1], P[k - 1][d]));
    }
    long prod = 1;
    for (int i = k - 1; i >= 1; --i) {
      prod = F.mul(prod, h[i][i - 1]);
      long f = F.mul(h[i - 1][k - 1], prod);
      if (!f) continue;
      for (std::size_t d = 0; d < P[i - 1].size(); ++d) cur[d] = F.sub(cur[d], F.mul(f, P[i - 1][d]));
    }
    P[k] = std::move(cur);
  }
  return P[n];
}

long eval_poly(const Vec& c, long x, const ModP& F) {
  long v = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = F.add(F.mul(v, x), *it);
  return v;
}

long choose_prime(long exponent, long order) {
  for (long p = exponent + 1;; p += exponent)
    if (p > 2 * order && nt::is_prime(p)) return p;
}

long primitive_root(long p) {
  auto fs = nt::prime_factors(p - 1);
  for (long g = 2;; ++g) {
    bool ok = true;
    for (long q : fs)
      if (nt::pow_mod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
}

}  // namespace

CharacterTable dixon_table(const FiniteGroup& G, bool allow_large) {
  long n = G.order();
  if (n > 10000 && !allow_large) throw ResourceLimit("dixon_table is limited to groups of order 10^4; pass allow_large to override");
  auto P = conjugacy_classes(G);
  int r = static_cast<int>(P.classes.size());
  long e = G.exponent();
  ModP F{choose_prime(e, n)};

  // a[j][k][l] = #{x in C_j : x^-1 z_l in C_k}, i.e. structure constants of
  // the class sums; A_j with (A_j)_{k,l} = a[j][k][l] has the central
  // characters as right eigenvectors.
  std::vector<Mat> A(r, Mat(r, Vec(r, 0)));
  for (int l = 0; l < r; ++l) {
    int z = P.classes[l].rep;
    for (int j = 0; j < r; ++j)
      for (int x : P.classes[j].members) ++A[j][P.class_of[G.mul(G.inv(x), z)]][l];
  }

  Mat identity(r, Vec(r, 0));
  for (int i = 0; i < r; ++i) identity[i][i] = 1;
  std::vector<Mat> spaces{identity};  // each in RREF, rows spanning the subspace
  for (int j = 1; j < r && static_cast<int>(spaces.size()) < r; ++j) {
    std::vector<Mat> next;
    for (auto& W : spaces) {
      int d = static_cast<int>(W.size());
      if (d == 1) {
        next.push_back(W);
        continue;
      }
      Mat basis = W;
      auto piv = rref(basis, F);
      // B[k][i] = coordinate k of A_j w_i.
      Mat B(d, Vec(d, 0));
      for (int i = 0; i < d; ++i) {
        Vec img(r, 0);
        for (int k = 0; k < r; ++k) {
          long s = 0;
          for (int l = 0; l < r; ++l)
            if (A[j][k][l] && basis[i][l]) s = F.add(s, F.mul(A[j][k][l] % F.p, basis[i][l]));
          img[k] = s;
        }
        for (int k = 0; k < d; ++k) B[k][i] = img[piv[k]];
      }
      Vec cp = charpoly(B, F);
      std::vector<long> roots;
      for (long lam = 0; lam < F.p && static_cast<int>(roots.size()) < d; ++lam)
        if (eval_poly(cp, lam, F) == 0) roots.push_back(lam);
      if (roots.size() == 1) {
        next.push_back(basis);
        continue;
      }
      for (long lam : roots) {
        Mat M = B;
        for (int k = 0; k < d; ++k) M[k][k] = F.sub(M[k][k], lam);
        Mat ker = null_space(M, d, F);
        Mat sub;
        for (const auto& c : ker) {
          Vec v(r, 0);
          for (int i = 0; i < d; ++i)
            if (c[i])
              for (int l = 0; l < r; ++l) v[l] = F.add(v[l], F.mul(c[i], basis[i][l]));
          sub.push_back(std::move(v));
        }
        rref(sub, F);
        next.push_back(std::move(sub));
      }
    }
    spaces = std::move(next);
  }
  if (static_cast<int>(spaces.size()) != r) throw InvalidState("class sums did not split the centre of " + G.name());

  std::vector<int> inv_class(r);
  for (int c = 0; c < r; ++c) inv_class[c] = P.class_of[G.inv(P.classes[c].rep)];
  long zeta = nt::pow_mod(primitive_root(F.p), (F.p - 1) / e, F.p);

  CharacterTable t;
  t.name = G.name();
  t.order = CharValue(n);
  for (int c = 0; c < r; ++c) {
    TableClass tc;
    tc.name = P.classes[c].name;
    tc.rep_order = P.classes[c].rep_order;
    tc.size = CharValue(P.classes[c].size);
    for (const auto& [p, map] : P.power_maps) tc.powers.emplace_back(p, map[c]);
    t.classes.push_back(std::move(tc));
  }

  for (const auto& W : spaces) {
    Vec w = W[0];
    if (!w[0]) throw InvalidState("central character vanishes at the identity");
    long s = F.inv(w[0]);
    for (auto& x : w) x = F.mul(x, s);
    long norm = 0;
    for (int l = 0; l < r; ++l) norm = F.add(norm, F.mul(F.mul(w[l], w[inv_class[l]]), F.inv(P.classes[l].size % F.p)));
    long d2 = F.mul(n % F.p, F.inv(norm));
    long deg = 0;
    for (long d = 1; d * d <= n; ++d)
      if ((d * d) % F.p == d2) deg = d;
    if (!deg) throw InvalidState("no character degree matches the central character");
    Vec chi(r);
    for (int l = 0; l < r; ++l) chi[l] = F.mul(F.mul(w[l], deg), F.inv(P.classes[l].size % F.p));

    CharacterRow row;
    row.kind = RowKind::Ordinary;
    for (int l = 0; l < r; ++l) {
      int g = P.classes[l].rep;
      long o = P.classes[l].rep_order;
      std::vector<long> pw_cls(o);
      for (long k = 0, y = 0; k < o; ++k, y = G.mul(static_cast<int>(y), g)) pw_cls[k] = P.class_of[y];
      long w_o = nt::pow_mod(zeta, e / o, F.p);
      long inv_o = F.inv(o % F.p);
      std::vector<mpq_class> coeffs(o);
      for (long sidx = 0; sidx < o; ++sidx) {
        long acc = 0;
        long step = nt::pow_mod(w_o, nt::mod(-sidx, o), F.p), cur = 1;
        for (long k = 0; k < o; ++k) {
          acc = F.add(acc, F.mul(chi[pw_cls[k]], cur));
          cur = F.mul(cur, step);
        }
        long mu = F.mul(acc, inv_o);
        if (mu > deg) throw InvalidState("eigenvalue multiplicity out of range while lifting");
        coeffs[sidx] = mu;
      }
      row.values.emplace_back(CharValue(Cyclotomic::from_dense(o, std::move(coeffs))));
    }
    t.rows.push_back(std::move(row));
  }

  std::sort(t.rows.begin(), t.rows.end(), [&](const CharacterRow& a, const CharacterRow& b) {
    for (int c = 0; c < r; ++c) {
      auto cmp = *a.values[c] <=> *b.values[c];
      if (cmp != 0) return cmp < 0;
    }
    return false;
  });
  // Degree first: the identity column comes first, so the lexicographic
  // order above already sorts by degree.
  for (std::size_t i = 0; i < t.rows.size(); ++i) t.rows[i].name = "X." + std::to_string(i + 1);

  auto rep = check_orthogonality(t);
  if (!rep.ok()) throw InvalidState("computed table of " + G.name() + " fails orthogonality: " + rep.failures.front());
  for (auto& row : t.rows) row.real_afforded = fs_indicator(t, row) == 1;
  t.validate();
  return t;
}

}  // namespace sip
