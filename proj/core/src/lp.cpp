#include "lp.hpp"

#include <cstddef>
#include <optional>

namespace sip::detail {

namespace {

enum class Phase2 { Optimal, Infeasible, Unbounded };

// min cost . x, M x = rhs, x >= 0; M is k x n.
struct Standard {
  std::vector<std::vector<mpq_class>> M;
  std::vector<mpq_class> rhs;
  std::vector<mpq_class> cost;
};

struct Tableau {
  int n = 0;                                  // original columns
  std::vector<std::vector<mpq_class>> t;      // rows x (n + artificials)
  std::vector<mpq_class> rhs;
  std::vector<int> basis;
  std::vector<bool> allowed;                  // may enter

  void pivot(int r, int c) {
    mpq_class inv = 1 / t[r][c];
    auto& pr = t[r];
    for (auto& x : pr) x *= inv;
    rhs[r] *= inv;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (static_cast<int>(i) == r || sgn(t[i][c]) == 0) continue;
      mpq_class f = t[i][c];
      auto& ri = t[i];
      for (std::size_t j = 0; j < ri.size(); ++j)
        if (sgn(pr[j]) != 0) ri[j] -= f * pr[j];
      rhs[i] -= f * rhs[r];
    }
    basis[r] = c;
  }

  // Minimizes cost over the current basis. Returns false when unbounded.
  bool optimize(const std::vector<mpq_class>& cost) {
    const std::size_t cols = t.empty() ? 0 : t[0].size();
    while (true) {
      std::optional<int> enter;
      for (std::size_t j = 0; j < cols && !enter; ++j) {
        if (!allowed[j]) continue;
        mpq_class r = cost[j];
        for (std::size_t i = 0; i < t.size(); ++i)
          if (sgn(t[i][j]) != 0) r -= cost[basis[i]] * t[i][j];
        if (sgn(r) < 0) enter = static_cast<int>(j);
      }
      if (!enter) return true;
      int c = *enter, leave = -1;
      mpq_class best;
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (sgn(t[i][c]) <= 0) continue;
        mpq_class ratio = rhs[i] / t[i][c];
        if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = static_cast<int>(i);
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, c);
    }
  }
};

std::pair<Phase2, mpq_class> solve_standard(const Standard& s) {
  const std::size_t k = s.M.size();
  const int n = k ? static_cast<int>(s.M[0].size()) : 0;
  Tableau tab;
  tab.n = n;
  tab.t.assign(k, std::vector<mpq_class>(n + k));
  tab.rhs.resize(k);
  tab.basis.resize(k);
  tab.allowed.assign(n + k, true);
  for (std::size_t i = 0; i < k; ++i) {
    bool flip = sgn(s.rhs[i]) < 0;
    for (int j = 0; j < n; ++j) tab.t[i][j] = flip ? mpq_class(-s.M[i][j]) : s.M[i][j];
    tab.t[i][n + i] = 1;
    tab.rhs[i] = flip ? mpq_class(-s.rhs[i]) : s.rhs[i];
    tab.basis[i] = n + static_cast<int>(i);
  }
  std::vector<mpq_class> phase1(n + k);
  for (std::size_t i = 0; i < k; ++i) phase1[n + i] = 1;
  tab.optimize(phase1);
  mpq_class infeas = 0;
  for (std::size_t i = 0; i < k; ++i)
    if (tab.basis[i] >= n) infeas += tab.rhs[i];
  if (sgn(infeas) > 0) return {Phase2::Infeasible, 0};

  // Drive artificials out; drop rows that are redundant.
  for (std::size_t i = 0; i < tab.t.size();) {
    if (tab.basis[i] < n) {
      ++i;
      continue;
    }
    int c = -1;
    for (int j = 0; j < n && c < 0; ++j)
      if (sgn(tab.t[i][j]) != 0) c = j;
    if (c >= 0) {
      tab.pivot(static_cast<int>(i), c);
      ++i;
    } else {
      tab.t.erase(tab.t.begin() + static_cast<std::ptrdiff_t>(i));
      tab.rhs.erase(tab.rhs.begin() + static_cast<std::ptrdiff_t>(i));
      tab.basis.erase(tab.basis.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }
  for (std::size_t j = n; j < n + k; ++j) tab.allowed[j] = false;
  std::vector<mpq_class> cost(n + k);
  for (int j = 0; j < n; ++j) cost[j] = s.cost[j];
  if (!tab.optimize(cost)) return {Phase2::Unbounded, 0};
  mpq_class v = 0;
  for (std::size_t i = 0; i < tab.t.size(); ++i) v += cost[tab.basis[i]] * tab.rhs[i];
  return {Phase2::Optimal, v};
}

Standard dual_of(const std::vector<LinIneq>& rows, const std::vector<mpq_class>& c) {
  Standard s;
  const std::size_t k = c.size(), n = rows.size();
  s.M.assign(k, std::vector<mpq_class>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t i = 0; i < k; ++i) s.M[i][r] = rows[r].a[i];
  s.rhs = c;
  s.cost.resize(n);
  for (std::size_t r = 0; r < n; ++r) s.cost[r] = rows[r].b;
  return s;
}

}  // namespace

LpResult lp_maximize(const std::vector<LinIneq>& rows, const std::vector<mpq_class>& c) {
  auto [st, v] = solve_standard(dual_of(rows, c));
  if (st == Phase2::Optimal) return {LpStatus::Optimal, v};
  if (st == Phase2::Unbounded) return {LpStatus::Infeasible, 0};
  // Dual infeasible: the primal is unbounded unless it is itself infeasible,
  // which shows as an unbounded dual for the zero objective (Farkas).
  auto [st0, v0] = solve_standard(dual_of(rows, std::vector<mpq_class>(c.size())));
  (void)v0;
  return {st0 == Phase2::Unbounded ? LpStatus::Infeasible : LpStatus::Unbounded, 0};
}

}  // namespace sip::detail
