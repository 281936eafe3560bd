#pragma once

#include <gmpxx.h>

#include <vector>

namespace sip::detail {

// a . y <= b over free rational y.
struct LinIneq {
  std::vector<mpq_class> a;
  mpq_class b;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  mpq_class value;
};

// Exact max c . y subject to rows. Solved through the dual
// min b . l, A^t l = c, l >= 0, with Bland's rule, so the tableau has one row
// per variable rather than one per inequality.
LpResult lp_maximize(const std::vector<LinIneq>& rows, const std::vector<mpq_class>& c);

}  // namespace sip::detail
