#include "sip/exactnum/odd_affine.hpp"

#include <ostream>

#include "sip/error.hpp"

namespace sip {
namespace {

// Values are studied through j >= 0 with m = 2j + 1, so v(m) = A + B*j.
struct Progression {
  bool empty = false;
  BigInt start = 0;   // least non-negative member
  BigInt period = 1;  // 1 means every j
};

struct Interval {
  bool empty = false;
  BigInt lo = 0;
  std::optional<BigInt> hi;  // absent means unbounded above
};

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

BigInt emod(const BigInt& a, const BigInt& n) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
  return r;
}

// { j >= 0 : A + B*j is an integer }.
Progression integral_set(const Rational& A, const Rational& B) {
  BigInt L = lcm(A.denominator(), B.denominator());
  Progression out;
  if (L == 1) return out;
  BigInt alpha = (A * Rational(L, BigInt(1))).numerator();
  BigInt beta = emod((B * Rational(L, BigInt(1))).numerator(), L);
  // beta * j = -alpha (mod L)
  BigInt g;
  mpz_gcd(g.get_mpz_t(), beta.get_mpz_t(), L.get_mpz_t());
  if (emod(alpha, g) != 0) {
    out.empty = true;
    return out;
  }
  BigInt P = L / g;
  out.period = P;
  if (P == 1) return out;
  BigInt b = emod(beta / g, P), rhs = emod(-alpha / g, P), inv;
  mpz_invert(inv.get_mpz_t(), b.get_mpz_t(), P.get_mpz_t());
  out.start = emod(rhs * inv, P);
  return out;
}

// { j >= 0 : A + B*j >= 0 }.
Interval nonneg_set(const Rational& A, const Rational& B) {
  Interval out;
  if (B.is_zero()) {
    out.empty = A.sign() < 0;
    return out;
  }
  Rational root = -A / B;
  if (B.sign() > 0) {
    BigInt lo = root.ceil();
    out.lo = lo < 0 ? BigInt(0) : lo;
    return out;
  }
  BigInt hi = root.floor();
  if (hi < 0) out.empty = true;
  out.hi = hi;
  return out;
}

Verdict combine(const Progression& I, const Interval& N) {
  Verdict v;
  auto to_m = [](const BigInt& j) { return BigInt(2 * j + 1); };
  bool full_I = !I.empty && I.period == 1;
  bool full_N = !N.empty && N.lo == 0 && !N.hi;
  if (full_I && full_N) {
    v.kind = VerdictKind::AlwaysHolds;
    v.holds_at = 1;
    return v;
  }
  // A failing j.
  BigInt fail;
  if (I.empty || N.empty)
    fail = 0;
  else if (!full_I)
    fail = emod(I.start + 1, I.period);
  else if (N.lo > 0)
    fail = 0;
  else
    fail = *N.hi + 1;
  v.fails_at = to_m(fail);
  // A holding j, if any.
  if (!I.empty && !N.empty) {
    BigInt j = N.lo + emod(I.start - N.lo, I.period);
    if (!N.hi || j <= *N.hi) {
      v.kind = VerdictKind::DependsOnM;
      v.holds_at = to_m(j);
      return v;
    }
  }
  v.kind = VerdictKind::NeverHolds;
  return v;
}

void check_denom(const BigInt& d) {
  if (d <= 0) throw InvalidArgument("denominator must be positive");
}

}  // namespace

OddAffine operator*(const OddAffine& x, const OddAffine& y) {
  if (!x.is_constant() && !y.is_constant()) throw InvalidArgument("product of two m-dependent values would involve m^2");
  if (x.is_constant()) return y * x.constant();
  return x * y.constant();
}

std::string OddAffine::to_string() const {
  if (b_.is_zero()) return a_.to_string();
  std::string slope;
  if (b_ == Rational(1))
    slope = "m";
  else if (b_ == Rational(-1))
    slope = "-m";
  else
    slope = b_.to_string() + "*m";
  if (a_.is_zero()) return slope;
  return a_.to_string() + (slope[0] == '-' ? "" : "+") + slope;
}

std::ostream& operator<<(std::ostream& os, const OddAffine& v) { return os << v.to_string(); }

std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::AlwaysHolds:
      return "AlwaysHolds";
    case VerdictKind::NeverHolds:
      return "NeverHolds";
    case VerdictKind::DependsOnM:
      return "DependsOnM";
  }
  return "?";
}

Verdict oddaffine_nonneg_integer(const OddAffine& v, const BigInt& denom) {
  check_denom(denom);
  Rational D(denom, BigInt(1));
  Rational A = (v.constant() + v.slope()) / D;
  Rational B = Rational(2) * v.slope() / D;
  return combine(integral_set(A, B), nonneg_set(A, B));
}

Verdict oddaffine_even_integer(const OddAffine& v, const BigInt& denom) {
  check_denom(denom);
  Rational D(BigInt(2) * denom, BigInt(1));
  Rational A = (v.constant() + v.slope()) / D;
  Rational B = Rational(2) * v.slope() / D;
  return combine(integral_set(A, B), Interval{});
}

Verdict oddaffine_zero(const OddAffine& v) {
  Rational A = v.constant() + v.slope();
  Rational B = Rational(2) * v.slope();
  // A + B j = 0 splits into two sign conditions.
  Interval ge = nonneg_set(A, B), le = nonneg_set(-A, -B);
  Interval both;
  both.empty = ge.empty || le.empty;
  if (!both.empty) {
    both.lo = ge.lo > le.lo ? ge.lo : le.lo;
    if (ge.hi && le.hi)
      both.hi = *ge.hi < *le.hi ? *ge.hi : *le.hi;
    else if (ge.hi)
      both.hi = ge.hi;
    else
      both.hi = le.hi;
    if (both.hi && *both.hi < both.lo) both.empty = true;
  }
  return combine(Progression{}, both);
}

std::optional<BigInt> common_odd_m(const std::vector<OddCondition>& conds) {
  // Intersect progressions by CRT and intervals directly, all in j.
  BigInt start = 0, period = 1, lo = 0;
  std::optional<BigInt> hi;
  for (const auto& c : conds) {
    check_denom(c.denom);
    Rational D(c.even ? BigInt(2) * c.denom : c.denom, BigInt(1));
    Rational A = (c.value.constant() + c.value.slope()) / D;
    Rational B = Rational(2) * c.value.slope() / D;
    Progression p = integral_set(A, B);
    if (p.empty) return std::nullopt;
    // j = start (mod period) and j = p.start (mod p.period)
    BigInt g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), period.get_mpz_t(), p.period.get_mpz_t());
    if (emod(p.start - start, g) != 0) return std::nullopt;
    BigInt L = period / g * p.period;
    start = emod(start + period * emod(s * ((p.start - start) / g), p.period / g), L);
    period = L;
    if (c.nonneg) {
      Interval n = nonneg_set(A, B);
      if (n.empty) return std::nullopt;
      if (n.lo > lo) lo = n.lo;
      if (n.hi && (!hi || *n.hi < *hi)) hi = n.hi;
    }
  }
  BigInt j = lo + emod(start - lo, period);
  if (hi && j > *hi) return std::nullopt;
  return BigInt(2 * j + 1);
}

}  // namespace sip
