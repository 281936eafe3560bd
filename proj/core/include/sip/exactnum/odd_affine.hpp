#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sip/exactnum/rational.hpp"

namespace sip {

/// a + b*m where m ranges over the odd positive integers.
class OddAffine {
 public:
  OddAffine() = default;
  OddAffine(const Rational& constant) : a_(constant) {}  // NOLINT
  template <std::integral T>
  OddAffine(T c) : a_(c) {}  // NOLINT
  OddAffine(const Rational& constant, const Rational& slope) : a_(constant), b_(slope) {}

  static OddAffine m() { return OddAffine(0, 1); }

  const Rational& constant() const { return a_; }
  const Rational& slope() const { return b_; }
  bool is_constant() const { return b_.is_zero(); }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  Rational eval(const BigInt& m) const { return a_ + b_ * Rational(m, BigInt(1)); }
  Rational eval(long m) const { return a_ + b_ * Rational(m); }

  OddAffine operator-() const { return {-a_, -b_}; }
  OddAffine& operator+=(const OddAffine& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  OddAffine& operator-=(const OddAffine& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  OddAffine& operator*=(const Rational& r) {
    a_ *= r;
    b_ *= r;
    return *this;
  }
  OddAffine& operator/=(const Rational& r) {
    a_ /= r;
    b_ /= r;
    return *this;
  }
  friend OddAffine operator+(OddAffine x, const OddAffine& y) { return x += y; }
  friend OddAffine operator-(OddAffine x, const OddAffine& y) { return x -= y; }
  friend OddAffine operator*(OddAffine x, const Rational& r) { return x *= r; }
  friend OddAffine operator*(const Rational& r, OddAffine x) { return x *= r; }
  friend OddAffine operator/(OddAffine x, const Rational& r) { return x /= r; }
  /// Product where at least one side is constant; m^2 terms are rejected.
  friend OddAffine operator*(const OddAffine& x, const OddAffine& y);

  friend bool operator==(const OddAffine&, const OddAffine&) = default;

  /// "3*m", "-m", "1/2+5*m", "7".
  std::string to_string() const;

 private:
  Rational a_;
  Rational b_;
};

std::ostream& operator<<(std::ostream& os, const OddAffine& v);

enum class VerdictKind { AlwaysHolds, NeverHolds, DependsOnM };

std::string to_string(VerdictKind k);

/// Outcome of a universally quantified check over odd m >= 1.
struct Verdict {
  VerdictKind kind = VerdictKind::AlwaysHolds;
  // Some odd m for which the property holds / fails, when one exists.
  std::optional<BigInt> holds_at;
  std::optional<BigInt> fails_at;

  bool always() const { return kind == VerdictKind::AlwaysHolds; }
  bool never() const { return kind == VerdictKind::NeverHolds; }
};

/// Decides whether v(m)/denom is a non-negative integer for all, no or some
/// odd m >= 1. denom must be positive.
Verdict oddaffine_nonneg_integer(const OddAffine& v, const BigInt& denom = 1);

/// Decides whether v(m)/denom is an even integer (sign unrestricted).
Verdict oddaffine_even_integer(const OddAffine& v, const BigInt& denom = 1);

/// Decides whether v(m) = 0 (with v rational-valued); used for rationality.
Verdict oddaffine_zero(const OddAffine& v);

/// "v(m)/denom is an integer", optionally also non-negative and/or even.
struct OddCondition {
  OddAffine value;
  BigInt denom = 1;
  bool nonneg = true;
  bool even = false;
};

/// Least odd m >= 1 satisfying every condition at once, if any.
std::optional<BigInt> common_odd_m(const std::vector<OddCondition>& conds);

}  // namespace sip
