#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "sip/exactnum/cyclotomic.hpp"
#include "sip/exactnum/odd_affine.hpp"

namespace sip {

/// Character value c0 + c1*m with cyclotomic coefficients and m the odd
/// index symbol. Tables built from genuine groups have c1 = 0; the host
/// tables of parametric families carry rational c0, c1.
class CharValue {
 public:
  CharValue() = default;
  CharValue(const Cyclotomic& c0) : c0_(c0) {}  // NOLINT
  CharValue(const Rational& c0) : c0_(c0) {}    // NOLINT
  template <std::integral T>
  CharValue(T c) : c0_(Rational(c)) {}  // NOLINT
  CharValue(const Cyclotomic& c0, const Cyclotomic& c1) : c0_(c0), c1_(c1) {}
  CharValue(const OddAffine& v) : c0_(v.constant()), c1_(v.slope()) {}  // NOLINT

  static CharValue m() { return CharValue(Cyclotomic(0), Cyclotomic(1)); }

  const Cyclotomic& constant() const { return c0_; }
  const Cyclotomic& slope() const { return c1_; }
  bool depends_on_m() const { return !c1_.is_zero(); }
  bool is_zero() const { return c0_.is_zero() && c1_.is_zero(); }
  /// True iff both coefficients are rational.
  bool is_rational() const { return c0_.is_rational() && c1_.is_rational(); }
  std::optional<OddAffine> as_odd_affine() const;

  Cyclotomic eval(long m) const { return c0_ + c1_ * Cyclotomic(m); }
  Cyclotomic eval(const BigInt& m) const { return c0_ + c1_ * Cyclotomic(Rational(m, BigInt(1))); }

  CharValue galois(long k) const { return {c0_.galois(k), c1_.galois(k)}; }
  CharValue conj() const { return {c0_.conj(), c1_.conj()}; }
  /// Coefficientwise trace from Q(zeta_field) to Q.
  OddAffine trace_over(long field) const { return {c0_.trace_over(field), c1_.trace_over(field)}; }
  /// Coefficientwise projection onto Q.
  OddAffine rational_part() const { return {c0_.rational_part(), c1_.rational_part()}; }
  /// Least common conductor of the coefficients.
  long conductor() const;

  CharValue operator-() const { return {-c0_, -c1_}; }
  CharValue& operator+=(const CharValue& o) {
    c0_ += o.c0_;
    c1_ += o.c1_;
    return *this;
  }
  CharValue& operator-=(const CharValue& o) {
    c0_ -= o.c0_;
    c1_ -= o.c1_;
    return *this;
  }
  /// Rejects products that would create an m^2 term.
  CharValue& operator*=(const CharValue& o);
  CharValue& operator/=(const Cyclotomic& z);
  friend CharValue operator+(CharValue a, const CharValue& b) { return a += b; }
  friend CharValue operator-(CharValue a, const CharValue& b) { return a -= b; }
  friend CharValue operator*(CharValue a, const CharValue& b) { return a *= b; }
  friend CharValue operator/(CharValue a, const Cyclotomic& b) { return a /= b; }

  friend bool operator==(const CharValue&, const CharValue&) = default;
  friend std::strong_ordering operator<=>(const CharValue& a, const CharValue& b) {
    if (auto c = a.c0_ <=> b.c0_; c != 0) return c;
    return a.c1_ <=> b.c1_;
  }

  /// Literal in the table expression grammar; parses back exactly.
  std::string to_string() const;

 private:
  Cyclotomic c0_;
  Cyclotomic c1_;
};

std::ostream& operator<<(std::ostream& os, const CharValue& v);

/// Decides whether v(m)/denom is a non-negative integer over odd m >= 1,
/// including the requirement that the value is rational at m.
Verdict charvalue_nonneg_integer(const CharValue& v, const BigInt& denom = 1);
/// Same for "even integer".
Verdict charvalue_even_integer(const CharValue& v, const BigInt& denom = 1);

/// Evaluation mode for the symbol m: symbolic over all odd m, or a fixed odd m.
struct MMode {
  std::optional<long> value;
  static MMode symbolic() { return {}; }
  static MMode fixed(long m) { return {m}; }
  bool is_symbolic() const { return !value.has_value(); }
  std::string to_string() const { return value ? "m=" + std::to_string(*value) : "symbolic"; }
};

/// Applies the mode: fixed m substitutes, symbolic leaves the value unchanged.
CharValue apply_mode(const CharValue& v, const MMode& mode);
/// charvalue_nonneg_integer after apply_mode.
Verdict nonneg_integer_in_mode(const CharValue& v, const BigInt& denom, const MMode& mode);
Verdict even_integer_in_mode(const CharValue& v, const BigInt& denom, const MMode& mode);

/// Parses the table expression grammar: integers, a/b, E(n), m, + - * ^ and
/// parentheses. Throws ParseError with a 1-based column.
CharValue parse_char_value(const std::string& text);

}  // namespace sip
