#pragma once

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sip/exactnum/rational.hpp"

namespace sip {

/// Exact element of a cyclotomic field.
///
/// Canonical form: the conductor n is the least index with the value in
/// Q(zeta_n); n is never 2 mod 4. The value is stored on a fixed basis of
/// Q(zeta_n) made of powers zeta_n^e (a tensor product of prime-power bases,
/// described in cyclotomic.cpp), keeping only nonzero coefficients in
/// increasing exponent order. Zero is the empty term list with conductor 1.
/// Since the basis and the conductor are unique, two values are equal iff
/// their representations are.
class Cyclotomic {
 public:
  using Term = std::pair<int, Rational>;

  Cyclotomic() = default;
  Cyclotomic(const Rational& r);  // NOLINT: rationals embed implicitly
  template <std::integral T>
  Cyclotomic(T n) : Cyclotomic(Rational(n)) {}  // NOLINT

  /// Builds sum c * zeta_conductor^e over raw terms; exponents may be any
  /// integer and the conductor any positive integer.
  static Cyclotomic make(long conductor, const std::vector<std::pair<long, Rational>>& raw_terms);
  /// zeta_n^e.
  static Cyclotomic root_of_unity(long n, long e = 1);
  static Cyclotomic E(long n) { return root_of_unity(n, 1); }

  long conductor() const { return conductor_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const { return conductor_ == 1; }
  std::optional<Rational> as_rational() const;

  /// Image under zeta_n -> zeta_n^k; k must be coprime to the conductor.
  Cyclotomic galois(long k) const;
  Cyclotomic conj() const { return galois(-1); }
  /// Sum over Gal(Q(zeta_c)/Q) with c the conductor.
  Rational trace() const;
  /// Trace from Q(zeta_field) to Q; the value must lie in Q(zeta_field).
  Rational trace_over(long field) const;
  Cyclotomic inverse() const;
  /// Trace divided by the degree of the conductor field.
  Rational rational_part() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Cyclotomic& rhs);
  Cyclotomic& operator/=(const Cyclotomic& rhs) { return *this *= rhs.inverse(); }
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  Cyclotomic pow(long e) const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.conductor_ == b.conductor_ && a.terms_ == b.terms_;
  }
  /// Deterministic total order: conductor, then term lists lexicographically.
  friend std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b);

  /// Literal such as "3/2", "E(4)" or "1+2*E(8)^3-E(8)"; parses back exactly.
  std::string to_string() const;

  /// Terms of this value in the basis of Q(zeta_n); n must be a multiple of
  /// the conductor (after normalization).
  std::vector<Term> terms_in(long n) const;
  /// sum c_e zeta_n^e over a dense coefficient vector indexed by exponent.
  static Cyclotomic from_dense(long n, std::vector<mpq_class> coeffs);

 private:
  friend class CyclotomicBuilder;
  long conductor_ = 1;
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& z);

}  // namespace sip
