#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace sip {

namespace detail {
struct FieldImpl;
}

class FieldElement;

/// Finite field F_q, q = p^k with p an odd prime and q <= 10^6.
///
/// Elements are encoded as integers sum c_i p^i over the coefficients of
/// their residue polynomial. The modulus is the lexicographically smallest
/// monic irreducible polynomial when coefficients are read from c_{k-1} down
/// to c_0 (and x itself for k = 1). Fields are interned: building the same
/// (p, k) twice returns the same object, so elements compare across calls.
class FiniteField {
 public:
  static FiniteField make(long p, int k);

  long p() const;
  int k() const;
  long q() const;
  /// c_0, ..., c_k of the monic modulus.
  const std::vector<long>& modulus() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(long n) const;
  FieldElement from_code(std::uint32_t code) const;
  /// Least code of multiplicative order q - 1.
  FieldElement primitive_element() const;
  /// primitive_element()^((q-1)/2^v) with 2^v exactly dividing q - 1. When q
  /// is a square r^2 the identities relating it to its image under x -> x^r
  /// are checked on construction.
  FieldElement max_2power_element() const;
  /// Generator of the multiplicative group of the subfield F_{p^d}.
  FieldElement subfield_generator(int d) const;
  bool in_subfield(const FieldElement& x, int d) const;

  friend bool operator==(const FiniteField& a, const FiniteField& b) { return a.impl_ == b.impl_; }
  const detail::FieldImpl* impl() const { return impl_.get(); }
  std::string name() const;

 private:
  explicit FiniteField(std::shared_ptr<const detail::FieldImpl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const detail::FieldImpl> impl_;
};

/// Element of an interned finite field; cheap to copy.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(const detail::FieldImpl* f, std::uint32_t code) : f_(f), code_(code) {}

  std::uint32_t code() const { return code_; }
  bool is_zero() const { return code_ == 0; }
  bool is_one() const;
  /// Discrete log to the field's primitive element; x must be nonzero.
  long log() const;
  /// Multiplicative order; x must be nonzero.
  long order() const;
  /// Coefficients c_0..c_{k-1}.
  std::vector<long> coefficients() const;

  FieldElement operator-() const;
  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const { return *this * o.inverse(); }
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
  FieldElement inverse() const;
  FieldElement pow(long e) const;
  /// x -> x^r; r must be a power of the characteristic.
  FieldElement frobenius(long r) const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) { return a.f_ == b.f_ && a.code_ == b.code_; }
  friend bool operator<(const FieldElement& a, const FieldElement& b) { return a.code_ < b.code_; }

  /// Polynomial form in x, e.g. "2+x".
  std::string to_string() const;
  const detail::FieldImpl* field() const { return f_; }

 private:
  const detail::FieldImpl* f_ = nullptr;
  std::uint32_t code_ = 0;
};

}  // namespace sip
