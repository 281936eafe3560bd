#pragma once

#include <string>
#include <vector>

#include "sip/ffield.hpp"

namespace sip {

/// Dense matrix over an interned finite field.
class FMatrix {
 public:
  FMatrix(FiniteField F, int rows, int cols);
  static FMatrix identity(FiniteField F, int n);
  static FMatrix scalar(const FieldElement& x, FiniteField F, int n);
  static FMatrix from_ints(FiniteField F, const std::vector<std::vector<long>>& rows);
  static FMatrix from_elements(FiniteField F, const std::vector<std::vector<FieldElement>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const FiniteField& field() const { return field_; }
  FieldElement& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const FieldElement& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  FMatrix operator*(const FMatrix& o) const;
  FMatrix operator+(const FMatrix& o) const;
  FMatrix operator-(const FMatrix& o) const;
  FMatrix scaled(const FieldElement& x) const;
  FMatrix transpose() const;
  /// Entrywise x -> x^r.
  FMatrix frobenius(long r) const;
  FMatrix pow(long e) const;
  FieldElement det() const;
  int rank() const;
  /// Throws InvalidArgument when singular.
  FMatrix inverse() const;
  bool is_identity() const;
  bool is_scalar() const;
  /// Smallest e with M^e scalar (projective order); throws past `limit`.
  long projective_order(long limit = 100000) const;
  /// Smallest e with M^e = 1; throws past `limit`.
  long order(long limit = 100000) const;

  friend bool operator==(const FMatrix& a, const FMatrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  std::string to_string() const;

 private:
  FiniteField field_;
  int rows_, cols_;
  std::vector<FieldElement> a_;
};

/// The embedding F_{p^a} -> F_{p^b} (a | b) sending the generator x of the
/// source to the least-code root of the source modulus in the target.
class FieldEmbedding {
 public:
  FieldEmbedding(FiniteField from, FiniteField to);
  const FiniteField& from() const { return from_; }
  const FiniteField& to() const { return to_; }
  FieldElement operator()(const FieldElement& x) const;
  FMatrix operator()(const FMatrix& m) const;

 private:
  FiniteField from_, to_;
  std::vector<std::uint32_t> image_;
};

}  // namespace sip
