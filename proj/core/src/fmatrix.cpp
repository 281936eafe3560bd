#include <algorithm>
#include <sstream>

#include "sip/error.hpp"
#include "sip/ffrep/matrix.hpp"

namespace sip {

FMatrix::FMatrix(FiniteField F, int rows, int cols)
    : field_(std::move(F)), rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, field_.zero()) {}

FMatrix FMatrix::identity(FiniteField F, int n) { return scalar(F.one(), F, n); }

FMatrix FMatrix::scalar(const FieldElement& x, FiniteField F, int n) {
  FMatrix m(std::move(F), n, n);
  for (int i = 0; i < n; ++i) m(i, i) = x;
  return m;
}

FMatrix FMatrix::from_ints(FiniteField F, const std::vector<std::vector<long>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r ? static_cast<int>(rows[0].size()) : 0;
  FMatrix m(F, r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw InvalidArgument("ragged matrix rows");
    for (int j = 0; j < c; ++j) m(i, j) = F.from_int(rows[i][j]);
  }
  return m;
}

FMatrix FMatrix::from_elements(FiniteField F, const std::vector<std::vector<FieldElement>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r ? static_cast<int>(rows[0].size()) : 0;
  FMatrix m(F, r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw InvalidArgument("ragged matrix rows");
    for (int j = 0; j < c; ++j) {
      if (rows[i][j].field() != F.impl()) throw InvalidArgument("matrix entry from a different field");
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

FMatrix FMatrix::operator*(const FMatrix& o) const {
  if (cols_ != o.rows_ || !(field_ == o.field_)) throw InvalidArgument("matrix product shape or field mismatch");
  FMatrix out(field_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const auto& x = (*this)(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) out(i, j) += x * o(k, j);
    }
  return out;
}

FMatrix FMatrix::operator+(const FMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || !(field_ == o.field_)) throw InvalidArgument("matrix sum shape or field mismatch");
  FMatrix out = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] += o.a_[i];
  return out;
}

FMatrix FMatrix::operator-(const FMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || !(field_ == o.field_)) throw InvalidArgument("matrix difference shape or field mismatch");
  FMatrix out = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] -= o.a_[i];
  return out;
}

FMatrix FMatrix::scaled(const FieldElement& x) const {
  FMatrix out = *this;
  for (auto& e : out.a_) e *= x;
  return out;
}

FMatrix FMatrix::transpose() const {
  FMatrix out(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

FMatrix FMatrix::frobenius(long r) const {
  FMatrix out = *this;
  for (auto& e : out.a_) e = e.frobenius(r);
  return out;
}

FMatrix FMatrix::pow(long e) const {
  if (rows_ != cols_) throw InvalidArgument("power of a non-square matrix");
  if (e < 0) return inverse().pow(-e);
  FMatrix result = identity(field_, rows_), base = *this;
  while (e) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

namespace {

// Row-reduces a copy; returns (rank, determinant when square).
std::pair<int, FieldElement> eliminate(FMatrix m) {
  int rows = m.rows(), cols = m.cols();
  FieldElement det = m.field().one();
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (!m(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) {
      det = m.field().zero();
      continue;
    }
    if (piv != r) {
      for (int j = 0; j < cols; ++j) std::swap(m(r, j), m(piv, j));
      det = -det;
    }
    det *= m(r, c);
    FieldElement inv = m(r, c).inverse();
    for (int i = r + 1; i < rows; ++i) {
      if (m(i, c).is_zero()) continue;
      FieldElement f = m(i, c) * inv;
      for (int j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  if (r < rows) det = m.field().zero();
  return {r, det};
}

}  // namespace

FieldElement FMatrix::det() const {
  if (rows_ != cols_) throw InvalidArgument("determinant of a non-square matrix");
  return eliminate(*this).second;
}

int FMatrix::rank() const { return eliminate(*this).first; }

FMatrix FMatrix::inverse() const {
  if (rows_ != cols_) throw InvalidArgument("inverse of a non-square matrix");
  int n = rows_;
  FMatrix a = *this, inv = identity(field_, n);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (!a(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) throw InvalidArgument("matrix is singular");
    for (int j = 0; j < n; ++j) {
      std::swap(a(c, j), a(piv, j));
      std::swap(inv(c, j), inv(piv, j));
    }
    FieldElement s = a(c, c).inverse();
    for (int j = 0; j < n; ++j) {
      a(c, j) *= s;
      inv(c, j) *= s;
    }
    for (int i = 0; i < n; ++i) {
      if (i == c || a(i, c).is_zero()) continue;
      FieldElement f = a(i, c);
      for (int j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

bool FMatrix::is_scalar() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (i == j ? !((*this)(i, j) == (*this)(0, 0)) : !(*this)(i, j).is_zero()) return false;
  return true;
}

bool FMatrix::is_identity() const { return is_scalar() && (rows_ == 0 || (*this)(0, 0).is_one()); }

long FMatrix::projective_order(long limit) const {
  FMatrix cur = *this;
  for (long e = 1; e <= limit; ++e, cur = cur * *this)
    if (cur.is_scalar()) return e;
  throw InvalidArgument("matrix has projective order above " + std::to_string(limit));
}

long FMatrix::order(long limit) const {
  FMatrix cur = *this;
  for (long e = 1; e <= limit; ++e, cur = cur * *this)
    if (cur.is_identity()) return e;
  throw InvalidArgument("matrix has order above " + std::to_string(limit));
}

std::string FMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    if (i) os << "; ";
    for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).to_string();
  }
  os << "]";
  return os.str();
}

FieldEmbedding::FieldEmbedding(FiniteField from, FiniteField to) : from_(std::move(from)), to_(std::move(to)) {
  if (from_.p() != to_.p() || to_.k() % from_.k() != 0)
    throw InvalidArgument("cannot embed " + from_.name() + " into " + to_.name());
  const auto& mod = from_.modulus();
  int a = from_.k();
  // Roots of the source modulus lie in the degree-a subfield of the target.
  FieldElement gen = to_.subfield_generator(a);
  long sub = from_.q();
  std::vector<FieldElement> cand{to_.zero()};
  FieldElement y = to_.one();
  for (long j = 0; j < sub - 1; ++j, y *= gen) cand.push_back(y);
  std::sort(cand.begin(), cand.end());
  FieldElement root;
  bool found = false;
  for (const auto& c : cand) {
    FieldElement v = to_.zero();
    for (auto it = mod.rbegin(); it != mod.rend(); ++it) v = v * c + to_.from_int(*it);
    if (v.is_zero()) {
      root = c;
      found = true;
      break;
    }
  }
  if (!found) throw InvalidState("modulus of " + from_.name() + " has no root in " + to_.name());
  image_.resize(from_.q());
  for (long code = 0; code < from_.q(); ++code) {
    auto coeffs = from_.from_code(static_cast<std::uint32_t>(code)).coefficients();
    FieldElement v = to_.zero();
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * root + to_.from_int(*it);
    image_[code] = v.code();
  }
}

FieldElement FieldEmbedding::operator()(const FieldElement& x) const {
  if (x.field() != from_.impl()) throw InvalidArgument("element is not in " + from_.name());
  return to_.from_code(image_[x.code()]);
}

FMatrix FieldEmbedding::operator()(const FMatrix& m) const {
  FMatrix out(to_, m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = (*this)(m(i, j));
  return out;
}

}  // namespace sip
