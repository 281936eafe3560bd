#include "sip/exactnum/char_value.hpp"

#include <cctype>
#include <ostream>

#include "sip/error.hpp"
#include "sip/numtheory.hpp"

namespace sip {

std::optional<OddAffine> CharValue::as_odd_affine() const {
  auto a = c0_.as_rational();
  auto b = c1_.as_rational();
  if (!a || !b) return std::nullopt;
  return OddAffine(*a, *b);
}

long CharValue::conductor() const { return nt::lcm(c0_.conductor(), c1_.conductor()); }

CharValue& CharValue::operator*=(const CharValue& o) {
  if (depends_on_m() && o.depends_on_m()) throw InvalidArgument("product of two m-dependent values would involve m^2");
  Cyclotomic n0 = c0_ * o.c0_;
  Cyclotomic n1 = c0_ * o.c1_ + c1_ * o.c0_;
  c0_ = std::move(n0);
  c1_ = std::move(n1);
  return *this;
}

CharValue& CharValue::operator/=(const Cyclotomic& z) {
  Cyclotomic inv = z.inverse();
  c0_ *= inv;
  c1_ *= inv;
  return *this;
}

namespace {

std::string wrap(const Cyclotomic& z) {
  std::string s = z.to_string();
  if (z.is_rational()) return s;
  return "(" + s + ")";
}

template <class IntegerCheck>
Verdict generic_check(const CharValue& v, IntegerCheck check) {
  Rational r0 = v.constant().rational_part(), r1 = v.slope().rational_part();
  Cyclotomic y0 = v.constant() - Cyclotomic(r0), y1 = v.slope() - Cyclotomic(r1);
  OddAffine rat(r0, r1);
  if (y1.is_zero()) {
    if (y0.is_zero()) return check(rat);
    Verdict out;
    out.kind = VerdictKind::NeverHolds;
    out.fails_at = 1;
    return out;
  }
  // Rational only at m = -y0/y1.
  Verdict out;
  out.kind = VerdictKind::NeverHolds;
  auto ms = (-y0 / y1).as_rational();
  if (!ms || !ms->is_integer() || ms->sign() <= 0 || ms->numerator() % 2 == 0) {
    out.fails_at = 1;
    return out;
  }
  BigInt mstar = ms->numerator();
  out.fails_at = mstar == 1 ? BigInt(3) : BigInt(1);
  Verdict at = check(OddAffine(rat.eval(mstar)));
  if (!at.never()) {
    out.kind = VerdictKind::DependsOnM;
    out.holds_at = mstar;
  }
  return out;
}

}  // namespace

std::string CharValue::to_string() const {
  if (c1_.is_zero()) return c0_.to_string();
  std::string slope;
  if (c1_ == Cyclotomic(1))
    slope = "m";
  else if (c1_ == Cyclotomic(-1))
    slope = "-m";
  else
    slope = wrap(c1_) + "*m";
  if (c0_.is_zero()) return slope;
  std::string head = c0_.is_rational() ? c0_.to_string() : wrap(c0_);
  return head + (slope[0] == '-' ? "" : "+") + slope;
}

std::ostream& operator<<(std::ostream& os, const CharValue& v) { return os << v.to_string(); }

Verdict charvalue_nonneg_integer(const CharValue& v, const BigInt& denom) {
  return generic_check(v, [&](const OddAffine& x) { return oddaffine_nonneg_integer(x, denom); });
}

Verdict charvalue_even_integer(const CharValue& v, const BigInt& denom) {
  return generic_check(v, [&](const OddAffine& x) { return oddaffine_even_integer(x, denom); });
}

CharValue apply_mode(const CharValue& v, const MMode& mode) {
  if (mode.is_symbolic()) return v;
  return CharValue(v.eval(*mode.value));
}

namespace {
// With m fixed, a verdict collapses to holds/fails at that m.
Verdict concretize(Verdict v, const MMode& mode) {
  if (mode.is_symbolic()) return v;
  BigInt m = *mode.value;
  bool holds = !v.never();
  Verdict out;
  out.kind = holds ? VerdictKind::AlwaysHolds : VerdictKind::NeverHolds;
  if (holds)
    out.holds_at = m;
  else
    out.fails_at = m;
  return out;
}
}  // namespace

Verdict nonneg_integer_in_mode(const CharValue& v, const BigInt& denom, const MMode& mode) {
  return concretize(charvalue_nonneg_integer(apply_mode(v, mode), denom), mode);
}

Verdict even_integer_in_mode(const CharValue& v, const BigInt& denom, const MMode& mode) {
  return concretize(charvalue_even_integer(apply_mode(v, mode), denom), mode);
}

// ---------------------------------------------------------------------------
// Expression parser

namespace {

class ExprParser {
 public:
  explicit ExprParser(const std::string& s) : s_(s) {}

  CharValue parse() {
    CharValue v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " in expression '" + s_ + "'", 1, static_cast<int>(pos_) + 1);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  BigInt integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return BigInt(s_.substr(start, pos_ - start));
  }
  long small_integer() {
    BigInt v = integer();
    if (!v.fits_slong_p() || v > 1000000) fail("integer too large");
    return v.get_si();
  }

  CharValue expr() {
    CharValue v = term();
    while (true) {
      if (accept('+'))
        v += term();
      else if (accept('-'))
        v -= term();
      else
        return v;
    }
  }
  CharValue term() {
    CharValue v = factor();
    while (true) {
      if (accept('*')) {
        CharValue r = factor();
        if (v.depends_on_m() && r.depends_on_m()) fail("m may appear only linearly");
        v *= r;
      } else if (accept('/')) {
        CharValue r = factor();
        if (r.depends_on_m()) fail("division by an m-dependent value");
        if (r.constant().is_zero()) fail("division by zero");
        v /= r.constant();
      } else {
        return v;
      }
    }
  }
  CharValue factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    CharValue base = primary();
    if (!accept('^')) return base;
    bool neg = accept('-');
    long k = small_integer();
    if (neg) k = -k;
    if (base.depends_on_m()) {
      if (k == 1) return base;
      if (k == 0) return CharValue(1);
      fail("m may appear only linearly");
    }
    if (k < 0 && base.constant().is_zero()) fail("negative power of zero");
    return CharValue(base.constant().pow(k));
  }
  CharValue primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      CharValue v = expr();
      expect(')');
      return v;
    }
    if (c == 'm') {
      ++pos_;
      return CharValue::m();
    }
    if (c == 'E') {
      ++pos_;
      expect('(');
      long n = small_integer();
      if (n <= 0) fail("E(n) needs n >= 1");
      expect(')');
      return CharValue(Cyclotomic::E(n));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return CharValue(Rational(integer(), BigInt(1)));
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

CharValue parse_char_value(const std::string& text) { return ExprParser(text).parse(); }

}  // namespace sip
