#include "sip/ffield.hpp"

#include <map>
#include <numeric>
#include <mutex>

#include "sip/error.hpp"
#include "sip/numtheory.hpp"

namespace sip {

namespace detail {

struct FieldImpl {
  long p = 0;
  int k = 0;
  long q = 0;
  std::vector<long> modulus;     // c_0..c_k, monic
  std::vector<long> pw;          // p^i, i = 0..k
  std::vector<std::uint32_t> exp;  // exp[i] = g^i, i in [0, 2(q-1))
  std::vector<long> log;         // log[code], log[0] unused
  std::uint32_t alpha = 0;       // element of maximal 2-power order

  std::vector<long> digits(std::uint32_t c) const {
    std::vector<long> d(k);
    for (int i = 0; i < k; ++i) {
      d[i] = c % p;
      c /= p;
    }
    return d;
  }
  std::uint32_t encode(const std::vector<long>& d) const {
    std::uint32_t c = 0;
    for (int i = k - 1; i >= 0; --i) c = c * p + static_cast<std::uint32_t>(nt::mod(d[i], p));
    return c;
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t out = 0;
    for (int i = 0; i < k; ++i) {
      long s = static_cast<long>(a % p) + static_cast<long>(b % p);
      if (s >= p) s -= p;
      out += static_cast<std::uint32_t>(s * pw[i]);
      a /= p;
      b /= p;
    }
    return out;
  }
  std::uint32_t neg(std::uint32_t a) const {
    std::uint32_t out = 0;
    for (int i = 0; i < k; ++i) {
      long d = static_cast<long>(a % p);
      if (d) out += static_cast<std::uint32_t>((p - d) * pw[i]);
      a /= p;
    }
    return out;
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp[log[a] + log[b]];
  }
  std::uint32_t power(std::uint32_t a, long e) const {
    if (a == 0) {
      if (e < 0) throw InvalidArgument("negative power of zero in " + name());
      return e == 0 ? 1 : 0;
    }
    long l = nt::mod(log[a] * nt::mod(e, q - 1), q - 1);
    return exp[l];
  }
  std::string name() const { return "GF(" + std::to_string(q) + ")"; }
};

}  // namespace detail

namespace {

using Poly = std::vector<long>;  // little-endian coefficients mod p

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& modulus, long p) {
  int k = static_cast<int>(modulus.size()) - 1;
  std::vector<long> prod(2 * k, 0);
  for (int i = 0; i < k; ++i) {
    if (!a[i]) continue;
    for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  for (int d = 2 * k - 1; d >= k; --d) {
    long c = prod[d];
    if (!c) continue;
    for (int i = 0; i <= k; ++i) prod[d - k + i] = nt::mod(prod[d - k + i] - c * modulus[i], p);
  }
  prod.resize(k);
  return prod;
}

// Remainder of a modulo b (b monic), both little-endian.
Poly poly_rem(Poly a, const Poly& b, long p) {
  int db = static_cast<int>(b.size()) - 1;
  for (int d = static_cast<int>(a.size()) - 1; d >= db; --d) {
    long c = a[d];
    if (!c) continue;
    for (int i = 0; i <= db; ++i) a[d - db + i] = nt::mod(a[d - db + i] - c * b[i], p);
  }
  a.resize(db);
  return a;
}

bool is_irreducible(const Poly& f, long p) {
  int k = static_cast<int>(f.size()) - 1;
  // Trial division by every monic polynomial of degree 1..k/2.
  for (int d = 1; 2 * d <= k; ++d) {
    long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long c = 0; c < count; ++c) {
      Poly g(d + 1, 0);
      long t = c;
      for (int i = 0; i < d; ++i) {
        g[i] = t % p;
        t /= p;
      }
      g[d] = 1;
      Poly r = poly_rem(f, g, p);
      bool zero = true;
      for (long x : r) zero = zero && x == 0;
      if (zero) return false;
    }
  }
  return true;
}

Poly smallest_irreducible(long p, int k) {
  if (k == 1) return {0, 1};
  long count = 1;
  for (int i = 0; i < k; ++i) count *= p;
  // Lexicographic on (c_{k-1}, ..., c_0) is the natural order of the code
  // with c_{k-1} as the most significant digit.
  for (long c = 0; c < count; ++c) {
    Poly f(k + 1, 0);
    long t = c;
    for (int i = 0; i < k; ++i) {
      f[i] = t % p;
      t /= p;
    }
    f[k] = 1;
    if (f[0] != 0 && is_irreducible(f, p)) return f;
  }
  throw InvalidState("no irreducible polynomial found");
}

std::shared_ptr<const detail::FieldImpl> build(long p, int k) {
  auto f = std::make_shared<detail::FieldImpl>();
  f->p = p;
  f->k = k;
  f->q = 1;
  f->pw.push_back(1);
  for (int i = 0; i < k; ++i) {
    f->q *= p;
    f->pw.push_back(f->q);
  }
  f->modulus = smallest_irreducible(p, k);
  long q = f->q;

  auto poly_of = [&](std::uint32_t c) { return f->digits(c); };
  auto poly_pow = [&](Poly b, long e) {
    Poly r(k, 0);
    r[0] = 1;
    while (e) {
      if (e & 1) r = poly_mulmod(r, b, f->modulus, p);
      b = poly_mulmod(b, b, f->modulus, p);
      e >>= 1;
    }
    return r;
  };
  Poly one(k, 0);
  one[0] = 1;
  auto primes = nt::prime_factors(q - 1);
  std::uint32_t g = 0;
  for (std::uint32_t c = 1; c < static_cast<std::uint32_t>(q); ++c) {
    Poly x = poly_of(c);
    bool ok = true;
    for (long l : primes)
      if (poly_pow(x, (q - 1) / l) == one) {
        ok = false;
        break;
      }
    if (ok) {
      g = c;
      break;
    }
  }
  if (g == 0) throw InvalidState("no primitive element found");

  f->exp.assign(2 * (q - 1), 0);
  f->log.assign(q, -1);
  Poly gp = poly_of(g), cur = one;
  for (long i = 0; i < q - 1; ++i) {
    std::uint32_t c = f->encode(cur);
    if (f->log[c] != -1) throw InvalidState("primitive element check failed");
    f->exp[i] = f->exp[i + q - 1] = c;
    f->log[c] = i;
    cur = poly_mulmod(cur, gp, f->modulus, p);
  }

  long two_part = 1;
  while ((q - 1) % (two_part * 2) == 0) two_part *= 2;
  f->alpha = f->exp[(q - 1) / two_part];
  return f;
}

}  // namespace

FiniteField FiniteField::make(long p, int k) {
  if (p < 3 || !nt::is_prime(p)) throw InvalidArgument("field characteristic must be an odd prime, got " + std::to_string(p));
  if (k < 1) throw InvalidArgument("field degree must be positive");
  long q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q > 1000000) throw InvalidArgument("field size exceeds 10^6");
  }
  static std::mutex mu;
  static std::map<std::pair<long, int>, std::shared_ptr<const detail::FieldImpl>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{p, k}];
  if (!slot) slot = build(p, k);
  FiniteField F(slot);
  // Check the identities linking alpha to its Frobenius conjugate.
  if (k % 2 == 0) {
    long r = 1;
    for (int i = 0; i < k / 2; ++i) r *= p;
    FieldElement a = F.max_2power_element();
    FieldElement s = a.frobenius(r);
    FieldElement expect = (r % 4 == 3) ? -a.inverse() : -a;
    if (!(s == expect)) throw InvalidState("Frobenius identity for the maximal 2-power element failed in " + F.name());
  }
  return F;
}

long FiniteField::p() const { return impl_->p; }
int FiniteField::k() const { return impl_->k; }
long FiniteField::q() const { return impl_->q; }
const std::vector<long>& FiniteField::modulus() const { return impl_->modulus; }
std::string FiniteField::name() const { return impl_->name(); }

FieldElement FiniteField::zero() const { return {impl_.get(), 0}; }
FieldElement FiniteField::one() const { return {impl_.get(), 1}; }
FieldElement FiniteField::from_int(long n) const {
  return {impl_.get(), static_cast<std::uint32_t>(nt::mod(n, impl_->p))};
}
FieldElement FiniteField::from_code(std::uint32_t code) const {
  if (code >= static_cast<std::uint32_t>(impl_->q)) throw InvalidArgument("element code out of range for " + name());
  return {impl_.get(), code};
}
FieldElement FiniteField::primitive_element() const { return {impl_.get(), impl_->exp[1 % (impl_->q - 1)]}; }
FieldElement FiniteField::max_2power_element() const { return {impl_.get(), impl_->alpha}; }

FieldElement FiniteField::subfield_generator(int d) const {
  if (d < 1 || impl_->k % d != 0) throw InvalidArgument("no subfield of degree " + std::to_string(d) + " in " + name());
  long sub = 1;
  for (int i = 0; i < d; ++i) sub *= impl_->p;
  return {impl_.get(), impl_->exp[(impl_->q - 1) / (sub - 1)]};
}

bool FiniteField::in_subfield(const FieldElement& x, int d) const {
  long r = 1;
  for (int i = 0; i < d; ++i) r *= impl_->p;
  return x.pow(r) == x;
}

bool FieldElement::is_one() const { return code_ == 1; }

long FieldElement::log() const {
  if (code_ == 0) throw InvalidArgument("log of zero");
  return f_->log[code_];
}

long FieldElement::order() const {
  long n = f_->q - 1;
  return n / std::gcd(n, log());
}

std::vector<long> FieldElement::coefficients() const { return f_->digits(code_); }

FieldElement FieldElement::operator-() const { return {f_, f_->neg(code_)}; }
FieldElement FieldElement::operator+(const FieldElement& o) const { return {f_, f_->add(code_, o.code_)}; }
FieldElement FieldElement::operator-(const FieldElement& o) const { return {f_, f_->add(code_, f_->neg(o.code_))}; }
FieldElement FieldElement::operator*(const FieldElement& o) const { return {f_, f_->mul(code_, o.code_)}; }
FieldElement FieldElement::inverse() const {
  if (code_ == 0) throw InvalidArgument("inverse of zero in " + f_->name());
  return {f_, f_->exp[(f_->q - 1 - f_->log[code_]) % (f_->q - 1)]};
}
FieldElement FieldElement::pow(long e) const { return {f_, f_->power(code_, e)}; }

FieldElement FieldElement::frobenius(long r) const {
  auto pk = nt::prime_power(r);
  if (r != 1 && pk.first != f_->p) throw InvalidArgument("Frobenius exponent must be a power of " + std::to_string(f_->p));
  return pow(r);
}

std::string FieldElement::to_string() const {
  auto d = coefficients();
  std::string out;
  for (int i = 0; i < f_->k; ++i) {
    if (!d[i]) continue;
    if (!out.empty()) out += "+";
    std::string mono = i == 0 ? "" : (i == 1 ? "x" : "x^" + std::to_string(i));
    if (mono.empty())
      out += std::to_string(d[i]);
    else if (d[i] == 1)
      out += mono;
    else
      out += std::to_string(d[i]) + "*" + mono;
  }
  return out.empty() ? "0" : out;
}

}  // namespace sip
