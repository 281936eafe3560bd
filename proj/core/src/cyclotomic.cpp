#include "sip/exactnum/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

#include "sip/error.hpp"
#include "sip/numtheory.hpp"

// Basis of Q(zeta_n). Write n = prod q_i with q_i = p_i^a_i and split an
// exponent E of zeta_n into components e_i = E * (n/q_i)^(-1) mod q_i, so
// that zeta_n^E = prod zeta_{q_i}^{e_i}. The basis is the tensor product of
// one basis per prime power:
//   q = 2^a (a >= 2):  e in [0, q/2), using zeta^(e + q/2) = -zeta^e;
//   q = p^a (p odd):   e with floor(e / p^(a-1)) in [1, p-1], using
//                      zeta^j = -sum_{k=1}^{p-1} zeta^(j + k p^(a-1)).
// Subfields are then visible on the exponents: Q(zeta_{n/p}) is spanned by
// the basis elements whose p-component is divisible by p (p^2 | n), or for
// p || n by those groups of p-1 terms with equal coefficients.

namespace sip {
namespace {

constexpr long kMaxConductor = 1L << 24;

struct Component {
  long p = 0;
  int a = 0;
  long q = 0;       // p^a
  long top = 0;     // p^(a-1)
  long cof = 0;     // n / q
  long cofinv = 0;  // cof^(-1) mod q
};

struct FieldInfo {
  long n = 1;
  long phi = 1;
  std::vector<Component> comps;

  std::vector<long> split(long E) const {
    std::vector<long> out(comps.size());
    for (std::size_t i = 0; i < comps.size(); ++i) {
      const auto& c = comps[i];
      out[i] = nt::mod(nt::mod(E, c.q) * c.cofinv, c.q);
    }
    return out;
  }
  long join(const std::vector<long>& e) const {
    long E = 0;
    for (std::size_t i = 0; i < comps.size(); ++i) E = (E + e[i] * comps[i].cof) % n;
    return E;
  }
};

std::shared_ptr<const FieldInfo> build_info(long n) {
  auto f = std::make_shared<FieldInfo>();
  f->n = n;
  f->phi = nt::euler_phi(n);
  for (long p : nt::prime_factors(n)) {
    Component c;
    c.p = p;
    c.q = 1;
    long t = n;
    while (t % p == 0) {
      t /= p;
      c.q *= p;
      ++c.a;
    }
    c.top = c.q / p;
    c.cof = n / c.q;
    c.cofinv = c.q == 1 ? 0 : nt::inv_mod(c.cof % c.q, c.q);
    f->comps.push_back(c);
  }
  return f;
}

const FieldInfo& info(long n) {
  if (n > kMaxConductor) throw ResourceLimit("cyclotomic conductor " + std::to_string(n) + " exceeds limit");
  static std::mutex mu;
  static std::map<long, std::shared_ptr<const FieldInfo>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_info(n)).first;
  return *it->second;
}

using TermMap = std::map<long, mpq_class>;

// Adds c * zeta_n^E, rewritten in the basis, to acc.
void add_expanded(const FieldInfo& f, long E, const mpq_class& c, TermMap& acc) {
  if (f.n == 1) {
    acc[0] += c;
    return;
  }
  auto e = f.split(E);
  std::vector<std::vector<std::pair<long, int>>> parts(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    const auto& comp = f.comps[i];
    if (comp.p == 2) {
      if (e[i] >= comp.q / 2)
        parts[i] = {{e[i] - comp.q / 2, -1}};
      else
        parts[i] = {{e[i], 1}};
    } else if (e[i] < comp.top) {
      for (long k = 1; k < comp.p; ++k) parts[i].emplace_back(e[i] + k * comp.top, -1);
    } else {
      parts[i] = {{e[i], 1}};
    }
  }
  // Cartesian product of the per-component expansions.
  std::vector<std::size_t> idx(e.size(), 0);
  std::vector<long> pick(e.size());
  while (true) {
    int sign = 1;
    for (std::size_t i = 0; i < e.size(); ++i) {
      pick[i] = parts[i][idx[i]].first;
      sign *= parts[i][idx[i]].second;
    }
    long key = f.join(pick);
    if (sign > 0)
      acc[key] += c;
    else
      acc[key] -= c;
    std::size_t i = 0;
    while (i < e.size() && ++idx[i] == parts[i].size()) idx[i++] = 0;
    if (i == e.size()) break;
  }
}

void drop_zeros(TermMap& m) {
  for (auto it = m.begin(); it != m.end();) it = sgn(it->second) == 0 ? m.erase(it) : std::next(it);
}

// Terms of z re-expressed in the basis of Q(zeta_N); conductor(z) | N.
TermMap lift(const Cyclotomic& z, long N) {
  const auto& f = info(N);
  TermMap acc;
  long step = N / z.conductor();
  for (const auto& [e, c] : z.terms()) add_expanded(f, e * step, c.raw(), acc);
  drop_zeros(acc);
  return acc;
}

TermMap mul_in(const FieldInfo& f, const TermMap& a, const TermMap& b) {
  TermMap raw;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) raw[(ea + eb) % f.n] += ca * cb;
  TermMap out;
  for (const auto& [e, c] : raw)
    if (sgn(c) != 0) add_expanded(f, e, c, out);
  drop_zeros(out);
  return out;
}

TermMap galois_in(const FieldInfo& f, const TermMap& a, long k) {
  TermMap out;
  for (const auto& [e, c] : a) add_expanded(f, nt::mod(e * k, f.n), c, out);
  drop_zeros(out);
  return out;
}

long ramanujan(long n, long e) {
  long g = std::gcd(e, n);
  if (g == 0) g = n;
  long q = n / g;
  return nt::mobius(q) * (nt::euler_phi(n) / nt::euler_phi(q));
}

struct SplitTerm {
  std::vector<long> e;  // component exponents, aligned with the current primes
  mpq_class c;
};

}  // namespace

Cyclotomic::Cyclotomic(const Rational& r) {
  if (!r.is_zero()) terms_.emplace_back(0, r);
}

Cyclotomic Cyclotomic::from_dense(long n, std::vector<mpq_class> coeffs) {
  // Entry e is the coefficient of zeta_n^e (any exponent, not just basis ones).
  std::vector<std::pair<long, Rational>> raw;
  for (std::size_t e = 0; e < coeffs.size(); ++e)
    if (sgn(coeffs[e]) != 0) raw.emplace_back(static_cast<long>(e), Rational(coeffs[e]));
  return make(n, raw);
}

namespace {

// Conductor minimization on a term map that is already in the basis of n.
Cyclotomic finish(long n, TermMap acc);

}  // namespace

class CyclotomicBuilder {
 public:
  static Cyclotomic build(long n, const TermMap& acc) {
    Cyclotomic z;
    z.conductor_ = acc.empty() ? 1 : n;
    for (const auto& [e, c] : acc) z.terms_.emplace_back(static_cast<int>(e), Rational(c));
    return z;
  }
};

namespace {

Cyclotomic finish(long n, TermMap acc) {
  drop_zeros(acc);
  if (acc.empty()) return CyclotomicBuilder::build(1, acc);
  if (n == 1) return CyclotomicBuilder::build(1, acc);
  const auto& f = info(n);
  struct Prime {
    long p;
    int a;
  };
  std::vector<Prime> primes;
  for (const auto& c : f.comps) primes.push_back({c.p, c.a});
  std::vector<SplitTerm> terms;
  for (const auto& [e, c] : acc) terms.push_back({f.split(e), c});

  // q = prime power at component i for the current exponent layout.
  auto qof = [&](std::size_t i) {
    long q = 1;
    for (int k = 0; k < primes[i].a; ++k) q *= primes[i].p;
    return q;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      long p = primes[i].p;
      int a = primes[i].a;
      if (a >= 2 && !(p == 2 && a == 2)) {
        bool ok = true;
        for (const auto& t : terms)
          if (t.e[i] % p != 0) {
            ok = false;
            break;
          }
        if (!ok) continue;
        for (auto& t : terms) t.e[i] /= p;
        primes[i].a -= 1;
        changed = true;
      } else if (p == 2) {  // q = 4, subfield Q
        bool ok = true;
        for (const auto& t : terms)
          if (t.e[i] != 0) {
            ok = false;
            break;
          }
        if (!ok) continue;
        for (auto& t : terms) t.e.erase(t.e.begin() + static_cast<long>(i));
        primes.erase(primes.begin() + static_cast<long>(i));
        changed = true;
      } else {  // p || n, p odd
        std::map<std::vector<long>, std::vector<const SplitTerm*>> groups;
        for (const auto& t : terms) {
          auto key = t.e;
          key.erase(key.begin() + static_cast<long>(i));
          groups[key].push_back(&t);
        }
        bool ok = true;
        for (const auto& [key, g] : groups) {
          if (static_cast<long>(g.size()) != p - 1) {
            ok = false;
            break;
          }
          for (const auto* t : g)
            if (t->c != g.front()->c) {
              ok = false;
              break;
            }
          if (!ok) break;
        }
        if (!ok) continue;
        std::vector<SplitTerm> next;
        for (const auto& [key, g] : groups) next.push_back({key, -g.front()->c});
        terms = std::move(next);
        primes.erase(primes.begin() + static_cast<long>(i));
        changed = true;
      }
      if (changed) break;
    }
  }

  long m = 1;
  for (std::size_t i = 0; i < primes.size(); ++i) m *= qof(i);
  const auto& g = info(m);
  TermMap out;
  for (const auto& t : terms) out[m == 1 ? 0 : g.join(t.e)] += t.c;
  drop_zeros(out);
  return CyclotomicBuilder::build(m, out);
}

}  // namespace

Cyclotomic Cyclotomic::make(long conductor, const std::vector<std::pair<long, Rational>>& raw_terms) {
  if (conductor <= 0) throw InvalidArgument("cyclotomic conductor must be positive");
  long n = conductor;
  std::vector<std::pair<long, Rational>> terms = raw_terms;
  if (n % 4 == 2) {
    // zeta_{2k} = -zeta_k^((k+1)/2) for odd k
    long k = n / 2;
    for (auto& [e, c] : terms) {
      long ee = nt::mod(e, n);
      if (ee % 2 == 1) c = -c;
      e = nt::mod(ee * ((k + 1) / 2), k);
    }
    n = k;
  }
  const auto& f = info(n);
  TermMap acc;
  for (const auto& [e, c] : terms)
    if (!c.is_zero()) add_expanded(f, nt::mod(e, n), c.raw(), acc);
  return finish(n, std::move(acc));
}

Cyclotomic Cyclotomic::root_of_unity(long n, long e) { return make(n, {{e, Rational(1)}}); }

std::optional<Rational> Cyclotomic::as_rational() const {
  if (conductor_ != 1) return std::nullopt;
  return terms_.empty() ? Rational(0) : terms_[0].second;
}

std::vector<Cyclotomic::Term> Cyclotomic::terms_in(long n) const {
  n = nt::normalize_conductor(n);
  if (n % conductor_ != 0) throw InvalidArgument("field Q(zeta_" + std::to_string(n) + ") does not contain value");
  std::vector<Term> out;
  for (const auto& [e, c] : lift(*this, n)) out.emplace_back(static_cast<int>(e), Rational(c));
  return out;
}

Cyclotomic Cyclotomic::galois(long k) const {
  if (conductor_ == 1) return *this;
  if (std::gcd(nt::mod(k, conductor_), conductor_) != 1)
    throw InvalidArgument("galois: exponent not coprime to conductor");
  const auto& f = info(conductor_);
  TermMap a;
  for (const auto& [e, c] : terms_) a[e] = c.raw();
  // Conjugates keep the conductor, so no minimization is needed.
  return CyclotomicBuilder::build(conductor_, galois_in(f, a, k));
}

Rational Cyclotomic::trace() const {
  Rational s;
  for (const auto& [e, c] : terms_) s += c * Rational(ramanujan(conductor_, e));
  return s;
}

Rational Cyclotomic::trace_over(long fld) const {
  long m = nt::normalize_conductor(fld);
  if (m % conductor_ != 0) throw InvalidArgument("trace_over: value not in Q(zeta_" + std::to_string(fld) + ")");
  return trace() * Rational(nt::euler_phi(m) / nt::euler_phi(conductor_));
}

Rational Cyclotomic::rational_part() const { return trace() / Rational(nt::euler_phi(conductor_)); }

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("Cyclotomic: inverse of zero");
  if (conductor_ == 1) return Cyclotomic(terms_[0].second.inverse());
  const auto& f = info(conductor_);
  TermMap self;
  for (const auto& [e, c] : terms_) self[e] = c.raw();
  TermMap prod;
  add_expanded(f, 0, 1, prod);
  for (long k = 2; k < conductor_; ++k) {
    if (std::gcd(k, conductor_) != 1) continue;
    prod = mul_in(f, prod, galois_in(f, self, k));
  }
  // self * prod is the norm, a rational; read it off via the trace.
  Cyclotomic norm = finish(conductor_, mul_in(f, prod, self));
  auto r = norm.as_rational();
  if (!r) throw InvalidState("Cyclotomic: norm is not rational");
  mpq_class inv = 1 / r->raw();
  for (auto& [e, c] : prod) c *= inv;
  return finish(conductor_, std::move(prod));
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic z = *this;
  for (auto& t : z.terms_) t.second = -t.second;
  return z;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (conductor_ == 1 && rhs.conductor_ == 1) return *this = Cyclotomic(terms_[0].second + rhs.terms_[0].second);
  long n = nt::lcm(conductor_, rhs.conductor_);
  if (n == conductor_ && n == rhs.conductor_) {
    TermMap acc;
    for (const auto& [e, c] : terms_) acc[e] += c.raw();
    for (const auto& [e, c] : rhs.terms_) acc[e] += c.raw();
    return *this = finish(n, std::move(acc));
  }
  TermMap a = lift(*this, n);
  for (const auto& [e, c] : lift(rhs, n)) a[e] += c;
  return *this = finish(n, std::move(a));
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) { return *this += -rhs; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
  if (is_zero() || rhs.is_zero()) return *this = Cyclotomic();
  if (rhs.conductor_ == 1) {
    const Rational& c = rhs.terms_[0].second;
    for (auto& t : terms_) t.second *= c;
    return *this;
  }
  if (conductor_ == 1) {
    Rational c = terms_[0].second;
    *this = rhs;
    for (auto& t : terms_) t.second *= c;
    return *this;
  }
  long n = nt::lcm(conductor_, rhs.conductor_);
  const auto& f = info(n);
  return *this = finish(n, mul_in(f, lift(*this, n), lift(rhs, n)));
}

Cyclotomic Cyclotomic::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclotomic result(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ != b.conductor_) return a.conductor_ <=> b.conductor_;
  std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.terms_[i].first != b.terms_[i].first) return a.terms_[i].first <=> b.terms_[i].first;
    if (auto c = a.terms_[i].second <=> b.terms_[i].second; c != 0) return c;
  }
  return a.terms_.size() <=> b.terms_.size();
}

std::string Cyclotomic::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string piece;
    if (e == 0) {
      piece = c.to_string();
    } else {
      std::string base = "E(" + std::to_string(conductor_) + ")";
      if (e > 1) base += "^" + std::to_string(e);
      if (c == Rational(1))
        piece = base;
      else if (c == Rational(-1))
        piece = "-" + base;
      else
        piece = c.to_string() + "*" + base;
    }
    if (!first && piece[0] != '-') os << '+';
    os << piece;
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& z) { return os << z.to_string(); }

}  // namespace sip
