#include <algorithm>
#include <numeric>
#include <sstream>

#include "lp.hpp"
#include "sip/error.hpp"
#include "sip/help/help.hpp"
#include "sip/numtheory.hpp"

namespace sip {

long EpsVector::sum() const { return std::accumulate(eps.begin(), eps.end(), 0L); }

std::optional<int> EpsVector::indicator_class() const {
  std::optional<int> hit;
  for (std::size_t c = 0; c < eps.size(); ++c) {
    if (eps[c] == 0) continue;
    if (eps[c] != 1 || hit) return std::nullopt;
    hit = static_cast<int>(c);
  }
  return hit;
}

EpsVector EpsVector::indicator(int num_classes, int c) {
  EpsVector v;
  v.eps.assign(num_classes, 0);
  v.eps[c] = 1;
  return v;
}

std::string EpsVector::to_string(const CharacterTable& t, const std::vector<int>& classes) const {
  std::vector<int> cl = classes;
  if (cl.empty())
    for (int c = 0; c < static_cast<int>(eps.size()); ++c) cl.push_back(c);
  std::ostringstream names, vals;
  for (std::size_t i = 0; i < cl.size(); ++i) {
    names << (i ? ", " : "") << t.classes[cl[i]].name;
    vals << (i ? ", " : "") << eps[cl[i]];
  }
  return "(" + names.str() + ") = (" + vals.str() + ")";
}

bool SolutionSet::contains(const EpsChain& c) const {
  auto it = by_order.find(c.order);
  return it != by_order.end() && std::find(it->second.begin(), it->second.end(), c) != it->second.end();
}

std::optional<int> SolutionSet::below(const EpsChain& c, long p) const {
  if (c.order % p != 0) return std::nullopt;
  long o = c.order / p;
  auto it = by_order.find(o);
  if (it == by_order.end()) return std::nullopt;
  for (std::size_t i = 0; i < it->second.size(); ++i) {
    const auto& low = it->second[i];
    bool same = true;
    for (const auto& [d, v] : low.levels) {
      auto jt = c.levels.find(d * p);
      if (jt == c.levels.end() || !(jt->second == v)) {
        same = false;
        break;
      }
    }
    if (same) return static_cast<int>(i);
  }
  return std::nullopt;
}

namespace {

std::vector<bool> central_mask(const CharacterTable& t, const std::vector<std::string>& extra) {
  std::vector<bool> central(t.num_classes(), false);
  for (int c = 0; c < t.num_classes(); ++c) {
    auto s = t.classes[c].size_int();
    central[c] = s && *s == 1;
  }
  for (const auto& name : extra) {
    int c = t.class_index(name);
    if (c < 0) throw InvalidArgument("unknown central class " + name);
    central[c] = true;
  }
  return central;
}

std::vector<bool> forced_mask(long n, const CharacterTable& t, const std::vector<std::string>& extra) {
  std::vector<bool> forced(t.num_classes(), false);
  auto central = central_mask(t, extra);
  for (int c = 0; c < t.num_classes(); ++c) {
    long o = t.classes[c].rep_order;
    if (n == 1)
      forced[c] = o != 1;
    else
      forced[c] = n % o != 0 || central[c];
  }
  return forced;
}

Cyclotomic zeta_pow(long n, long e) { return Cyclotomic::root_of_unity(n, nt::mod(e, n)); }

OddAffine twisted_trace(const CharValue& v, long field, long e) {
  if (v.is_zero()) return OddAffine();
  return (v * CharValue(zeta_pow(field, e))).trace_over(field);
}

}  // namespace

std::set<std::string> forced_zero_classes(long n, const CharacterTable& t, const std::vector<std::string>& extra_central) {
  if (n < 1) throw InvalidArgument("unit order must be positive");
  auto mask = forced_mask(n, t, extra_central);
  std::set<std::string> out;
  for (int c = 0; c < t.num_classes(); ++c)
    if (mask[c]) out.insert(t.classes[c].name);
  return out;
}

CharForm unknown_value(const CharacterRow& row, const std::vector<int>& classes) {
  CharForm f;
  for (int c : classes) {
    if (!row.defined_on(c)) throw InvalidArgument("row " + row.name + " is not defined on a class in the support");
    f.coeffs[c] = row.at(c);
  }
  return f;
}

CharValue aggregate(const CharacterRow& row, const EpsVector& eps) {
  CharValue v;
  for (std::size_t c = 0; c < eps.eps.size(); ++c) {
    if (eps.eps[c] == 0) continue;
    if (!row.defined_on(static_cast<int>(c)))
      throw InvalidArgument("row " + row.name + " is not defined on a class in the support");
    v += row.at(static_cast<int>(c)) * CharValue(eps.eps[c]);
  }
  return v;
}

MultiplicityForm lp_multiplicity(const std::map<long, CharForm>& chi_on_powers, long n, long l) {
  if (n < 1) throw InvalidArgument("unit order must be positive");
  auto divs = nt::divisors(n);
  if (chi_on_powers.size() != divs.size())
    throw InvalidArgument("chi(u^d) must be given for every divisor d of " + std::to_string(n));
  MultiplicityForm out;
  Rational inv_n(1, n);
  for (long d : divs) {
    auto it = chi_on_powers.find(d);
    if (it == chi_on_powers.end()) throw InvalidArgument("missing chi(u^" + std::to_string(d) + ")");
    long field = n / d;
    out.constant += twisted_trace(it->second.constant, field, -l) * inv_n;
    for (const auto& [c, v] : it->second.coeffs) {
      OddAffine t = twisted_trace(v, field, -l) * inv_n;
      if (!t.is_zero()) out.coeffs[c] += t;
    }
  }
  for (auto it = out.coeffs.begin(); it != out.coeffs.end();)
    it = it->second.is_zero() ? out.coeffs.erase(it) : std::next(it);
  return out;
}

std::vector<MultiplicityForm> row_multiplicities(const CharacterTable& t, const CharacterRow& row,
                                                 const std::map<long, EpsVector>& lower, long n,
                                                 const std::vector<int>& vars) {
  if (!row.admits_order(n))
    throw InvalidArgument("Brauer row " + row.name + " cannot be evaluated on units of order " + std::to_string(n));
  std::map<long, CharForm> pw;
  for (long d : nt::divisors(n)) {
    if (d == 1)
      pw[d] = unknown_value(row, vars);
    else if (d == n)
      pw[d].constant = row.at(t.identity_class());
    else {
      auto it = lower.find(d);
      if (it == lower.end()) throw InvalidArgument("missing eps(u^" + std::to_string(d) + ")");
      pw[d].constant = aggregate(row, it->second);
    }
  }
  std::vector<MultiplicityForm> out;
  for (long l = 0; l < n; ++l) out.push_back(lp_multiplicity(pw, n, l));
  return out;
}

std::string Congruence::to_string(const CharacterTable& t) const {
  std::ostringstream os;
  for (std::size_t i = 0; i < classes.size(); ++i) os << (i ? " + " : "") << "eps_" << t.classes[classes[i]].name;
  os << " = " << residue << " mod " << modulus;
  return os.str();
}

CongruenceRules cl_congruences(long n, const CharacterTable& t) {
  CongruenceRules out;
  if (n == 1) return out;
  auto [p, k] = nt::prime_power(n);
  if (p == 0) {
    out.notice = "congruences skipped: " + std::to_string(n) + " is not a prime power";
    return out;
  }
  Congruence top{{}, p, 1};
  for (int c = 0; c < t.num_classes(); ++c) {
    long o = t.classes[c].rep_order;
    if (o == n)
      top.classes.push_back(c);
    else if (o > 1 && n % o == 0)
      out.rules.push_back({{c}, p, 0});
  }
  out.rules.insert(out.rules.begin(), top);
  return out;
}

bool is_trivial_chain(const EpsChain& chain) {
  for (const auto& [d, v] : chain.levels)
    if (!v.is_indicator()) return false;
  return !chain.levels.empty();
}

EpsChain genuine_chain(const CharacterTable& t, int c) {
  EpsChain ch;
  ch.order = t.classes.at(c).rep_order;
  for (long d : nt::divisors(ch.order)) {
    auto pc = t.power_class(c, d);
    if (!pc) throw InvalidState("power map missing for class " + t.classes[c].name);
    ch.levels[d] = EpsVector::indicator(t.num_classes(), *pc);
  }
  return ch;
}

namespace {

__extension__ typedef __int128 i128;

// A multiplicity form scaled to integers: value = (A + B m) / den with
// A = a[0] + sum a[j+1] x_j, likewise B, over the level's variables.
struct IntForm {
  std::vector<long> a, b;
  long den = 1;
  std::string label;
};

struct Level {
  long n = 1;
  const CharacterTable* t = nullptr;
  std::vector<int> vars;
  std::vector<const CharacterRow*> rows;
  // Per row and l: the eps coefficients of mu_l (independent of lower levels).
  std::vector<std::vector<std::vector<OddAffine>>> coeff;
  CongruenceRules cl;
  std::uint64_t node_limit = 0;
};

long to_long_checked(const BigInt& z) {
  if (!z.fits_slong_p()) throw ResourceLimit("multiplicity coefficient does not fit in 64 bits");
  return z.get_si();
}

IntForm scale(const OddAffine& constant, const std::vector<OddAffine>& coeffs, std::string label) {
  BigInt den = 1;
  auto acc = [&](const Rational& r) { den = lcm(den, r.denominator()); };
  acc(constant.constant());
  acc(constant.slope());
  for (const auto& c : coeffs) {
    acc(c.constant());
    acc(c.slope());
  }
  IntForm f;
  f.label = std::move(label);
  f.den = to_long_checked(den);
  Rational D(den, BigInt(1));
  auto num = [&](const Rational& r) { return to_long_checked((r * D).numerator()); };
  f.a.push_back(num(constant.constant()));
  f.b.push_back(num(constant.slope()));
  for (const auto& c : coeffs) {
    f.a.push_back(num(c.constant()));
    f.b.push_back(num(c.slope()));
  }
  return f;
}

long eval_int(const std::vector<long>& v, const std::vector<long>& x) {
  i128 s = v[0];
  for (std::size_t j = 0; j < x.size(); ++j) s += static_cast<i128>(v[j + 1]) * x[j];
  if (s > INT64_MAX || s < INT64_MIN) throw ResourceLimit("multiplicity value does not fit in 64 bits");
  return static_cast<long>(s);
}

struct Check {
  bool ok = false;
  bool conditional = false;
  std::optional<long> witness;
};

// Every form must be a non-negative integer for some common odd m (symbolic
// mode; fixed mode has b = 0 throughout).
Check check_forms(const std::vector<IntForm>& forms, const std::vector<long>& x) {
  std::vector<OddCondition> deps;
  for (const auto& f : forms) {
    long a = eval_int(f.a, x), b = eval_int(f.b, x);
    if (b == 0) {
      if (a < 0 || a % f.den != 0) return {};
      continue;
    }
    OddAffine v{Rational(a), Rational(b)};
    Verdict verdict = oddaffine_nonneg_integer(v, BigInt(f.den));
    if (verdict.never()) return {};
    if (!verdict.always()) deps.push_back({v, BigInt(f.den)});
  }
  if (deps.empty()) return {true, false, std::nullopt};
  auto m = common_odd_m(deps);
  if (!m) return {};
  return {true, true, to_long_checked(*m)};
}

bool check_cl(const CongruenceRules& cl, const std::vector<long>& full) {
  for (const auto& r : cl.rules) {
    long s = 0;
    for (int c : r.classes) s += full[c];
    if (nt::mod(s, r.modulus) != nt::mod(r.residue, r.modulus)) return false;
  }
  return true;
}

// Builds mu_l and chi(1) - mu_l for every admitted row with the given lower
// levels fixed.
std::vector<IntForm> level_forms(const Level& L, const std::map<long, EpsVector>& lower) {
  std::vector<IntForm> out;
  const auto& t = *L.t;
  int id = t.identity_class();
  for (std::size_t r = 0; r < L.rows.size(); ++r) {
    const auto& row = *L.rows[r];
    std::map<long, CharValue> known;
    for (long d : nt::divisors(L.n)) {
      if (d == 1) continue;
      if (d == L.n)
        known[d] = row.at(id);
      else
        known[d] = aggregate(row, lower.at(d));
    }
    OddAffine deg = row.at(id).trace_over(1);
    for (long l = 0; l < L.n; ++l) {
      OddAffine constant;
      for (const auto& [d, v] : known) constant += twisted_trace(v, L.n / d, -l) * Rational(1, L.n);
      const auto& co = L.coeff[r][l];
      std::string lbl = row.name + " mu_" + std::to_string(l);
      out.push_back(scale(constant, co, lbl));
      std::vector<OddAffine> neg;
      for (const auto& c : co) neg.push_back(-c);
      out.push_back(scale(deg - constant, neg, lbl + " <= " + row.name + "(1)"));
    }
  }
  return out;
}

// Integer inequalities sum c_j x_j <= rhs usable for bounds and propagation.
struct IntIneq {
  std::vector<long> c;
  long rhs = 0;
  friend bool operator<(const IntIneq& x, const IntIneq& y) { return std::tie(x.c, x.rhs) < std::tie(y.c, y.rhs); }
  friend bool operator==(const IntIneq& x, const IntIneq& y) { return x.c == y.c && x.rhs == y.rhs; }
};

std::vector<IntIneq> bounding_rows(const std::vector<IntForm>& forms, std::size_t k) {
  std::vector<IntIneq> out;
  auto push = [&](const std::vector<long>& v) {
    // v[0] + sum v[j+1] x_j >= 0
    IntIneq q;
    q.c.resize(k);
    long g = 0;
    for (std::size_t j = 0; j < k; ++j) {
      q.c[j] = -v[j + 1];
      g = std::gcd(g, std::labs(q.c[j]));
    }
    q.rhs = v[0];
    if (g == 0) return;  // constant, checked at the leaves
    for (auto& c : q.c) c /= g;
    // floor division keeps the integer hull
    q.rhs = q.rhs >= 0 ? q.rhs / g : -((-q.rhs + g - 1) / g);
    out.push_back(std::move(q));
  };
  for (const auto& f : forms) {
    bool a_zero = std::all_of(f.a.begin(), f.a.end(), [](long x) { return x == 0; });
    bool b_zero = std::all_of(f.b.begin(), f.b.end(), [](long x) { return x == 0; });
    if (b_zero)
      push(f.a);
    else if (a_zero)
      push(f.b);
    // mixed forms depend on m in a way that gives no m-free bound
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct Search {
  const Level& L;
  const std::vector<IntForm>& forms;
  std::vector<IntIneq> ineqs;           // over permuted positions
  std::vector<int> perm;                // position -> var index
  std::vector<long> lo, hi, step;
  std::vector<std::vector<long>> sufmin;  // [ineq][pos]
  std::vector<std::vector<int>> touching; // [pos] -> ineqs with nonzero coeff
  std::vector<long> partial;
  std::vector<long> x;                  // by var index
  std::uint64_t nodes = 0;
  std::vector<std::pair<std::vector<long>, Check>> found;

  void run() {
    std::size_t k = perm.size();
    sufmin.assign(ineqs.size(), std::vector<long>(k + 1, 0));
    touching.assign(k, {});
    for (std::size_t c = 0; c < ineqs.size(); ++c)
      for (std::size_t j = k; j-- > 0;) {
        long a = ineqs[c].c[j];
        sufmin[c][j] = sufmin[c][j + 1] + std::min(a * lo[j], a * hi[j]);
        if (a != 0) touching[j].push_back(static_cast<int>(c));
      }
    partial.assign(ineqs.size(), 0);
    x.assign(k, 0);
    dfs(0);
  }

  static long floor_div(long a, long b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); }
  static long ceil_div(long a, long b) { return -floor_div(-a, b); }

  void dfs(std::size_t j) {
    if (++nodes > L.node_limit) throw ResourceLimit("HeLP enumeration exceeded the node limit at order " + std::to_string(L.n));
    if (j == perm.size()) {
      leaf();
      return;
    }
    long a_lo = lo[j], a_hi = hi[j];
    for (int c : touching[j]) {
      long a = ineqs[c].c[j];
      long room = ineqs[c].rhs - partial[c] - sufmin[c][j + 1];
      if (a > 0)
        a_hi = std::min(a_hi, floor_div(room, a));
      else
        a_lo = std::max(a_lo, ceil_div(room, a));
      if (a_lo > a_hi) return;
    }
    long s = step[j];
    if (s > 1) a_lo = a_lo + nt::mod(-a_lo, s);
    for (long v = a_lo; v <= a_hi; v += s) {
      x[j] = v;
      for (int c : touching[j]) partial[c] += ineqs[c].c[j] * v;
      dfs(j + 1);
      for (int c : touching[j]) partial[c] -= ineqs[c].c[j] * v;
    }
  }

  void leaf() {
    std::vector<long> byvar(perm.size());
    for (std::size_t j = 0; j < perm.size(); ++j) byvar[perm[j]] = x[j];
    std::vector<long> full(L.t->num_classes(), 0);
    long total = 0;
    for (std::size_t i = 0; i < byvar.size(); ++i) {
      full[L.vars[i]] = byvar[i];
      total += byvar[i];
    }
    if (total != 1) return;
    if (!check_cl(L.cl, full)) return;
    Check ck = check_forms(forms, byvar);
    if (ck.ok) found.emplace_back(std::move(full), ck);
  }
};

std::string level_name(const Level& L) { return "order " + std::to_string(L.n); }

// Solutions with all partial augmentations on L.vars and the lower levels fixed.
std::vector<std::pair<std::vector<long>, Check>> solve_branch(const Level& L, const std::map<long, EpsVector>& lower) {
  const std::size_t k = L.vars.size();
  if (k == 0) return {};
  auto forms = level_forms(L, lower);
  auto rows = bounding_rows(forms, k);
  IntIneq sum_le{std::vector<long>(k, 1), 1}, sum_ge{std::vector<long>(k, -1), -1};
  rows.push_back(sum_le);
  rows.push_back(sum_ge);

  std::vector<detail::LinIneq> lp;
  for (const auto& r : rows) {
    detail::LinIneq q;
    for (long c : r.c) q.a.emplace_back(c);
    q.b = r.rhs;
    lp.push_back(std::move(q));
  }
  std::vector<long> lo(k), hi(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<mpq_class> obj(k, 0);
    obj[i] = 1;
    auto up = detail::lp_maximize(lp, obj);
    if (up.status == detail::LpStatus::Infeasible) return {};
    if (up.status == detail::LpStatus::Unbounded)
      throw Unbounded("HeLP system at " + level_name(L) + " does not bound eps_" + L.t->classes[L.vars[i]].name +
                      "; add character rows that are defined on units of this order");
    obj[i] = -1;
    auto down = detail::lp_maximize(lp, obj);
    if (down.status != detail::LpStatus::Optimal)
      throw Unbounded("HeLP system at " + level_name(L) + " does not bound eps_" + L.t->classes[L.vars[i]].name);
    mpz_class f, c;
    mpz_fdiv_q(f.get_mpz_t(), up.value.get_num_mpz_t(), up.value.get_den_mpz_t());
    mpq_class neg = -down.value;
    mpz_cdiv_q(c.get_mpz_t(), neg.get_num_mpz_t(), neg.get_den_mpz_t());
    hi[i] = to_long_checked(f);
    lo[i] = to_long_checked(c);
    if (lo[i] > hi[i]) return {};
  }

  std::vector<long> step(k, 1);
  for (const auto& r : L.cl.rules)
    if (r.residue == 0 && r.classes.size() == 1)
      for (std::size_t i = 0; i < k; ++i)
        if (L.vars[i] == r.classes[0]) step[i] = r.modulus;

  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) { return hi[a] - lo[a] < hi[b] - lo[b]; });
  Search s{L, forms, {}, perm, {}, {}, {}, {}, {}, {}, {}, 0, {}};
  for (std::size_t j = 0; j < k; ++j) {
    s.lo.push_back(lo[perm[j]]);
    s.hi.push_back(hi[perm[j]]);
    s.step.push_back(step[perm[j]]);
  }
  for (const auto& r : rows) {
    IntIneq q;
    q.rhs = r.rhs;
    for (std::size_t j = 0; j < k; ++j) q.c.push_back(r.c[perm[j]]);
    s.ineqs.push_back(std::move(q));
  }
  s.run();
  return std::move(s.found);
}

void build_coeffs(Level& L) {
  L.coeff.assign(L.rows.size(), {});
  for (std::size_t r = 0; r < L.rows.size(); ++r) {
    auto form = unknown_value(*L.rows[r], L.vars);
    for (long l = 0; l < L.n; ++l) {
      std::vector<OddAffine> co;
      for (int c : L.vars) co.push_back(twisted_trace(form.coeffs.at(c), L.n, -l) * Rational(1, L.n));
      L.coeff[r].push_back(std::move(co));
    }
  }
}

// Consistent choices of eps(u^d), d > 1, from the solutions for u^p.
void lower_combos(long n, const std::vector<long>& primes, std::size_t i, std::map<long, EpsVector>& acc,
                  const std::map<long, std::vector<EpsChain>>& by_order, std::vector<std::map<long, EpsVector>>& out) {
  if (i == primes.size()) {
    out.push_back(acc);
    return;
  }
  long p = primes[i];
  for (const auto& low : by_order.at(n / p)) {
    std::vector<long> added;
    bool ok = true;
    for (const auto& [d, v] : low.levels) {
      long key = d * p;
      auto it = acc.find(key);
      if (it != acc.end()) {
        if (!(it->second == v)) {
          ok = false;
          break;
        }
      } else {
        acc[key] = v;
        added.push_back(key);
      }
    }
    if (ok) lower_combos(n, primes, i + 1, acc, by_order, out);
    for (long key : added) acc.erase(key);
  }
}

}  // namespace

SolutionSet solve_eps(const HelpProblem& problem) {
  const long n = problem.order;
  const auto& opt = problem.options;
  if (n < 1) throw InvalidArgument("unit order must be positive");
  CharacterTable t = problem.table;
  if (t.num_classes() == 0) throw InvalidArgument("table has no classes");
  if (!opt.mode.is_symbolic())
    for (auto& row : t.rows)
      for (auto& v : row.values)
        if (v) v = apply_mode(*v, opt.mode);
  int id = t.identity_class();

  std::vector<const CharacterRow*> chosen;
  if (opt.use_lp_multiplicities) {
    if (opt.rows.empty()) {
      for (const auto& r : t.rows) chosen.push_back(&r);
    } else {
      for (const auto& name : opt.rows) {
        int ri = t.row_index(name);
        if (ri < 0) throw InvalidArgument("unknown row " + name);
        chosen.push_back(&t.rows[ri]);
      }
    }
  }
  auto central = central_mask(t, opt.central_classes);

  SolutionSet out;
  out.order = n;
  for (long d : nt::divisors(n)) {
    auto& sols = out.by_order[d];
    if (d == 1) {
      EpsChain c;
      c.order = 1;
      c.levels[1] = EpsVector::indicator(t.num_classes(), id);
      sols.push_back(std::move(c));
      continue;
    }
    for (long p : nt::prime_factors(d))
      for (int c = 0; c < t.num_classes(); ++c)
        if (d % t.classes[c].rep_order == 0 && !t.classes[c].power(p))
          throw InvalidState("table lacks the " + std::to_string(p) + "-power map on class " + t.classes[c].name);
    Level L;
    L.n = d;
    L.t = &t;
    L.node_limit = opt.node_limit;
    auto forced = forced_mask(d, t, opt.central_classes);
    for (int c = 0; c < t.num_classes(); ++c)
      if (!forced[c]) L.vars.push_back(c);
    for (const auto* r : chosen) {
      if (!r->admits_order(d)) continue;
      // Automatically chosen rows need a value on every class a power of u can hit.
      bool partial = false;
      for (int c = 0; c < t.num_classes(); ++c) partial |= d % t.classes[c].rep_order == 0 && !r->defined_on(c);
      if (partial && opt.rows.empty()) continue;
      L.rows.push_back(r);
    }
    if (opt.use_cl_congruences) {
      L.cl = cl_congruences(d, t);
      if (L.cl.notice) out.notices.push_back("order " + std::to_string(d) + ": " + *L.cl.notice);
    }
    build_coeffs(L);

    std::vector<std::map<long, EpsVector>> combos;
    std::map<long, EpsVector> acc;
    lower_combos(d, nt::prime_factors(d), 0, acc, out.by_order, combos);
    for (const auto& lower : combos) {
      for (auto& [full, ck] : solve_branch(L, lower)) {
        EpsChain ch;
        ch.order = d;
        ch.levels = lower;
        ch.levels[1] = EpsVector{std::move(full)};
        ch.conditional = ck.conditional;
        ch.witness_m = ck.witness;
        sols.push_back(std::move(ch));
      }
    }
    // u equal to a central element z of order d.
    for (int c = 0; c < t.num_classes(); ++c) {
      if (!central[c] || t.classes[c].rep_order != d) continue;
      EpsChain ch = genuine_chain(t, c);
      std::map<long, EpsVector> lower = ch.levels;
      lower.erase(1);
      bool listed = std::find(combos.begin(), combos.end(), lower) != combos.end();
      if (!listed) continue;
      Level Z = L;
      Z.vars = {c};
      build_coeffs(Z);
      auto forms = level_forms(Z, lower);
      Check ck = check_forms(forms, {1});
      if (!ck.ok) continue;
      ch.conditional = ck.conditional;
      ch.witness_m = ck.witness;
      sols.push_back(std::move(ch));
    }
    std::sort(sols.begin(), sols.end(), [](const EpsChain& a, const EpsChain& b) {
      if (a.top() != b.top()) return a.top() < b.top();
      return a.levels < b.levels;
    });
  }
  return out;
}

}  // namespace sip
