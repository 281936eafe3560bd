#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "sip/error.hpp"
#include "sip/modhelp/modhelp.hpp"

namespace sip {

TargetGroup TargetGroup::make(const GroupSpec& spec) {
  TargetGroup U{spec, group_build(spec), {}, {}};
  U.classes = conjugacy_classes(U.group);
  U.table = dixon_table(U.group);
  return U;
}

std::string Assignment::to_string(const TargetGroup& U, const CharacterTable& host) const {
  std::ostringstream os;
  for (std::size_t c = 0; c < eps.size(); ++c) {
    if (c) os << "; ";
    os << U.classes.classes[c].name << " -> ";
    if (auto x = eps[c].indicator_class()) {
      os << host.classes[*x].name;
      continue;
    }
    std::vector<int> shown;
    for (int x = 0; x < host.num_classes(); ++x)
      if (eps[c][x] != 0) shown.push_back(x);
    os << eps[c].to_string(host, shown);
  }
  return os.str();
}

std::string to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::NotNonNegativeInteger: return "not a non-negative integer";
    case WitnessKind::OddMultiplicity: return "odd multiplicity";
    case WitnessKind::NoCommonM: return "no common odd m";
  }
  return "?";
}

namespace {

Verdict part_verdict(const Witness& p, const MMode& mode) {
  return p.kind == WitnessKind::OddMultiplicity ? even_integer_in_mode(p.numerator, p.denominator, mode)
                                                : nonneg_integer_in_mode(p.numerator, p.denominator, mode);
}

// Some odd m satisfying every part (an odd-multiplicity part asks for an
// even integer; every part also asks for a non-negative integer).
std::optional<BigInt> common_m(const std::vector<Witness>& parts) {
  bool irrational = std::any_of(parts.begin(), parts.end(), [](const Witness& p) { return !p.numerator.is_rational(); });
  if (irrational) {
    // A non-rational numerator is rational for at most one m.
    for (const auto& p : parts) {
      if (p.numerator.is_rational()) continue;
      Verdict v = part_verdict(p, MMode::symbolic());
      if (!v.holds_at) return std::nullopt;
      MMode at = MMode::fixed(v.holds_at->get_si());
      bool all = std::none_of(parts.begin(), parts.end(), [&](const Witness& q) {
        return part_verdict(q, at).never() || nonneg_integer_in_mode(q.numerator, q.denominator, at).never();
      });
      return all ? v.holds_at : std::nullopt;
    }
  }
  std::vector<OddCondition> conds;
  for (const auto& p : parts)
    conds.push_back({*p.numerator.as_odd_affine(), p.denominator, true, p.kind == WitnessKind::OddMultiplicity});
  return common_odd_m(conds);
}

}  // namespace

bool Witness::violated(const MMode& mode) const {
  switch (kind) {
    case WitnessKind::NotNonNegativeInteger: return nonneg_integer_in_mode(numerator, denominator, mode).never();
    case WitnessKind::OddMultiplicity: return even_integer_in_mode(numerator, denominator, mode).never();
    case WitnessKind::NoCommonM:
      if (!mode.is_symbolic())
        return std::any_of(parts.begin(), parts.end(), [&](const Witness& p) { return p.violated(mode); });
      return !common_m(parts).has_value();
  }
  return false;
}

std::string Witness::to_string() const {
  std::ostringstream os;
  if (kind == WitnessKind::NoCommonM) {
    os << "no common odd m for:";
    for (const auto& p : parts) os << "\n  " << p.to_string();
    return os.str();
  }
  os << "<" << host_row << ", " << target_row << "> = (" << numerator.to_string() << ")/" << denominator.get_str()
     << ": " << sip::to_string(kind);
  return os.str();
}

CharValue aggregated_value(const CharacterRow& chi, const EpsVector& eps) {
  if (eps.eps.size() != chi.values.size()) throw InvalidArgument("eps vector length differs from the row length");
  CharValue v;
  for (std::size_t x = 0; x < eps.eps.size(); ++x) {
    if (eps.eps[x] == 0) continue;
    if (!chi.defined_on(static_cast<int>(x)))
      throw InvalidArgument("row " + chi.name + " is not defined on a class in the support");
    v += CharValue(eps.eps[x]) * chi.at(static_cast<int>(x));
  }
  return v;
}

CharValue subgroup_multiplicity_numerator(const TargetGroup& U, const std::vector<CharValue>& chi_hat,
                                          const CharacterRow& psi) {
  if (chi_hat.size() != U.classes.classes.size()) throw InvalidArgument("chi_hat needs one value per class of U");
  CharValue num;
  for (std::size_t c = 0; c < chi_hat.size(); ++c)
    num += CharValue(U.classes.classes[c].size) * chi_hat[c] * psi.at(static_cast<int>(c)).conj();
  return num;
}

CharValue subgroup_multiplicity(const TargetGroup& U, const std::vector<CharValue>& chi_hat, const CharacterRow& psi) {
  return subgroup_multiplicity_numerator(U, chi_hat, psi) / Cyclotomic(Rational(U.group.order()));
}

Verdict parity_filter(const CharacterRow& eta, const CharacterTable& target, const CharacterRow& psi,
                      const CharValue& multiplicity, const MMode& mode) {
  if (!eta.real_afforded) throw InvalidArgument("row " + eta.name + " is not flagged as afforded by a real representation");
  if (fs_indicator(target, psi) != -1) throw InvalidArgument("row " + psi.name + " does not have indicator -1");
  return even_integer_in_mode(multiplicity, 1, mode);
}

namespace {

struct RowInfo {
  const CharacterRow* row;
  std::size_t distinct;
};

// Rows used for U; explicit rows are validated, automatic ones filtered.
std::vector<const CharacterRow*> select_rows(const TargetGroup& U, const CharacterTable& host,
                                             const ModHelpOptions& opt) {
  const long n = U.group.order();
  std::vector<RowInfo> picked;
  auto distinct = [](const CharacterRow& r) {
    std::set<CharValue> s;
    for (const auto& v : r.values)
      if (v) s.insert(*v);
    return s.size();
  };
  if (opt.host_rows.empty()) {
    for (const auto& r : host.rows)
      if (r.admits_order(n)) picked.push_back({&r, distinct(r)});
  } else {
    for (const auto& name : opt.host_rows) {
      int i = host.row_index(name);
      if (i < 0) throw InvalidArgument("unknown host row " + name);
      const auto& r = host.rows[i];
      if (!r.admits_order(n))
        throw InvalidArgument("Brauer row " + name + " cannot be used for a subgroup of order " + std::to_string(n));
      picked.push_back({&r, distinct(r)});
    }
  }
  std::stable_sort(picked.begin(), picked.end(), [](const RowInfo& a, const RowInfo& b) { return a.distinct > b.distinct; });
  std::vector<const CharacterRow*> out;
  for (const auto& p : picked) out.push_back(p.row);
  return out;
}

// A row without a value somewhere in the support says nothing about it.
bool covers(const CharacterRow& chi, const EpsVector& e) {
  for (std::size_t x = 0; x < e.eps.size(); ++x)
    if (e.eps[x] != 0 && !chi.defined_on(static_cast<int>(x))) return false;
  return true;
}
bool covers(const CharacterRow& chi, const std::vector<EpsVector>& eps) {
  return std::all_of(eps.begin(), eps.end(), [&](const EpsVector& e) { return covers(chi, e); });
}

struct LeafResult {
  bool pass = false;
  std::optional<Witness> witness;
  std::optional<BigInt> m;  // set when only some m work
};

struct PsiInfo {
  const CharacterRow* row;
  bool quaternionic;
};

LeafResult check_leaf(const TargetGroup& U, const std::vector<const CharacterRow*>& rows,
                      const std::vector<PsiInfo>& psis, const Assignment& a, const MMode& mode) {
  const BigInt order(U.group.order());
  std::vector<Witness> pending;
  for (const auto* chi : rows) {
    if (!covers(*chi, a.eps)) continue;
    std::vector<CharValue> hat;
    hat.reserve(a.eps.size());
    for (const auto& e : a.eps) hat.push_back(aggregated_value(*chi, e));
    for (const auto& psi : psis) {
      Witness w;
      w.host_row = chi->name;
      w.target_row = psi.row->name;
      w.numerator = subgroup_multiplicity_numerator(U, hat, *psi.row);
      w.denominator = order;
      Verdict v = nonneg_integer_in_mode(w.numerator, order, mode);
      if (v.never()) {
        w.assignment = a;
        return {false, w, std::nullopt};
      }
      if (!v.always()) {
        pending.push_back(w);
      }
      if (chi->real_afforded && psi.quaternionic) {
        Witness e = w;
        e.kind = WitnessKind::OddMultiplicity;
        Verdict ev = even_integer_in_mode(w.numerator, order, mode);
        if (ev.never()) {
          e.assignment = a;
          return {false, e, std::nullopt};
        }
        if (!ev.always()) {
          pending.push_back(e);
        }
      }
    }
  }
  if (pending.empty()) return {true, std::nullopt, std::nullopt};
  if (auto m = common_m(pending)) return {true, std::nullopt, *m};
  Witness w;
  w.kind = WitnessKind::NoCommonM;
  w.assignment = a;
  w.parts = std::move(pending);
  return {false, w, std::nullopt};
}

// Trivial row first, so the plain average is the reported failure when it fails.
std::vector<PsiInfo> psi_info(const TargetGroup& U) {
  std::vector<PsiInfo> out;
  for (const auto& r : U.table.rows) out.push_back({&r, fs_indicator(U.table, r) == -1});
  auto trivial = [](const PsiInfo& p) {
    return std::all_of(p.row->values.begin(), p.row->values.end(), [](const auto& v) { return v && *v == CharValue(1); });
  };
  std::stable_partition(out.begin(), out.end(), trivial);
  return out;
}

}  // namespace

std::optional<Witness> evaluate_assignment(const TargetGroup& U, const CharacterTable& host, const Assignment& a,
                                           const ModHelpOptions& options) {
  if (a.eps.size() != U.classes.classes.size()) throw InvalidArgument("assignment needs one vector per class of U");
  auto rows = select_rows(U, host, options);
  LeafResult r = check_leaf(U, rows, psi_info(U), a, options.mode);
  return r.witness;
}

namespace {

long gcd_l(long a, long b) { return std::gcd(a, b); }

struct Search {
  const TargetGroup& U;
  const CharacterTable& host;
  const ModHelpOptions& opt;
  std::vector<const CharacterRow*> rows;
  std::vector<PsiInfo> psis;
  std::vector<int> order;                          // U-classes, descending element order
  std::map<long, std::vector<EpsChain>> chains;    // deduplicated
  std::vector<bool> central_host;
  Certificate cert;
  long nodes = 0;
  bool stop = false;

  Search(const TargetGroup& u, const CharacterTable& h, const ModHelpOptions& o) : U(u), host(h), opt(o) {}

  int pow_class(int c, long k) const { return U.classes.power_class(U.group, c, k); }
  long ord(int c) const { return U.classes.classes[c].rep_order; }

  // Galois and central constraints between class x and every assigned class.
  bool consistent(const std::vector<std::optional<EpsVector>>& eps, int x) const {
    const EpsVector& ex = *eps[x];
    if (auto z = ex.indicator_class(); z && central_host[*z]) {
      if (U.classes.classes[x].size != 1) return false;
      for (std::size_t y = 0; y < eps.size(); ++y)
        if (static_cast<int>(y) != x && eps[y] && *eps[y] == ex) return false;
    }
    const long o = ord(x);
    for (long k = 2; k < o; ++k) {
      if (gcd_l(k, o) != 1) continue;
      int y = pow_class(x, k);
      if (y == x || !eps[y]) continue;
      for (const auto* chi : rows) {
        if (!covers(*chi, ex) || !covers(*chi, *eps[y])) continue;
        CharValue vx = aggregated_value(*chi, ex);
        CharValue vy = aggregated_value(*chi, *eps[y]);
        if (o % vx.conductor() != 0) continue;  // value outside Q(zeta_o): no usable relation
        if (vx.galois(k) != vy) return false;
      }
    }
    return true;
  }

  void dfs(std::size_t i, std::vector<std::optional<EpsVector>>& eps) {
    if (stop) return;
    if (++nodes > opt.branch_limit) throw ResourceLimit("subgroup search exceeded the branch limit");
    if (i == order.size()) {
      leaf(eps);
      return;
    }
    const int c = order[i];
    const long o = ord(c);
    for (const auto& chain : chains.at(o)) {
      std::vector<std::optional<EpsVector>> next = eps;
      std::vector<int> fresh;
      bool ok = true;
      for (const auto& [d, level] : chain.levels) {
        int cd = pow_class(c, d);
        if (next[cd]) {
          if (*next[cd] != level) {
            ok = false;
            break;
          }
        } else {
          next[cd] = level;
          fresh.push_back(cd);
        }
      }
      for (int x : fresh)
        if (ok && !consistent(next, x)) ok = false;
      if (ok) dfs(i + 1, next);
      if (stop) return;
    }
  }

  void leaf(const std::vector<std::optional<EpsVector>>& eps) {
    Assignment a;
    for (const auto& e : eps) a.eps.push_back(*e);
    ++cert.branches;
    LeafResult r = check_leaf(U, rows, psis, a, opt.mode);
    if (r.pass) {
      cert.assignments.push_back(std::move(a));
      cert.survivor_m.push_back(r.m);
      if (cert.assignments.size() >= opt.max_survivors) {
        cert.notes.push_back("stopped after " + std::to_string(opt.max_survivors) + " surviving assignments");
        stop = true;
      }
      return;
    }
    ++cert.rejected;
    if (r.witness && cert.witnesses.size() < opt.max_witnesses) cert.witnesses.push_back(std::move(*r.witness));
  }
};

}  // namespace

Certificate search_assignments(const TargetGroup& U, const CharacterTable& host,
                               const std::map<long, std::vector<EpsChain>>& per_order,
                               const ModHelpOptions& options) {
  Search s(U, host, options);
  s.rows = select_rows(U, host, options);
  s.psis = psi_info(U);
  if (s.rows.empty()) throw InvalidArgument("no host row can be used for a subgroup of order " + std::to_string(U.group.order()));

  const int nU = static_cast<int>(U.classes.classes.size());
  for (int c = 0; c < nU; ++c) {
    long o = s.ord(c);
    if (o == 1 || s.chains.count(o)) continue;
    auto it = per_order.find(o);
    if (it == per_order.end())
      throw InvalidState("no solved chains for element order " + std::to_string(o));
    auto& dst = s.chains[o];
    for (const auto& ch : it->second)
      if (std::find(dst.begin(), dst.end(), ch) == dst.end()) dst.push_back(ch);
  }

  s.central_host.assign(host.num_classes(), false);
  for (int x = 0; x < host.num_classes(); ++x) {
    if (host.classes[x].rep_order == 1) continue;
    auto sz = host.classes[x].size_int();
    if (sz && *sz == 1) s.central_host[x] = true;
  }
  for (const auto& name : options.central_classes) {
    int x = host.class_index(name);
    if (x < 0) throw InvalidArgument("unknown central class " + name);
    s.central_host[x] = true;
  }

  for (int c = 0; c < nU; ++c)
    if (s.ord(c) > 1) s.order.push_back(c);
  std::stable_sort(s.order.begin(), s.order.end(), [&](int a, int b) { return s.ord(a) > s.ord(b); });

  std::vector<std::optional<EpsVector>> eps(nU);
  for (int c = 0; c < nU; ++c)
    if (s.ord(c) == 1) eps[c] = EpsVector::indicator(host.num_classes(), host.identity_class());
  s.dfs(0, eps);

  s.cert.feasible = !s.cert.assignments.empty();
  return std::move(s.cert);
}

Assignment genuine_assignment(const TargetGroup& U, const FiniteGroup& G, const ConjClassPartition& Gclasses,
                              const std::vector<int>& image) {
  if (static_cast<long>(image.size()) != U.group.order()) throw InvalidArgument("image needs one entry per element of U");
  (void)G;
  Assignment a;
  const int k = static_cast<int>(Gclasses.classes.size());
  for (const auto& c : U.classes.classes) a.eps.push_back(EpsVector::indicator(k, Gclasses.class_of[image[c.rep]]));
  return a;
}

}  // namespace sip
