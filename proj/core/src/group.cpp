#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "sip/error.hpp"
#include "sip/group/group.hpp"
#include "sip/numtheory.hpp"

namespace sip {

namespace {

struct PermHash {
  std::size_t operator()(const Perm& p) const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : p) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

Perm compose(const Perm& a, const Perm& b) {
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = b[a[i]];
  return c;
}

long perm_order(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  long o = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    long len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = 1;
      ++len;
    }
    o = nt::lcm(o, len);
  }
  return o;
}

constexpr long kTableLimit = 1500;

}  // namespace

struct FiniteGroup::Index {
  std::unordered_map<Perm, int, PermHash> map;
};

FiniteGroup::FiniteGroup(std::vector<Perm> generators, std::string name) : name_(std::move(name)), index_(std::make_shared<Index>()) {
  degree_ = generators.empty() ? 1 : static_cast<int>(generators[0].size());
  if (degree_ == 0) degree_ = 1;
  for (auto& g : generators) {
    if (static_cast<int>(g.size()) != degree_) throw InvalidArgument("generators act on different point sets");
    std::vector<char> hit(g.size(), 0);
    for (auto x : g) {
      if (x >= g.size() || hit[x]) throw InvalidArgument("generator is not a permutation");
      hit[x] = 1;
    }
  }
  Perm id(degree_);
  std::iota(id.begin(), id.end(), 0u);
  elems_.push_back(id);
  index_->map.emplace(id, 0);
  for (std::size_t e = 0; e < elems_.size(); ++e) {
    for (const auto& g : generators) {
      Perm c = compose(elems_[e], g);
      if (index_->map.emplace(c, static_cast<int>(elems_.size())).second) {
        elems_.push_back(std::move(c));
        if (static_cast<long>(elems_.size()) > kMaxOrder) throw ResourceLimit("group closure exceeds " + std::to_string(kMaxOrder) + " elements");
      }
    }
  }
  for (const auto& g : generators) gens_.push_back(index_->map.at(g));

  long n = order();
  inv_.resize(n);
  ord_.resize(n);
  for (long i = 0; i < n; ++i) {
    Perm q(degree_);
    for (int j = 0; j < degree_; ++j) q[elems_[i][j]] = static_cast<std::uint32_t>(j);
    inv_[i] = index_->map.at(q);
    ord_[i] = static_cast<int>(perm_order(elems_[i]));
  }
  if (n <= kTableLimit) {
    table_.resize(n * n);
    for (long a = 0; a < n; ++a)
      for (long b = 0; b < n; ++b) table_[a * n + b] = compose_lookup(static_cast<int>(a), static_cast<int>(b));
  }
}

int FiniteGroup::compose_lookup(int a, int b) const { return index_->map.at(compose(elems_[a], elems_[b])); }

int FiniteGroup::mul(int a, int b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * elems_.size() + b];
  return compose_lookup(a, b);
}

int FiniteGroup::pow(int a, long k) const {
  long o = ord_[a];
  k = nt::mod(k, o);
  int r = 0, base = a;
  while (k) {
    if (k & 1) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

int FiniteGroup::index_of(const Perm& p) const {
  auto it = index_->map.find(p);
  return it == index_->map.end() ? -1 : it->second;
}

bool FiniteGroup::is_abelian() const {
  for (int a : gens_)
    for (int b : gens_)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

long FiniteGroup::exponent() const {
  long e = 1;
  for (int o : ord_) e = nt::lcm(e, o);
  return e;
}

// ---------------------------------------------------------------------------
// Construction from specs

namespace {

std::vector<int> letters(int gen, long count) { return std::vector<int>(static_cast<std::size_t>(std::abs(count)), count >= 0 ? gen : -gen); }

std::vector<int> cat(std::initializer_list<std::vector<int>> parts) {
  std::vector<int> w;
  for (const auto& p : parts) w.insert(w.end(), p.begin(), p.end());
  return w;
}

std::vector<Perm> cycle_perm(long n) {
  Perm p(n);
  for (long i = 0; i < n; ++i) p[i] = static_cast<std::uint32_t>((i + 1) % n);
  return {p};
}

void require_power_of_two(long n, long min, const char* what) {
  if (n < min || (n & (n - 1)) != 0) throw InvalidArgument(std::string(what) + " order must be a power of 2 that is at least " + std::to_string(min));
}

std::vector<Perm> build_perms(const GroupSpec& s);

std::vector<Perm> presentation_perms(int g, const std::vector<std::vector<int>>& rels) { return coset_enumerate(g, rels); }

// Generators of a direct product acting on disjoint point sets.
std::vector<Perm> product_perms(const std::vector<GroupSpec>& factors) {
  std::vector<std::vector<Perm>> parts;
  std::vector<int> degrees;
  int total = 0;
  for (const auto& f : factors) {
    auto gens = build_perms(f);
    int d = gens.empty() ? 1 : static_cast<int>(gens[0].size());
    parts.push_back(std::move(gens));
    degrees.push_back(d);
    total += d;
  }
  std::vector<Perm> out;
  int offset = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (const auto& g : parts[i]) {
      Perm p(total);
      std::iota(p.begin(), p.end(), 0u);
      for (int j = 0; j < degrees[i]; ++j) p[offset + j] = static_cast<std::uint32_t>(offset + g[j]);
      out.push_back(std::move(p));
    }
    offset += degrees[i];
  }
  if (out.empty()) out.push_back(Perm{0});
  return out;
}

std::vector<Perm> build_perms(const GroupSpec& s) {
  using K = GroupSpec::Kind;
  switch (s.kind) {
    case K::Cyclic:
      if (s.n < 1) throw InvalidArgument("cyclic group order must be positive");
      if (s.n > FiniteGroup::kMaxOrder) throw ResourceLimit("group order exceeds the closure bound");
      return cycle_perm(s.n);
    case K::Dihedral: {
      if (s.n < 2 || s.n % 2) throw InvalidArgument("dihedral group order must be even");
      long m = s.n / 2;
      return presentation_perms(2, {letters(1, m), letters(2, 2), cat({{2, 1}, {2, 1}})});
    }
    case K::Semidihedral: {
      require_power_of_two(s.n, 16, "semidihedral");
      long N = s.n / 2;
      long j = N / 2 - 1;
      return presentation_perms(2, {letters(1, N), letters(2, 2), cat({{-2, 1, 2}, letters(1, -j)})});
    }
    case K::Quaternion: {
      require_power_of_two(s.n, 8, "generalized quaternion");
      long N = s.n / 2;
      return presentation_perms(2, {letters(1, N), cat({letters(2, 2), letters(1, -(N / 2))}), {-2, 1, 2, 1}});
    }
    case K::ElemAbelian: {
      if (s.n < 2 || !nt::is_prime(s.n)) throw InvalidArgument("elementary abelian group needs a prime");
      if (s.rank < 0) throw InvalidArgument("rank must be non-negative");
      long order = 1;
      for (int i = 0; i < s.rank; ++i)
        if ((order *= s.n) > FiniteGroup::kMaxOrder) throw ResourceLimit("group order exceeds the closure bound");
      std::vector<GroupSpec> f(s.rank, GroupSpec::cyclic(s.n));
      return product_perms(f);
    }
    case K::DirectProduct:
      return product_perms(s.factors);
    case K::PermGroup:
      if (s.perms.empty()) return {Perm{0}};
      return s.perms;
    case K::Presentation:
      return presentation_perms(s.num_gens, s.relators);
    case K::Order16: {
      auto C = [](long n) { return GroupSpec::cyclic(n); };
      switch (s.n) {
        case 1: return build_perms(C(16));
        case 2: return product_perms({C(4), C(4)});
        case 3:  // (C4 x C2) : C2 with c a c = a b
          return presentation_perms(3, {letters(1, 4), letters(2, 2), letters(3, 2), {1, 2, -1, -2}, {2, 3, -2, -3}, {3, 1, 3, -2, -1}});
        case 4:  // C4 : C4
          return presentation_perms(2, {letters(1, 4), letters(2, 4), {2, 1, -2, 1}});
        case 5: return product_perms({C(8), C(2)});
        case 6:  // modular group of order 16
          return presentation_perms(2, {letters(1, 8), letters(2, 2), cat({{2, 1, 2}, letters(1, -5)})});
        case 7: return build_perms(GroupSpec::dihedral(16));
        case 8: return build_perms(GroupSpec::semidihedral(16));
        case 9: return build_perms(GroupSpec::quaternion(16));
        case 10: return product_perms({C(4), C(2), C(2)});
        case 11: return product_perms({C(2), GroupSpec::dihedral(8)});
        case 12: return product_perms({C(2), GroupSpec::quaternion(8)});
        case 13:  // central product C4 o D8
          return presentation_perms(3, {letters(1, 4), letters(2, 2), letters(3, 2), {1, 2, -1, -2}, {1, 3, -1, -3}, {3, 2, 3, -2, -1, -1}});
        case 14: return build_perms(GroupSpec::elem_abelian(2, 4));
        default: throw InvalidArgument("order-16 catalogue ids run from 1 to 14");
      }
    }
  }
  throw InvalidArgument("unknown group kind");
}

}  // namespace

FiniteGroup group_build(const GroupSpec& spec) {
  FiniteGroup G(build_perms(spec), spec.label.empty() ? spec.to_string() : spec.label);
  long want = spec.declared_order();
  if (want && G.order() != want)
    throw InvalidState("group " + spec.to_string() + " has order " + std::to_string(G.order()) + ", expected " + std::to_string(want));
  return G;
}

}  // namespace sip
