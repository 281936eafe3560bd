#include <algorithm>

#include "sip/error.hpp"
#include "sip/group/group.hpp"
#include "sip/numtheory.hpp"

namespace sip {

const std::vector<int>* ConjClassPartition::power_map(long p) const {
  for (const auto& [q, map] : power_maps)
    if (q == p) return &map;
  return nullptr;
}

int ConjClassPartition::power_class(const FiniteGroup& G, int c, long k) const {
  return class_of[G.pow(classes[c].rep, k)];
}

namespace {

std::string class_letters(int i) {
  std::string s;
  do {
    s.insert(s.begin(), static_cast<char>('a' + i % 26));
    i = i / 26 - 1;
  } while (i >= 0);
  return s;
}

}  // namespace

ConjClassPartition conjugacy_classes(const FiniteGroup& G) {
  long n = G.order();
  std::vector<int> orbit_id(n, -1);
  std::vector<std::vector<int>> orbits;
  for (int x = 0; x < n; ++x) {
    if (orbit_id[x] >= 0) continue;
    int id = static_cast<int>(orbits.size());
    std::vector<int> orb{x};
    orbit_id[x] = id;
    for (std::size_t i = 0; i < orb.size(); ++i)
      for (int g : G.generators()) {
        int y = G.mul(G.mul(G.inv(g), orb[i]), g);
        if (orbit_id[y] < 0) {
          orbit_id[y] = id;
          orb.push_back(y);
        }
      }
    std::sort(orb.begin(), orb.end());
    orbits.push_back(std::move(orb));
  }
  std::vector<int> perm(orbits.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    int oa = G.elem_order(orbits[a][0]), ob = G.elem_order(orbits[b][0]);
    if (oa != ob) return oa < ob;
    return orbits[a][0] < orbits[b][0];
  });

  ConjClassPartition out;
  out.class_of.assign(n, -1);
  int prev_order = -1, letter = 0;
  for (int idx : perm) {
    ConjClass c;
    c.members = orbits[idx];
    c.rep = c.members[0];
    c.size = static_cast<long>(c.members.size());
    c.rep_order = G.elem_order(c.rep);
    letter = (c.rep_order == prev_order) ? letter + 1 : 0;
    prev_order = c.rep_order;
    c.name = std::to_string(c.rep_order) + class_letters(letter);
    for (int x : c.members) out.class_of[x] = static_cast<int>(out.classes.size());
    out.classes.push_back(std::move(c));
  }

  long e = G.exponent();
  for (long p = 2; p <= std::max(2L, e); ++p) {
    if (!nt::is_prime(p)) continue;
    std::vector<int> map(out.classes.size());
    for (std::size_t c = 0; c < out.classes.size(); ++c) map[c] = out.class_of[G.pow(out.classes[c].rep, p)];
    out.power_maps.emplace_back(p, std::move(map));
  }
  return out;
}

std::optional<std::pair<int, int>> contains_c4xc2(const FiniteGroup& G) {
  long n = G.order();
  for (int x = 0; x < n; ++x) {
    if (G.elem_order(x) != 4) continue;
    int x2 = G.mul(x, x);  // the only involution in <x>
    for (int y = 0; y < n; ++y) {
      if (G.elem_order(y) != 2 || y == x2) continue;
      if (G.mul(x, y) == G.mul(y, x)) return std::make_pair(x, y);
    }
  }
  return std::nullopt;
}

std::vector<int> embedding_map(const FiniteGroup& G, const FiniteGroup& H, const std::vector<int>& images) {
  const auto& hg = H.generators();
  if (images.size() != hg.size()) throw InvalidArgument("embedding needs one image per generator");
  std::vector<int> phi(H.order(), -1);
  phi[0] = 0;
  std::vector<int> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    int t = queue[i];
    for (std::size_t k = 0; k < hg.size(); ++k) {
      int t2 = H.mul(t, hg[k]);
      int img = G.mul(phi[t], images[k]);
      if (phi[t2] < 0) {
        phi[t2] = img;
        queue.push_back(t2);
      } else if (phi[t2] != img) {
        return {};
      }
    }
  }
  return phi;
}

namespace {

bool injective(const std::vector<int>& phi, long n) {
  std::vector<char> hit(n, 0);
  for (int x : phi) {
    if (x < 0 || hit[x]) return false;
    hit[x] = 1;
  }
  return true;
}

}  // namespace

std::optional<std::vector<int>> find_embedding_of(const FiniteGroup& G, const FiniteGroup& H) {
  if (G.order() % H.order() != 0) return std::nullopt;
  const auto& hg = H.generators();
  std::vector<std::vector<int>> cand(hg.size());
  for (std::size_t k = 0; k < hg.size(); ++k)
    for (int x = 0; x < G.order(); ++x)
      if (G.elem_order(x) == H.elem_order(hg[k])) cand[k].push_back(x);
  std::vector<int> images(hg.size());
  std::optional<std::vector<int>> found;
  auto rec = [&](auto&& self, std::size_t k) -> bool {
    if (k == hg.size()) {
      auto phi = embedding_map(G, H, images);
      if (!phi.empty() && injective(phi, G.order())) {
        found = images;
        return true;
      }
      return false;
    }
    for (int x : cand[k]) {
      // Generators that commute in H must have commuting images.
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j)
        if (H.mul(hg[j], hg[k]) == H.mul(hg[k], hg[j])) ok = G.mul(images[j], x) == G.mul(x, images[j]);
      if (!ok) continue;
      images[k] = x;
      if (self(self, k + 1)) return true;
    }
    return false;
  };
  rec(rec, 0);
  return found;
}

std::optional<std::vector<int>> find_embedding(const FiniteGroup& G, const GroupSpec& target) {
  static const std::vector<std::string> allowed = {"c4xc2", "e2^3", "c2xc2xc2", "q8", "d8", "e2^2", "c2xc2"};
  std::string t = target.to_string();
  if (std::find(allowed.begin(), allowed.end(), t) == allowed.end())
    throw InvalidArgument("unsupported embedding target '" + t + "'; use c4xc2, e2^3, q8, d8 or e2^2");
  return find_embedding_of(G, group_build(target));
}

std::string to_string(TwoGroupKind k) {
  switch (k) {
    case TwoGroupKind::ElemAbelian: return "elem_abelian";
    case TwoGroupKind::Cyclic: return "cyclic";
    case TwoGroupKind::Quaternion: return "quaternion";
    case TwoGroupKind::Dihedral: return "dihedral";
    case TwoGroupKind::Semidihedral: return "semidihedral";
    case TwoGroupKind::Other: return "other";
  }
  return "?";
}

TwoGroupKind classify_2group(const FiniteGroup& P) {
  long n = P.order();
  if (n < 1 || (n & (n - 1)) != 0) throw InvalidArgument("classify_2group needs a 2-group, got order " + std::to_string(n));
  for (int x = 0; x < n; ++x)
    if (P.elem_order(x) == n) return TwoGroupKind::Cyclic;
  if (P.exponent() == 2) return TwoGroupKind::ElemAbelian;
  long N = n / 2;
  int h = -1;
  for (int x = 0; x < n && h < 0; ++x)
    if (P.elem_order(x) == N) h = x;
  if (h < 0 || N < 4) return TwoGroupKind::Other;
  std::vector<char> in_h(n, 0);
  std::vector<int> hpow(N);
  for (long i = 0, y = 0; i < N; ++i, y = P.mul(static_cast<int>(y), h)) {
    in_h[y] = 1;
    hpow[i] = static_cast<int>(y);
  }
  int a = -1;
  bool outside_involution = false;
  for (int x = 0; x < n; ++x) {
    if (in_h[x]) continue;
    if (a < 0) a = x;
    if (P.elem_order(x) == 2) outside_involution = true;
  }
  int conj = P.mul(P.mul(P.inv(a), h), a);
  long j = std::find(hpow.begin(), hpow.end(), conj) - hpow.begin();
  if (j == N - 1) return outside_involution ? TwoGroupKind::Dihedral : TwoGroupKind::Quaternion;
  if (N >= 8 && j == N / 2 - 1 && outside_involution) return TwoGroupKind::Semidihedral;
  return TwoGroupKind::Other;
}

LemmaReport verify_lemma_2groups(long max_order) {
  if (max_order < 2 || max_order > 64 || (max_order & (max_order - 1)) != 0)
    throw InvalidArgument("max order must be a power of 2 between 2 and 64");
  std::vector<GroupSpec> specs;
  for (long n = 2; n <= max_order; n *= 2) {
    int k = 0;
    while ((1L << k) < n) ++k;
    specs.push_back(GroupSpec::cyclic(n));
    if (k >= 2) specs.push_back(GroupSpec::elem_abelian(2, k));
    if (n >= 8) {
      specs.push_back(GroupSpec::dihedral(n));
      specs.push_back(GroupSpec::quaternion(n));
    }
    if (n >= 16) specs.push_back(GroupSpec::semidihedral(n));
    // Products outside the five families, to exercise the other direction.
    if (n >= 8) {
      specs.push_back(GroupSpec::direct_product({GroupSpec::cyclic(2), GroupSpec::cyclic(n / 2)}));
      specs.push_back(GroupSpec::direct_product({GroupSpec::cyclic(2), GroupSpec::dihedral(n / 2)}));
    }
    if (n >= 16) specs.push_back(GroupSpec::direct_product({GroupSpec::cyclic(2), GroupSpec::quaternion(n / 2)}));
    if (n >= 32) specs.push_back(GroupSpec::direct_product({GroupSpec::cyclic(2), GroupSpec::semidihedral(n / 2)}));
    if (n == 16)
      for (int id = 1; id <= 14; ++id) specs.push_back(GroupSpec::order16(id));
  }
  LemmaReport rep;
  rep.max_order = max_order;
  for (const auto& s : specs) {
    FiniteGroup G = group_build(s);
    LemmaEntry e;
    e.group = s.label.empty() ? s.to_string() : s.to_string() + " (" + s.label + ")";
    e.order = G.order();
    e.kind = classify_2group(G);
    e.has_c4xc2 = contains_c4xc2(G).has_value();
    e.consistent = e.has_c4xc2 == (e.kind == TwoGroupKind::Other);
    if (!e.consistent) rep.counterexamples.push_back(e.group);
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

}  // namespace sip
