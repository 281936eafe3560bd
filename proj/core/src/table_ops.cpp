#include <algorithm>

#include "sip/chartab/table.hpp"
#include "sip/error.hpp"

namespace sip {

namespace {

struct NumericSizes {
  BigInt order;
  std::vector<BigInt> sizes;
};

NumericSizes numeric_sizes(const CharacterTable& t, const char* what) {
  NumericSizes out;
  auto o = t.order_int();
  if (!o) throw InvalidArgument(std::string(what) + " needs a numeric group order (table " + t.name + ")");
  out.order = *o;
  for (const auto& c : t.classes) {
    auto s = c.size_int();
    if (!s) throw InvalidArgument(std::string(what) + " needs numeric class sizes; class " + c.name + " of " + t.name + " has none");
    out.sizes.push_back(*s);
  }
  return out;
}

Cyclotomic numeric(const CharacterRow& row, int c, const char* what) {
  const auto& v = row.at(c);
  if (v.depends_on_m()) throw InvalidArgument(std::string(what) + " needs numeric values; " + row.name + " depends on m");
  return v.constant();
}

}  // namespace

int fs_indicator(const CharacterTable& t, const CharacterRow& row) {
  auto ns = numeric_sizes(t, "Frobenius-Schur indicator");
  Cyclotomic sum(0);
  for (int c = 0; c < t.num_classes(); ++c) {
    auto sq = t.power_class(c, 2);
    if (!sq) throw InvalidState("table " + t.name + " lacks the 2-power map at class " + t.classes[c].name);
    sum += Cyclotomic(Rational(ns.sizes[c], BigInt(1))) * numeric(row, *sq, "Frobenius-Schur indicator");
  }
  sum /= Cyclotomic(Rational(ns.order, BigInt(1)));
  auto r = sum.as_rational();
  if (!r || !r->is_integer()) throw InvalidState("indicator of " + row.name + " is not an integer: " + sum.to_string());
  return static_cast<int>(r->numerator().get_si());
}

CharacterRow induce_by_fusion(const CharacterTable& sub, const CharacterRow& row, const std::vector<int>& fusion,
                              const CharValue& index, const CharacterTable& host) {
  if (static_cast<int>(fusion.size()) != sub.num_classes())
    throw InvalidArgument("fusion map needs one entry per class of " + sub.name);
  CharacterRow out;
  out.name = row.name + "^" + host.name;
  out.kind = row.kind;
  out.brauer_p = row.brauer_p;
  out.values.assign(host.num_classes(), CharValue(0));
  for (int h = 0; h < host.num_classes(); ++h) {
    std::vector<int> fused;
    for (int c = 0; c < sub.num_classes(); ++c) {
      if (fusion[c] < 0 || fusion[c] >= host.num_classes()) throw InvalidArgument("fusion target out of range");
      if (fusion[c] == h) fused.push_back(c);
    }
    if (fused.empty()) continue;
    if (auto hs = host.classes[h].size_int()) {
      BigInt acc = 0;
      bool known = true;
      for (int c : fused) {
        auto s = sub.classes[c].size_int();
        if (!s) known = false;
        else acc += *s;
      }
      if (known && acc != *hs)
        throw InvalidArgument("fused classes of " + sub.name + " have total size " + acc.get_str() + " but host class " +
                              host.classes[h].name + " has size " + hs->get_str());
    }
    bool undefined = std::any_of(fused.begin(), fused.end(), [&](int c) { return !row.defined_on(c); });
    if (undefined) {
      out.values[h].reset();
      continue;
    }
    if (fused.size() == 1) {
      out.values[h] = index * *row.values[fused[0]];
      continue;
    }
    CharValue weighted(0);
    Cyclotomic total(0);
    for (int c : fused) {
      const auto& s = sub.classes[c].size;
      if (!s || s->depends_on_m())
        throw InvalidArgument("fusing several classes into " + host.classes[h].name + " needs numeric sizes in " + sub.name);
      weighted += *s * *row.values[c];
      total += s->constant();
    }
    out.values[h] = index * (weighted / total);
  }
  return out;
}

OrthogonalityReport check_orthogonality(const CharacterTable& t) {
  auto ns = numeric_sizes(t, "orthogonality check");
  int r = t.num_classes();
  int k = static_cast<int>(t.rows.size());
  std::vector<std::vector<Cyclotomic>> v(k, std::vector<Cyclotomic>(r));
  std::vector<std::vector<Cyclotomic>> vc(k, std::vector<Cyclotomic>(r));
  for (int i = 0; i < k; ++i)
    for (int c = 0; c < r; ++c) {
      v[i][c] = numeric(t.rows[i], c, "orthogonality check");
      vc[i][c] = v[i][c].conj();
    }
  std::vector<Cyclotomic> sz(r);
  for (int c = 0; c < r; ++c) sz[c] = Cyclotomic(Rational(ns.sizes[c], BigInt(1)));
  Cyclotomic order(Rational(ns.order, BigInt(1)));

  OrthogonalityReport rep;
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) {
      Cyclotomic s(0);
      for (int c = 0; c < r; ++c) s += sz[c] * v[i][c] * vc[j][c];
      Cyclotomic want = i == j ? order : Cyclotomic(0);
      if (!(s == want)) {
        rep.rows_ok = false;
        rep.failures.push_back("rows " + t.rows[i].name + ", " + t.rows[j].name + ": inner product " + s.to_string());
      }
    }
  if (k != r) {
    rep.columns_ok = false;
    rep.failures.push_back(std::to_string(k) + " rows for " + std::to_string(r) + " classes");
  } else {
    for (int a = 0; a < r; ++a)
      for (int b = a; b < r; ++b) {
        Cyclotomic s(0);
        for (int i = 0; i < k; ++i) s += v[i][a] * vc[i][b];
        Cyclotomic want = a == b ? order / sz[a] : Cyclotomic(0);
        if (!(s == want)) {
          rep.columns_ok = false;
          rep.failures.push_back("columns " + t.classes[a].name + ", " + t.classes[b].name + ": sum " + s.to_string());
        }
      }
  }
  int id = t.identity_class();
  Cyclotomic deg2(0);
  for (int i = 0; i < k; ++i) deg2 += v[i][id] * v[i][id];
  if (!(deg2 == order)) {
    rep.degrees_ok = false;
    rep.failures.push_back("squared degrees sum to " + deg2.to_string());
  }
  return rep;
}

bool tables_equivalent(const CharacterTable& a, const CharacterTable& b) {
  int r = a.num_classes();
  if (r != b.num_classes() || a.rows.size() != b.rows.size()) return false;
  auto key = [](const TableClass& c) { return std::make_pair(c.rep_order, c.size); };
  std::vector<int> img(r, -1);
  std::vector<char> used(r, 0);
  using Prefix = std::vector<std::optional<CharValue>>;
  auto prefixes_match = [&](int upto) {
    std::vector<Prefix> pa, pb;
    for (const auto& row : a.rows) pa.emplace_back(row.values.begin(), row.values.begin() + upto);
    for (const auto& row : b.rows) {
      Prefix p;
      for (int c = 0; c < upto; ++c) p.push_back(row.values[img[c]]);
      pb.push_back(std::move(p));
    }
    std::sort(pa.begin(), pa.end());
    std::sort(pb.begin(), pb.end());
    return pa == pb;
  };
  auto rec = [&](auto&& self, int c) -> bool {
    if (c == r) return true;
    for (int d = 0; d < r; ++d) {
      if (used[d] || key(a.classes[c]) != key(b.classes[d])) continue;
      img[c] = d;
      used[d] = 1;
      if (prefixes_match(c + 1) && self(self, c + 1)) return true;
      used[d] = 0;
    }
    img[c] = -1;
    return false;
  };
  return rec(rec, 0);
}

}  // namespace sip
