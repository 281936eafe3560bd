// Coset enumeration over the trivial subgroup (HLT strategy with
// coincidence processing), producing the regular permutation representation.

#include <cstdlib>

#include "sip/error.hpp"
#include "sip/group/group.hpp"

namespace sip {

namespace {

class CosetTable {
 public:
  CosetTable(int num_gens, long max_cosets) : cols_(2 * num_gens), max_(max_cosets) { new_coset(); }

  long run(const std::vector<std::vector<int>>& rels) {
    for (int c = 0; c < static_cast<int>(parent_.size()); ++c) {
      for (const auto& r : rels) {
        if (!live(c)) break;
        scan_and_fill(c, r);
      }
      if (!live(c)) continue;
      for (int x = 0; x < cols_; ++x)
        if (live(c) && at(c, x) < 0) define(c, x);
    }
    long n = 0;
    for (int c = 0; c < static_cast<int>(parent_.size()); ++c) n += live(c);
    return n;
  }

  std::vector<Perm> perms(int num_gens) const {
    std::vector<int> renum(parent_.size(), -1);
    int n = 0;
    for (int c = 0; c < static_cast<int>(parent_.size()); ++c)
      if (live(c)) renum[c] = n++;
    std::vector<Perm> out(num_gens, Perm(n));
    for (int c = 0; c < static_cast<int>(parent_.size()); ++c) {
      if (!live(c)) continue;
      for (int g = 0; g < num_gens; ++g) {
        int d = at(c, 2 * g);
        if (d < 0 || renum[d] < 0) throw InvalidState("coset table incomplete");
        out[g][renum[c]] = static_cast<std::uint32_t>(renum[d]);
      }
    }
    return out;
  }

 private:
  int inv(int x) const { return x ^ 1; }
  int& at(int c, int x) { return table_[static_cast<std::size_t>(c) * cols_ + x]; }
  int at(int c, int x) const { return table_[static_cast<std::size_t>(c) * cols_ + x]; }
  bool live(int c) const { return parent_[c] == c; }

  int new_coset() {
    if (static_cast<long>(parent_.size()) >= max_) throw ResourceLimit("coset enumeration exceeded " + std::to_string(max_) + " cosets");
    int c = static_cast<int>(parent_.size());
    parent_.push_back(c);
    table_.resize(table_.size() + cols_, -1);
    return c;
  }
  void define(int c, int x) {
    int d = new_coset();
    at(c, x) = d;
    at(d, inv(x)) = c;
  }

  void scan_and_fill(int c, const std::vector<int>& w) {
    int f = c, b = c;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    while (true) {
      while (i <= j && at(f, w[i]) >= 0) f = at(f, w[i++]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && at(b, inv(w[j])) >= 0) b = at(b, inv(w[j--]));
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        at(f, w[i]) = b;
        at(b, inv(w[i])) = f;
        return;
      }
      define(f, w[i]);
    }
  }

  int rep(int k) {
    int r = k;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[k] != r) {
      int nx = parent_[k];
      parent_[k] = r;
      k = nx;
    }
    return r;
  }
  void merge(int k, int l, std::vector<int>& queue) {
    int a = rep(k), b = rep(l);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    queue.push_back(b);
  }
  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int e = queue[qi];
      for (int x = 0; x < cols_; ++x) {
        int f = at(e, x);
        if (f < 0) continue;
        if (at(f, inv(x)) == e) at(f, inv(x)) = -1;
        int e1 = rep(e), f1 = rep(f);
        if (at(e1, x) >= 0)
          merge(f1, at(e1, x), queue);
        else if (at(f1, inv(x)) >= 0)
          merge(e1, at(f1, inv(x)), queue);
        else {
          at(e1, x) = f1;
          at(f1, inv(x)) = e1;
        }
      }
    }
  }

  int cols_;
  long max_;
  std::vector<int> parent_;
  std::vector<int> table_;
};

}  // namespace

std::vector<Perm> coset_enumerate(int num_gens, const std::vector<std::vector<int>>& relators, long max_cosets) {
  if (num_gens < 1) throw InvalidArgument("presentation needs at least one generator");
  std::vector<std::vector<int>> rels;
  for (const auto& r : relators) {
    std::vector<int> w;
    for (int letter : r) {
      if (letter == 0 || std::abs(letter) > num_gens) throw InvalidArgument("relator letter out of range");
      w.push_back(letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1);
    }
    if (!w.empty()) rels.push_back(std::move(w));
  }
  CosetTable t(num_gens, max_cosets);
  long n = t.run(rels);
  if (n > FiniteGroup::kMaxOrder) throw ResourceLimit("group order " + std::to_string(n) + " exceeds the closure bound");
  return t.perms(num_gens);
}

}  // namespace sip
