#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace sip {

/// Permutation on {0, ..., d-1}; acts on the right, so (a*b) applies a first.
using Perm = std::vector<std::uint32_t>;

/// Describes how to build a small group.
struct GroupSpec {
  enum class Kind { Cyclic, Dihedral, Semidihedral, Quaternion, ElemAbelian, DirectProduct, PermGroup, Order16, Presentation };
  Kind kind = Kind::Cyclic;
  long n = 1;     // order for Cyclic/Dihedral/Semidihedral/Quaternion; p for ElemAbelian; id for Order16
  int rank = 0;   // ElemAbelian
  std::vector<GroupSpec> factors;
  std::vector<Perm> perms;
  // Presentation: generator count and relators over letters 1..g (negative = inverse).
  int num_gens = 0;
  std::vector<std::vector<int>> relators;
  std::string label;  // optional display name

  static GroupSpec cyclic(long n);
  static GroupSpec dihedral(long n);
  static GroupSpec semidihedral(long n);
  static GroupSpec quaternion(long n);
  static GroupSpec elem_abelian(long p, int rank);
  static GroupSpec direct_product(std::vector<GroupSpec> factors);
  static GroupSpec perm_group(std::vector<Perm> gens, std::string label = "");
  static GroupSpec order16(int id);
  static GroupSpec presentation(int num_gens, std::vector<std::vector<int>> relators, std::string label);
  static GroupSpec symmetric(int n);
  static GroupSpec alternating(int n);

  /// Canonical text: c4xc2, d16, sd16, q8, e2^3, o16:<id>, perm:[(1,2),(1,2,3)].
  std::string to_string() const;
  /// Declared order, when known without building (0 otherwise).
  long declared_order() const;
};

/// Parses the CLI group syntax; throws ParseError.
GroupSpec parse_group_spec(const std::string& text);

/// Fixed list of small test groups (families, the order-16 list, some
/// products and permutation groups), restricted to order <= max_order.
std::vector<GroupSpec> small_group_catalogue(long max_order = 100);

/// Finite group realized as permutations; element 0 is the identity.
class FiniteGroup {
 public:
  static constexpr long kMaxOrder = 100000;

  FiniteGroup(std::vector<Perm> generators, std::string name);

  long order() const { return static_cast<long>(elems_.size()); }
  const std::string& name() const { return name_; }
  /// Indices of the generators used to build the group.
  const std::vector<int>& generators() const { return gens_; }
  const Perm& perm(int x) const { return elems_[x]; }
  int degree() const { return degree_; }

  int mul(int a, int b) const;
  int inv(int a) const { return inv_[a]; }
  int pow(int a, long k) const;
  int elem_order(int a) const { return ord_[a]; }
  /// Index of a permutation, or -1 if it is not in the group.
  int index_of(const Perm& p) const;
  bool is_abelian() const;
  long exponent() const;

 private:
  std::vector<Perm> elems_;
  std::vector<int> gens_;
  std::vector<int> inv_, ord_;
  std::vector<std::int32_t> table_;  // full multiplication table when small
  std::string name_;
  int degree_ = 0;
  struct Index;
  std::shared_ptr<Index> index_;
  int compose_lookup(int a, int b) const;
};

FiniteGroup group_build(const GroupSpec& spec);

/// Regular permutation representation from a finite presentation by coset
/// enumeration; relators use letters 1..num_gens with negatives as inverses.
std::vector<Perm> coset_enumerate(int num_gens, const std::vector<std::vector<int>>& relators, long max_cosets = 2000000);

struct ConjClass {
  std::string name;  // e.g. "4a"
  int rep = 0;       // least element index
  std::vector<int> members;
  long size = 0;
  int rep_order = 1;
};

struct ConjClassPartition {
  std::vector<ConjClass> classes;
  std::vector<int> class_of;  // element -> class index
  /// power_maps[p][c] = class of rep(c)^p, for every stored prime p.
  std::vector<std::pair<long, std::vector<int>>> power_maps;
  const std::vector<int>* power_map(long p) const;
  /// Class of rep(c)^k for any integer k.
  int power_class(const FiniteGroup& G, int c, long k) const;
};

/// Classes sorted by (element order, least representative); names follow the
/// usual order-plus-letter scheme. Power maps for 2 and every prime up to the
/// exponent.
ConjClassPartition conjugacy_classes(const FiniteGroup& G);

/// (x, y) with |x| = 4, |y| = 2, xy = yx and y not in <x>.
std::optional<std::pair<int, int>> contains_c4xc2(const FiniteGroup& G);

/// Injective homomorphism H -> G given by images of H's generators.
std::optional<std::vector<int>> find_embedding_of(const FiniteGroup& G, const FiniteGroup& H);
/// Targets: c4xc2, e2^3, q8, d8, e2^2 (C2xC2). Other targets are rejected.
std::optional<std::vector<int>> find_embedding(const FiniteGroup& G, const GroupSpec& target);
/// Extends generator images of an embedding to all elements of H.
std::vector<int> embedding_map(const FiniteGroup& G, const FiniteGroup& H, const std::vector<int>& gen_images);

enum class TwoGroupKind { ElemAbelian, Cyclic, Quaternion, Dihedral, Semidihedral, Other };
std::string to_string(TwoGroupKind k);
TwoGroupKind classify_2group(const FiniteGroup& P);

struct LemmaEntry {
  std::string group;
  long order = 0;
  TwoGroupKind kind = TwoGroupKind::Other;
  bool has_c4xc2 = false;
  bool consistent = false;
};
struct LemmaReport {
  long max_order = 0;
  std::vector<LemmaEntry> entries;
  std::vector<std::string> counterexamples;
  bool pass() const { return counterexamples.empty(); }
};
LemmaReport verify_lemma_2groups(long max_order);

}  // namespace sip
