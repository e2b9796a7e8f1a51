#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace walklab {

using Perm = std::vector<int>;  // images of 0..n-1

Perm perm_compose(const Perm& a, const Perm& b);  // apply a first, then b
Perm perm_inverse(const Perm& a);
std::string perm_cycles(const Perm& p);  // cycle notation, "()" for identity

// A finite group realized by a closed multiplication table. Elements are
// dense indices 0..order-1 with index 0 the identity. Named subsets mark the
// generator roles used by the constructions (e.g. "A", "B", involutions).
class FiniteGroupTable {
 public:
  // Breadth-first closure of the subgroup generated by `generators` acting on
  // a common domain {0..domain-1}. Throws ClosureOverflow past `cap`.
  static FiniteGroupTable from_permutations(const std::vector<Perm>& generators,
                                            std::size_t cap = 1000000);

  static FiniteGroupTable cyclic(int m);
  static FiniteGroupTable symmetric(int n);              // S_n, n small
  static FiniteGroupTable dihedral_8();                  // two involutions, product of order 4
  static FiniteGroupTable direct_product(const FiniteGroupTable& a,
                                         const FiniteGroupTable& b);

  int order() const { return static_cast<int>(inv_.size()); }
  int id() const { return 0; }
  int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a) * inv_.size() + b]; }
  int inv(int a) const { return inv_[a]; }
  int conj(int a, int g) const { return mul(mul(g, a), inv(g)); }
  int element_order(int a) const;
  bool is_abelian() const;

  const std::string& name(int a) const { return names_[a]; }
  void set_name(int a, const std::string& n) { names_[a] = n; }
  // Index by name; -1 if absent.
  int find(const std::string& n) const;

  // Underlying permutation images when built from permutations (empty otherwise).
  const std::vector<Perm>& perms() const { return perms_; }

  void mark(const std::string& role, std::vector<int> elems) { marked_[role] = std::move(elems); }
  const std::vector<int>& marked(const std::string& role) const;
  bool has_marked(const std::string& role) const { return marked_.count(role) > 0; }

  // Subgroup machinery used by the diagonal-product constructions. All of it
  // is naive enumeration; tables stay small.
  std::vector<int> subgroup_closure(std::vector<int> seed) const;
  std::vector<int> normal_closure(const std::vector<int>& seed) const;
  // Left-coset representative map for the subgroup `n` (must be normal when
  // used as a quotient). rep[g] is the smallest element of gN.
  std::vector<int> coset_reps(const std::vector<int>& n) const;
  std::vector<int> conjugacy_class(int a) const;
  // Checks the group axioms by brute force (associativity only for order<=512).
  void check_axioms() const;

  // Direct-product element helpers.
  int pair_index(int a, int b) const { return a * b_order_ + b; }
  std::pair<int, int> pair_split(int g) const { return {g / b_order_, g % b_order_}; }
  bool is_direct_product() const { return b_order_ > 0; }

 private:
  FiniteGroupTable() = default;
  void finish();  // builds inv_ from mul_, checks axioms

  std::vector<int> mul_;
  std::vector<int> inv_;
  std::vector<std::string> names_;
  std::vector<Perm> perms_;
  std::map<std::string, std::vector<int>> marked_;
  int b_order_ = 0;  // set for direct products
};

}  // namespace walklab
