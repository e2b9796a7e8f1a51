#pragma once

#include <memory>
#include <string>
#include <vector>

#include "walklab/finite_table.hpp"
#include "walklab/group.hpp"
#include "walklab/wreath.hpp"

namespace walklab {

// One factor G_s = Gamma_s wr Z/m_s of a diagonal product, together with the
// marked copies A(s), B(s) inside Gamma_s and the quotient map
// q : Gamma_s -> A x B by the relative abelianization.
struct DeltaFactor {
  bool dinfty = false;
  std::shared_ptr<const FiniteGroupTable> gamma;  // null when dinfty
  std::vector<int> a_elems;  // a_elems[i] realizes the i-th element of A
  std::vector<int> b_elems;
  long long k = 0;
  long long m = 0;
  std::shared_ptr<const WreathGroup> wreath;          // Gamma_s wr Z/m_s
  std::vector<std::pair<int, int>> quotient;          // table index -> (a,b); empty when dinfty
};

// The diagonal product of the marked factor sequence, together with the
// lamplighter shadow (A x B) wr Z it quotients onto. Elements are consistent
// tuples (one wreath component per factor, plus the shadow); the generators
// tau, alpha_i, beta_i are diagonal.
class DeltaGroup : public Group {
 public:
  DeltaGroup(std::string name, std::shared_ptr<const FiniteGroupTable> a,
             std::shared_ptr<const FiniteGroupTable> b, std::vector<DeltaFactor> factors);

  std::string name() const override { return name_; }
  Element identity() const override;
  Element mul(const Element& x, const Element& y) const override;
  Element inv(const Element& x) const override;
  bool is_identity(const Element& x) const override;
  std::string key(const Element& x) const override;
  long long phi(const Element& x) const override;
  bool has_phi() const override { return true; }
  Element section(long long y) const override;

  int num_factors() const { return static_cast<int>(factors_.size()); }
  const DeltaFactor& factor(int s) const { return factors_[s]; }
  const FiniteGroupTable& ab_table() const { return *ab_; }
  const WreathGroup& shadow_group() const { return *shadow_; }

  // Diagonal generators. alpha/beta indices run over the nontrivial elements
  // of A resp. B (index into the abstract table, >= 1).
  Element tau() const;
  Element alpha(int i) const;
  Element beta(int i) const;
  // Symmetric generating list (tau, tau^-1, nontrivial alphas and betas with
  // inverses), with printable names.
  std::vector<std::pair<std::string, Element>> generators() const;

  // Single-site element of the s-th component; requires the value to lie in
  // ker(Gamma_s -> A(s) x B(s)) so that the tuple is consistent.
  Element kernel_lamp(int s, long long site, LampValue v) const;

  // Image of a lamp value under q, as an index into the A x B table.
  int quotient_value(int s, const LampValue& v) const;

  // Whether every component lies in the kernel of Gamma_s -> A(s) x B(s)
  // (equivalently: the shadow is trivial).
  bool kernel_member(const Element& x) const;
  // The shadow component (projection to (A x B) wr Z).
  WreathElem shadow_of(const Element& x) const;

  // Recomputes the shadow of each component from q and compares against the
  // stored shadow reduced mod m_s. Exact cross-check of tuple consistency.
  bool consistent(const Element& x) const;

 private:
  const DeltaElem& get(const Element& x) const;
  WreathElem component_shadow(int s, const WreathElem& comp) const;
  WreathElem reduce_shadow_mod(int s, const WreathElem& shadow) const;

  std::string name_;
  std::shared_ptr<const FiniteGroupTable> a_;
  std::shared_ptr<const FiniteGroupTable> b_;
  std::shared_ptr<const FiniteGroupTable> ab_;
  std::shared_ptr<const WreathGroup> shadow_;
  std::vector<DeltaFactor> factors_;
  std::vector<std::shared_ptr<const WreathGroup>> factor_shadows_;  // (AxB) wr Z/m_s
};

}  // namespace walklab
