#pragma once

#include <memory>
#include <string>
#include <vector>

#include "walklab/elements.hpp"
#include "walklab/finite_table.hpp"
#include "walklab/group.hpp"

namespace walklab {

// Lamp-group operations over LampValue. Three kinds: a finite table, the
// integers, and the infinite dihedral group.
class LampGroup {
 public:
  enum class Kind { Table, Integers, Dinfty };

  static LampGroup table(std::shared_ptr<const FiniteGroupTable> t) {
    LampGroup g;
    g.kind_ = Kind::Table;
    g.table_ = std::move(t);
    return g;
  }
  static LampGroup integers() {
    LampGroup g;
    g.kind_ = Kind::Integers;
    return g;
  }
  static LampGroup dinfty() {
    LampGroup g;
    g.kind_ = Kind::Dinfty;
    return g;
  }

  Kind kind() const { return kind_; }
  const FiniteGroupTable& table() const { return *table_; }
  std::shared_ptr<const FiniteGroupTable> table_ptr() const { return table_; }

  LampValue identity() const;
  LampValue mul(const LampValue& a, const LampValue& b) const;
  LampValue inv(const LampValue& a) const;
  bool is_identity(const LampValue& a) const;
  std::string key(const LampValue& a) const;

 private:
  Kind kind_ = Kind::Integers;
  std::shared_ptr<const FiniteGroupTable> table_;
};

// Base group of a wreath product: the line Z (m=0, d=1), a cycle Z/m (m>0),
// or the lattice Z^d (m=0, d in 2..4). Base points are packed into a single
// int64 key; the line uses the value itself, lattices pack 16-bit coordinates.
class WreathBase {
 public:
  static WreathBase line() { return WreathBase(1, 0); }
  static WreathBase cycle(long long m) { return WreathBase(1, m); }
  static WreathBase lattice(int d);

  int dim() const { return d_; }
  long long modulus() const { return m_; }
  bool is_cycle() const { return m_ > 0; }

  long long pack(const std::vector<long long>& coords) const;
  std::vector<long long> unpack(long long p) const;
  long long add(long long a, long long b) const;
  long long neg(long long a) const;
  long long reduce(long long a) const;  // canonical form (mod m for cycles)
  std::string key(long long a) const;

 private:
  WreathBase(int d, long long m) : d_(d), m_(m) {}
  int d_;
  long long m_;
};

// Restricted wreath product Lamp wr Base with the product rule
// (f,x)(g,y) = (f . tau_x g, x+y), tau_x g(z) = g(z - x).
class WreathGroup : public Group {
 public:
  WreathGroup(std::string name, WreathBase base, LampGroup lamp)
      : name_(std::move(name)), base_(base), lamp_(lamp) {}

  const WreathBase& base() const { return base_; }
  const LampGroup& lamp() const { return lamp_; }

  std::string name() const override { return name_; }
  Element identity() const override { return WreathElem{}; }
  Element mul(const Element& a, const Element& b) const override;
  Element inv(const Element& a) const override;
  bool is_identity(const Element& a) const override;
  std::string key(const Element& a) const override;
  long long phi(const Element& a) const override;
  bool has_phi() const override { return base_.dim() == 1 && !base_.is_cycle(); }
  Element section(long long y) const override;

  // Element builders.
  WreathElem make(std::vector<std::pair<long long, LampValue>> lamps, long long pos) const;
  WreathElem lamp_at(long long site, LampValue v) const { return make({{site, v}}, 0); }
  WreathElem shift(long long y) const { return make({}, y); }

  // Raw-representation product, shared with DeltaGroup.
  WreathElem wmul(const WreathElem& a, const WreathElem& b) const;
  WreathElem winv(const WreathElem& a) const;
  std::string wkey(const WreathElem& a) const;
  LampValue lamp_value(const WreathElem& a, long long site) const;

 private:
  const WreathElem& get(const Element& a) const;
  std::string name_;
  WreathBase base_;
  LampGroup lamp_;
};

// The group of bijections of Z that agree with a translation off a finite
// set, i.e. Sym(Z) x| Z. Composition is left-to-right: mul(g,h) maps x to
// h(g(x)), so the natural right action on Z is x.g = g(x).
class SymZGroup : public Group {
 public:
  std::string name() const override { return "symz"; }
  Element identity() const override { return SymZElem{}; }
  Element mul(const Element& a, const Element& b) const override;
  Element inv(const Element& a) const override;
  bool is_identity(const Element& a) const override;
  std::string key(const Element& a) const override;
  long long phi(const Element& a) const override;
  bool has_phi() const override { return true; }
  Element section(long long y) const override;

  static long long apply(const SymZElem& g, long long x);
  static SymZElem compose(const SymZElem& a, const SymZElem& b);
  static SymZElem inverse(const SymZElem& a);

  static SymZElem shift(long long y) { return SymZElem{{}, y}; }
  // The transposition swapping i and i+1.
  static SymZElem transposition(long long i);

 private:
  static const SymZElem& get(const Element& a);
};

}  // namespace walklab
