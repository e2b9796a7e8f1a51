#include "walklab/delta.hpp"

#include <algorithm>

#include "walklab/errors.hpp"

namespace walklab {

namespace {

// a-part/b-part of an infinite dihedral element under D_inf -> Z/2 x Z/2,
// a = (0,flip) -> (1,0), b = (1,flip) -> (0,1).
std::pair<int, int> dinfty_quotient(const DinftyElem& d) {
  int bpart = static_cast<int>(((d.shift % 2) + 2) % 2);
  int apart = ((d.flip ? 1 : 0) + bpart) % 2;
  return {apart, bpart};
}

}  // namespace

DeltaGroup::DeltaGroup(std::string name, std::shared_ptr<const FiniteGroupTable> a,
                       std::shared_ptr<const FiniteGroupTable> b,
                       std::vector<DeltaFactor> factors)
    : name_(std::move(name)), a_(std::move(a)), b_(std::move(b)), factors_(std::move(factors)) {
  ab_ = std::make_shared<FiniteGroupTable>(FiniteGroupTable::direct_product(*a_, *b_));
  shadow_ = std::make_shared<WreathGroup>("shadow", WreathBase::line(), LampGroup::table(ab_));
  for (const auto& f : factors_) {
    factor_shadows_.push_back(std::make_shared<WreathGroup>(
        "shadow_mod", WreathBase::cycle(f.m), LampGroup::table(ab_)));
  }
}

const DeltaElem& DeltaGroup::get(const Element& x) const {
  const auto* d = std::get_if<DeltaElem>(&x);
  if (!d || static_cast<int>(d->comps.size()) != num_factors())
    throw GroupMismatch("element does not belong to " + name_);
  return *d;
}

Element DeltaGroup::identity() const {
  DeltaElem e;
  e.comps.resize(factors_.size());
  return e;
}

Element DeltaGroup::mul(const Element& x, const Element& y) const {
  const auto& dx = get(x);
  const auto& dy = get(y);
  DeltaElem r;
  r.comps.reserve(factors_.size());
  for (std::size_t s = 0; s < factors_.size(); ++s)
    r.comps.push_back(factors_[s].wreath->wmul(dx.comps[s], dy.comps[s]));
  r.shadow = shadow_->wmul(dx.shadow, dy.shadow);
  return r;
}

Element DeltaGroup::inv(const Element& x) const {
  const auto& dx = get(x);
  DeltaElem r;
  r.comps.reserve(factors_.size());
  for (std::size_t s = 0; s < factors_.size(); ++s)
    r.comps.push_back(factors_[s].wreath->winv(dx.comps[s]));
  r.shadow = shadow_->winv(dx.shadow);
  return r;
}

bool DeltaGroup::is_identity(const Element& x) const {
  const auto& dx = get(x);
  for (const auto& c : dx.comps)
    if (!c.lamps.empty() || c.pos != 0) return false;
  return dx.shadow.lamps.empty() && dx.shadow.pos == 0;
}

std::string DeltaGroup::key(const Element& x) const {
  const auto& dx = get(x);
  std::string s;
  for (std::size_t i = 0; i < dx.comps.size(); ++i) {
    if (i) s += "||";
    s += factors_[i].wreath->wkey(dx.comps[i]);
  }
  s += "##";
  s += shadow_->wkey(dx.shadow);
  return s;
}

long long DeltaGroup::phi(const Element& x) const { return get(x).shadow.pos; }

Element DeltaGroup::section(long long y) const {
  DeltaElem e;
  e.comps.reserve(factors_.size());
  for (const auto& f : factors_) e.comps.push_back(f.wreath->shift(y));
  e.shadow = shadow_->shift(y);
  return e;
}

Element DeltaGroup::tau() const { return section(1); }

Element DeltaGroup::alpha(int i) const {
  if (i <= 0 || i >= a_->order()) throw ConfigError("alpha: bad index");
  DeltaElem e;
  e.comps.reserve(factors_.size());
  for (const auto& f : factors_) {
    LampValue v = f.dinfty ? LampValue(DinftyElem{0, true})
                           : LampValue(TableElem{f.a_elems[i]});
    e.comps.push_back(f.wreath->lamp_at(0, v));
  }
  e.shadow = shadow_->lamp_at(0, TableElem{ab_->pair_index(i, 0)});
  return e;
}

Element DeltaGroup::beta(int i) const {
  if (i <= 0 || i >= b_->order()) throw ConfigError("beta: bad index");
  DeltaElem e;
  e.comps.reserve(factors_.size());
  for (const auto& f : factors_) {
    LampValue v = f.dinfty ? LampValue(DinftyElem{1, true})
                           : LampValue(TableElem{f.b_elems[i]});
    e.comps.push_back(f.wreath->lamp_at(f.k, v));
  }
  // In the shadow the B-lamps are re-indexed by -k_s, which puts them at the
  // cursor; this is the identification that makes the factor shadows agree.
  e.shadow = shadow_->lamp_at(0, TableElem{ab_->pair_index(0, i)});
  return e;
}

std::vector<std::pair<std::string, Element>> DeltaGroup::generators() const {
  std::vector<std::pair<std::string, Element>> g;
  g.emplace_back("tau", tau());
  g.emplace_back("tau^-1", inv(tau()));
  for (int i = 1; i < a_->order(); ++i) {
    Element ai = alpha(i);
    g.emplace_back("alpha" + std::to_string(i), ai);
    Element inv_ai = inv(ai);
    if (!(inv_ai == ai)) g.emplace_back("alpha" + std::to_string(i) + "^-1", inv_ai);
  }
  for (int i = 1; i < b_->order(); ++i) {
    Element bi = beta(i);
    g.emplace_back("beta" + std::to_string(i), bi);
    Element inv_bi = inv(bi);
    if (!(inv_bi == bi)) g.emplace_back("beta" + std::to_string(i) + "^-1", inv_bi);
  }
  return g;
}

int DeltaGroup::quotient_value(int s, const LampValue& v) const {
  const auto& f = factors_[s];
  if (f.dinfty) {
    auto [ap, bp] = dinfty_quotient(std::get<DinftyElem>(v));
    return ab_->pair_index(ap, bp);
  }
  auto [ap, bp] = f.quotient[std::get<TableElem>(v).idx];
  return ab_->pair_index(ap, bp);
}

Element DeltaGroup::kernel_lamp(int s, long long site, LampValue v) const {
  if (s < 0 || s >= num_factors()) throw ConfigError("kernel_lamp: bad factor");
  if (quotient_value(s, v) != 0)
    throw ConfigError("kernel_lamp: value is not in the kernel of the quotient");
  DeltaElem e;
  e.comps.resize(factors_.size());
  e.comps[s] = factors_[s].wreath->lamp_at(site, v);
  return e;
}

bool DeltaGroup::kernel_member(const Element& x) const {
  const auto& dx = get(x);
  return dx.shadow.lamps.empty() && dx.shadow.pos == 0;
}

WreathElem DeltaGroup::shadow_of(const Element& x) const { return get(x).shadow; }

WreathElem DeltaGroup::component_shadow(int s, const WreathElem& comp) const {
  const auto& f = factors_[s];
  const auto& fs = *factor_shadows_[s];
  std::vector<std::pair<long long, LampValue>> lamps;
  // A-part read at z, B-part read at z + k_s; both land at site z.
  for (long long z = 0; z < f.m; ++z) {
    int av = quotient_value(s, f.wreath->lamp_value(comp, z));
    int bv = quotient_value(s, f.wreath->lamp_value(comp, z + f.k));
    auto [aa, ab0] = ab_->pair_split(av);
    auto [ba, bb] = ab_->pair_split(bv);
    (void)ab0;
    (void)ba;
    int combined = ab_->pair_index(aa, bb);
    if (combined != 0) lamps.emplace_back(z, TableElem{combined});
  }
  return fs.make(std::move(lamps), comp.pos);
}

WreathElem DeltaGroup::reduce_shadow_mod(int s, const WreathElem& shadow) const {
  // Fold shadow lamps over Z onto Z/m_s; A x B is abelian, so collisions
  // multiply in any order.
  const auto& fs = *factor_shadows_[s];
  const auto& f = factors_[s];
  std::vector<std::pair<long long, LampValue>> lamps;
  for (const auto& [site, v] : shadow.lamps) {
    long long z = ((site % f.m) + f.m) % f.m;
    bool merged = false;
    for (auto& [ls, lv] : lamps)
      if (ls == z) {
        lv = TableElem{ab_->mul(std::get<TableElem>(lv).idx, std::get<TableElem>(v).idx)};
        merged = true;
        break;
      }
    if (!merged) lamps.emplace_back(z, v);
  }
  return fs.make(std::move(lamps), shadow.pos);
}

bool DeltaGroup::consistent(const Element& x) const {
  const auto& dx = get(x);
  for (int s = 0; s < num_factors(); ++s) {
    WreathElem lhs = component_shadow(s, dx.comps[s]);
    WreathElem rhs = reduce_shadow_mod(s, dx.shadow);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

}  // namespace walklab
