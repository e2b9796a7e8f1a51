#include "walklab/wreath.hpp"

#include <algorithm>
#include <sstream>

#include "walklab/errors.hpp"

namespace walklab {

// ---- LampGroup --------------------------------------------------------------

LampValue LampGroup::identity() const {
  switch (kind_) {
    case Kind::Table:
      return TableElem{0};
    case Kind::Integers:
      return 0LL;
    default:
      return DinftyElem{};
  }
}

LampValue LampGroup::mul(const LampValue& a, const LampValue& b) const {
  switch (kind_) {
    case Kind::Table:
      return TableElem{table_->mul(std::get<TableElem>(a).idx, std::get<TableElem>(b).idx)};
    case Kind::Integers:
      return std::get<long long>(a) + std::get<long long>(b);
    default:
      return dinfty_mul(std::get<DinftyElem>(a), std::get<DinftyElem>(b));
  }
}

LampValue LampGroup::inv(const LampValue& a) const {
  switch (kind_) {
    case Kind::Table:
      return TableElem{table_->inv(std::get<TableElem>(a).idx)};
    case Kind::Integers:
      return -std::get<long long>(a);
    default:
      return dinfty_inv(std::get<DinftyElem>(a));
  }
}

bool LampGroup::is_identity(const LampValue& a) const {
  switch (kind_) {
    case Kind::Table:
      return std::get<TableElem>(a).idx == 0;
    case Kind::Integers:
      return std::get<long long>(a) == 0;
    default:
      return dinfty_is_id(std::get<DinftyElem>(a));
  }
}

std::string LampGroup::key(const LampValue& a) const {
  switch (kind_) {
    case Kind::Table:
      return std::to_string(std::get<TableElem>(a).idx);
    case Kind::Integers:
      return std::to_string(std::get<long long>(a));
    default:
      return dinfty_key(std::get<DinftyElem>(a));
  }
}

// ---- WreathBase -------------------------------------------------------------

WreathBase WreathBase::lattice(int d) {
  if (d < 2 || d > 4) throw ConfigError("lattice base supports d in 2..4");
  return WreathBase(d, 0);
}

namespace {
constexpr long long kCoordBias = 1LL << 15;
}

long long WreathBase::pack(const std::vector<long long>& coords) const {
  if (static_cast<int>(coords.size()) != d_) throw ConfigError("pack: wrong dimension");
  if (d_ == 1) return reduce(coords[0]);
  long long p = 0;
  for (int i = 0; i < d_; ++i) {
    long long c = coords[i];
    if (c <= -kCoordBias || c >= kCoordBias) throw ConfigError("pack: coordinate out of range");
    p = (p << 16) | static_cast<long long>(c + kCoordBias);
  }
  return p;
}

std::vector<long long> WreathBase::unpack(long long p) const {
  if (d_ == 1) return {p};
  std::vector<long long> coords(d_);
  for (int i = d_ - 1; i >= 0; --i) {
    coords[i] = (p & 0xffff) - kCoordBias;
    p >>= 16;
  }
  return coords;
}

long long WreathBase::add(long long a, long long b) const {
  if (d_ == 1) return reduce(a + b);
  auto ca = unpack(a), cb = unpack(b);
  for (int i = 0; i < d_; ++i) ca[i] += cb[i];
  return pack(ca);
}

long long WreathBase::neg(long long a) const {
  if (d_ == 1) return reduce(-a);
  auto c = unpack(a);
  for (auto& x : c) x = -x;
  return pack(c);
}

long long WreathBase::reduce(long long a) const {
  if (m_ <= 0) return a;
  long long r = a % m_;
  return r < 0 ? r + m_ : r;
}

std::string WreathBase::key(long long a) const {
  if (d_ == 1) return std::to_string(a);
  auto c = unpack(a);
  std::string s = "(";
  for (int i = 0; i < d_; ++i) {
    if (i) s += ",";
    s += std::to_string(c[i]);
  }
  return s + ")";
}

// ---- WreathGroup ------------------------------------------------------------

const WreathElem& WreathGroup::get(const Element& a) const {
  const auto* w = std::get_if<WreathElem>(&a);
  if (!w) throw GroupMismatch("element does not belong to " + name_);
  return *w;
}

WreathElem WreathGroup::make(std::vector<std::pair<long long, LampValue>> lamps,
                             long long pos) const {
  WreathElem w;
  w.pos = base_.reduce(pos);
  for (auto& [site, v] : lamps) {
    if (lamp_.is_identity(v)) continue;
    w.lamps.emplace_back(base_.reduce(site), v);
  }
  std::sort(w.lamps.begin(), w.lamps.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  for (std::size_t i = 1; i < w.lamps.size(); ++i)
    if (w.lamps[i].first == w.lamps[i - 1].first)
      throw ConfigError("make: duplicate lamp site");
  return w;
}

WreathElem WreathGroup::wmul(const WreathElem& a, const WreathElem& b) const {
  // Merge a's lamps with b's lamps translated by a.pos; sorted-merge keeps the
  // normal form without re-sorting.
  WreathElem r;
  r.pos = base_.add(a.pos, b.pos);
  std::vector<std::pair<long long, LampValue>> bt;
  bt.reserve(b.lamps.size());
  for (const auto& [site, v] : b.lamps) bt.emplace_back(base_.add(site, a.pos), v);
  std::sort(bt.begin(), bt.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  r.lamps.reserve(a.lamps.size() + bt.size());
  std::size_t i = 0, j = 0;
  while (i < a.lamps.size() || j < bt.size()) {
    if (j >= bt.size() || (i < a.lamps.size() && a.lamps[i].first < bt[j].first)) {
      r.lamps.push_back(a.lamps[i++]);
    } else if (i >= a.lamps.size() || bt[j].first < a.lamps[i].first) {
      r.lamps.push_back(bt[j++]);
    } else {
      LampValue v = lamp_.mul(a.lamps[i].second, bt[j].second);
      if (!lamp_.is_identity(v)) r.lamps.emplace_back(a.lamps[i].first, v);
      ++i;
      ++j;
    }
  }
  return r;
}

WreathElem WreathGroup::winv(const WreathElem& a) const {
  WreathElem r;
  r.pos = base_.neg(a.pos);
  r.lamps.reserve(a.lamps.size());
  for (const auto& [site, v] : a.lamps)
    r.lamps.emplace_back(base_.add(site, r.pos), lamp_.inv(v));
  std::sort(r.lamps.begin(), r.lamps.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return r;
}

std::string WreathGroup::wkey(const WreathElem& a) const {
  std::string s;
  for (std::size_t i = 0; i < a.lamps.size(); ++i) {
    if (i) s += ",";
    s += base_.key(a.lamps[i].first) + ":" + lamp_.key(a.lamps[i].second);
  }
  s += "|";
  s += base_.key(a.pos);
  return s;
}

LampValue WreathGroup::lamp_value(const WreathElem& a, long long site) const {
  site = base_.reduce(site);
  for (const auto& [s, v] : a.lamps)
    if (s == site) return v;
  return lamp_.identity();
}

Element WreathGroup::mul(const Element& a, const Element& b) const {
  return wmul(get(a), get(b));
}

Element WreathGroup::inv(const Element& a) const { return winv(get(a)); }

bool WreathGroup::is_identity(const Element& a) const {
  const auto& w = get(a);
  return w.lamps.empty() && w.pos == 0;
}

std::string WreathGroup::key(const Element& a) const { return wkey(get(a)); }

long long WreathGroup::phi(const Element& a) const {
  if (!has_phi()) throw NoProjection(name_ + " has no projection to Z");
  return get(a).pos;
}

Element WreathGroup::section(long long y) const {
  if (!has_phi()) throw NoProjection(name_ + " has no projection to Z");
  return shift(y);
}

// ---- SymZGroup --------------------------------------------------------------

const SymZElem& SymZGroup::get(const Element& a) {
  const auto* s = std::get_if<SymZElem>(&a);
  if (!s) throw GroupMismatch("element does not belong to symz");
  return *s;
}

long long SymZGroup::apply(const SymZElem& g, long long x) {
  auto it = std::lower_bound(g.dev.begin(), g.dev.end(), x,
                             [](const auto& p, long long v) { return p.first < v; });
  if (it != g.dev.end() && it->first == x) return it->second;
  return x + g.t;
}

SymZElem SymZGroup::compose(const SymZElem& a, const SymZElem& b) {
  SymZElem r;
  r.t = a.t + b.t;
  // Deviations of "a then b" can only occur at deviation points of a, or at
  // preimages under a of deviation points of b.
  std::vector<long long> candidates;
  for (const auto& [x, y] : a.dev) candidates.push_back(x);
  for (const auto& [x, y] : b.dev) candidates.push_back(x - a.t);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (long long x : candidates) {
    long long img = apply(b, apply(a, x));
    if (img != x + r.t) r.dev.emplace_back(x, img);
  }
  return r;
}

SymZElem SymZGroup::inverse(const SymZElem& a) {
  SymZElem r;
  r.t = -a.t;
  for (const auto& [x, y] : a.dev) r.dev.emplace_back(y, x);
  std::sort(r.dev.begin(), r.dev.end());
  return r;
}

SymZElem SymZGroup::transposition(long long i) {
  SymZElem s;
  s.dev = {{i, i + 1}, {i + 1, i}};
  return s;
}

Element SymZGroup::mul(const Element& a, const Element& b) const {
  return compose(get(a), get(b));
}

Element SymZGroup::inv(const Element& a) const { return inverse(get(a)); }

bool SymZGroup::is_identity(const Element& a) const {
  const auto& s = get(a);
  return s.t == 0 && s.dev.empty();
}

std::string SymZGroup::key(const Element& a) const {
  const auto& s = get(a);
  std::string out = "T=" + std::to_string(s.t);
  for (const auto& [x, y] : s.dev)
    out += ";" + std::to_string(x) + ">" + std::to_string(y);
  return out;
}

long long SymZGroup::phi(const Element& a) const { return get(a).t; }

Element SymZGroup::section(long long y) const { return shift(y); }

}  // namespace walklab
