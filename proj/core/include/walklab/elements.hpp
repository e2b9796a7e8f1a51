#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace walklab {

// ---------------------------------------------------------------------------
// Concrete element representations. All types are immutable values in normal
// form, so structural equality is group equality and they can key hash maps.
// ---------------------------------------------------------------------------

struct TableElem {
  int idx = 0;
  friend bool operator==(const TableElem&, const TableElem&) = default;
};

// Isometry of the integers x -> eps*x + shift with eps = -1 when flip is set.
// This realizes the infinite dihedral group; the two standard involutions are
// a = (0,flip) and b = (1,flip), and <abab> is the even translations.
struct DinftyElem {
  long long shift = 0;
  bool flip = false;
  friend bool operator==(const DinftyElem&, const DinftyElem&) = default;
};

inline DinftyElem dinfty_mul(const DinftyElem& a, const DinftyElem& b) {
  return {a.shift + (a.flip ? -b.shift : b.shift), a.flip != b.flip};
}
inline DinftyElem dinfty_inv(const DinftyElem& a) {
  return {a.flip ? a.shift : -a.shift, a.flip};
}
inline bool dinfty_is_id(const DinftyElem& a) { return a.shift == 0 && !a.flip; }
inline std::string dinfty_key(const DinftyElem& a) {
  return std::to_string(a.shift) + (a.flip ? "-" : "+");
}

// A lamp value is an element of the lamp group: a table index, an integer
// (lamps valued in Z), or an infinite dihedral element.
using LampValue = std::variant<TableElem, long long, DinftyElem>;

bool lamp_equal(const LampValue& a, const LampValue& b);
std::size_t lamp_hash(const LampValue& a);

// Wreath-product element (lamp configuration, cursor). Sites are packed base
// points (see WreathBase); lamps are sorted by site and never hold the lamp
// identity. `pos` is the packed cursor.
struct WreathElem {
  std::vector<std::pair<long long, LampValue>> lamps;
  long long pos = 0;
  friend bool operator==(const WreathElem& a, const WreathElem& b) {
    if (a.pos != b.pos || a.lamps.size() != b.lamps.size()) return false;
    for (std::size_t i = 0; i < a.lamps.size(); ++i)
      if (a.lamps[i].first != b.lamps[i].first ||
          !lamp_equal(a.lamps[i].second, b.lamps[i].second))
        return false;
    return true;
  }
};

// Bijection of Z equal to x -> x + t outside a finite set. `dev` stores the
// deviating points as sorted (x, g(x)) pairs. This realizes Sym(Z) x| Z; the
// translation part t is the projection to Z.
struct SymZElem {
  std::vector<std::pair<long long, long long>> dev;
  long long t = 0;
  friend bool operator==(const SymZElem&, const SymZElem&) = default;
};

// Element of a diagonal product: one wreath component per factor group
// Gamma_s wr Z/m_s, plus the lamplighter shadow over Z that the construction
// quotients onto. Consistency of the tuple is a checkable invariant.
struct DeltaElem {
  std::vector<WreathElem> comps;
  WreathElem shadow;
  friend bool operator==(const DeltaElem&, const DeltaElem&) = default;
};

using Element = std::variant<TableElem, WreathElem, SymZElem, DeltaElem>;

std::size_t element_hash(const Element& e);

struct ElementHash {
  std::size_t operator()(const Element& e) const { return element_hash(e); }
};
struct ElementEq {
  bool operator()(const Element& a, const Element& b) const { return a == b; }
};

}  // namespace walklab
