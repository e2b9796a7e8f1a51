#include "walklab/elements.hpp"

namespace walklab {

namespace {

inline std::size_t mix(std::size_t h, std::size_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace

bool lamp_equal(const LampValue& a, const LampValue& b) { return a == b; }

std::size_t lamp_hash(const LampValue& a) {
  switch (a.index()) {
    case 0:
      return mix(1, static_cast<std::size_t>(std::get<TableElem>(a).idx));
    case 1:
      return mix(2, static_cast<std::size_t>(std::get<long long>(a)));
    default: {
      const auto& d = std::get<DinftyElem>(a);
      return mix(mix(3, static_cast<std::size_t>(d.shift)), d.flip ? 1 : 0);
    }
  }
}

namespace {

std::size_t wreath_hash(const WreathElem& w) {
  std::size_t h = mix(0x5155, static_cast<std::size_t>(w.pos));
  for (const auto& [site, v] : w.lamps) {
    h = mix(h, static_cast<std::size_t>(site));
    h = mix(h, lamp_hash(v));
  }
  return h;
}

}  // namespace

std::size_t element_hash(const Element& e) {
  switch (e.index()) {
    case 0:
      return mix(0x7ab1, static_cast<std::size_t>(std::get<TableElem>(e).idx));
    case 1:
      return wreath_hash(std::get<WreathElem>(e));
    case 2: {
      const auto& s = std::get<SymZElem>(e);
      std::size_t h = mix(0x53a2, static_cast<std::size_t>(s.t));
      for (const auto& [x, y] : s.dev) {
        h = mix(h, static_cast<std::size_t>(x));
        h = mix(h, static_cast<std::size_t>(y));
      }
      return h;
    }
    default: {
      const auto& d = std::get<DeltaElem>(e);
      std::size_t h = 0xde17a;
      for (const auto& c : d.comps) h = mix(h, wreath_hash(c));
      return mix(h, wreath_hash(d.shadow));
    }
  }
}

}  // namespace walklab
