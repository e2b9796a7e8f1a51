#include "walklab/measure.hpp"

#include <algorithm>
#include <deque>

#include "walklab/errors.hpp"

namespace walklab {

Rational Measure::mass() const {
  Rational m = 0;
  for (const auto& [e, p] : atoms) m += p;
  return m;
}

Rational Measure::at(const Element& e) const {
  auto it = atoms.find(e);
  return it == atoms.end() ? Rational(0) : it->second;
}

std::vector<std::pair<std::string, Element>> Measure::sorted_support() const {
  std::vector<std::pair<std::string, Element>> out;
  out.reserve(atoms.size());
  for (const auto& [e, p] : atoms) out.emplace_back(group->key(e), e);
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

Measure make_step_distribution(GroupPtr group,
                               std::vector<std::pair<Element, Rational>> atom_list,
                               const std::vector<Element>& witnesses, int witness_radius) {
  Measure m;
  m.group = std::move(group);
  for (auto& [e, p] : atom_list) {
    if (p <= 0) throw ConfigError("step distribution: non-positive atom");
    m.atoms[e] += p;
  }
  if (m.mass() != 1) throw ConfigError("step distribution: mass is not 1");
  for (const auto& [e, p] : m.atoms) {
    if (m.at(m.group->inv(e)) != p)
      throw ConfigError("step distribution: not symmetric at " + m.group->key(e));
  }
  if (!witnesses.empty()) {
    // Generation check: BFS through the support must reach every witness.
    std::unordered_map<Element, int, ElementHash, ElementEq> seen;
    std::deque<Element> frontier;
    Element id = m.group->identity();
    seen.emplace(id, 0);
    frontier.push_back(id);
    for (int d = 0; d < witness_radius && !frontier.empty(); ++d) {
      std::deque<Element> next;
      for (const auto& cur : frontier)
        for (const auto& [s, p] : m.atoms) {
          Element e = m.group->mul(cur, s);
          if (seen.emplace(e, d + 1).second) next.push_back(std::move(e));
        }
      frontier = std::move(next);
    }
    for (const auto& w : witnesses)
      if (!seen.count(w))
        throw ConfigError("step distribution: support does not reach witness " +
                          m.group->key(w) + " within radius " + std::to_string(witness_radius));
  }
  return m;
}

Measure convolve(const Measure& a, const Measure& b, std::size_t atom_cap) {
  if (a.group.get() != b.group.get())
    throw GroupMismatch("convolve: measures over different groups");
  Measure r;
  r.group = a.group;
  r.atoms.reserve(a.atoms.size());
  Rational assembled = 0;
  for (const auto& [x, px] : a.atoms) {
    for (const auto& [y, py] : b.atoms) {
      Element z = r.group->mul(x, y);
      r.atoms[z] += px * py;
      if (r.atoms.size() > atom_cap) {
        double mass = rat_double(assembled);
        throw SupportOverflow("convolve: support exceeds cap", r.atoms.size(), mass);
      }
    }
    assembled += px;
  }
  return r;
}

Measure convolve_power(const Measure& d, int n, std::size_t atom_cap) {
  if (n < 0) throw ConfigError("convolve_power: negative n");
  Measure r;
  r.group = d.group;
  r.atoms.emplace(d.group->identity(), Rational(1));
  for (int i = 0; i < n; ++i) r = convolve(r, d, atom_cap);
  return r;
}

Rational tv_distance(const Measure& m1, const Measure& m2) {
  if (m1.group.get() != m2.group.get())
    throw GroupMismatch("tv_distance: measures over different groups");
  Rational s = 0;
  for (const auto& [e, p] : m1.atoms) s += rat_abs(p - m2.at(e));
  for (const auto& [e, p] : m2.atoms)
    if (!m1.atoms.count(e)) s += rat_abs(p);
  return s / 2;
}

Measure translate_measure(const Element& g, const Measure& m) {
  Measure r;
  r.group = m.group;
  r.atoms.reserve(m.atoms.size());
  for (const auto& [e, p] : m.atoms) r.atoms[r.group->mul(g, e)] += p;
  return r;
}

std::pair<bool, Rational> sn_delta_member(const Element& g, int n, const Rational& delta,
                                          const Measure& d, std::size_t atom_cap) {
  Measure mn = convolve_power(d, n, atom_cap);
  Rational tv = tv_distance(mn, translate_measure(g, mn));
  return {tv < delta, tv};
}

std::map<long long, Rational> phi_projection(const Measure& m) {
  std::map<long long, Rational> proj;
  for (const auto& [e, p] : m.atoms) proj[m.group->phi(e)] += p;
  return proj;
}

bool phi_is_simple_random_walk(const Measure& m) {
  auto proj = phi_projection(m);
  return proj.size() == 2 && proj.count(-1) && proj.count(1) &&
         proj.at(-1) == Rational(1, 2) && proj.at(1) == Rational(1, 2);
}

}  // namespace walklab
