#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "walklab/group.hpp"
#include "walklab/rational.hpp"

namespace walklab {

using AtomMap = std::unordered_map<Element, Rational, ElementHash, ElementEq>;

// Finitely supported measure on a group with exact rational atoms. A step
// distribution is a Measure validated to be a symmetric probability measure;
// intermediate convolution results may be plain (sub-)measures.
struct Measure {
  GroupPtr group;
  AtomMap atoms;

  Rational mass() const;
  Rational at(const Element& e) const;
  std::size_t size() const { return atoms.size(); }
  // Atoms sorted by canonical key; the stable order used by samplers and I/O.
  std::vector<std::pair<std::string, Element>> sorted_support() const;
};

// Builds a validated step distribution: positive atoms, total mass exactly 1,
// symmetry atom(g) == atom(g^-1). If `witnesses` is non-empty, checks that
// BFS over the support reaches each witness within `witness_radius` (the
// generation check).
Measure make_step_distribution(GroupPtr group,
                               std::vector<std::pair<Element, Rational>> atoms,
                               const std::vector<Element>& witnesses = {},
                               int witness_radius = 12);

// Exact convolution a*b. Throws SupportOverflow when the support exceeds
// atom_cap, reporting the mass assembled so far.
Measure convolve(const Measure& a, const Measure& b, std::size_t atom_cap = 20000000);

// n-fold convolution of d (n >= 0; n = 0 is the point mass at the identity).
Measure convolve_power(const Measure& d, int n, std::size_t atom_cap = 20000000);

// Total variation distance (1/2) * sum |m1 - m2|, exact.
Rational tv_distance(const Measure& m1, const Measure& m2);

// Pushforward of m under left multiplication by g.
Measure translate_measure(const Element& g, const Measure& m);

// Membership of g in S_n(delta) = { g : tv(mu^(n), g mu^(n)) < delta },
// together with the exact TV value.
std::pair<bool, Rational> sn_delta_member(const Element& g, int n, const Rational& delta,
                                          const Measure& d, std::size_t atom_cap = 20000000);

// Exact pushforward of m to Z under phi.
std::map<long long, Rational> phi_projection(const Measure& m);

// True when the projection of m to Z is exactly the simple random walk law
// {-1: 1/2, +1: 1/2}.
bool phi_is_simple_random_walk(const Measure& m);

}  // namespace walklab
