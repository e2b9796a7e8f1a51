#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "walklab/group.hpp"
#include "walklab/wreath.hpp"

namespace walklab {

// Exact word length on F wr Z with generating set {t, t^-1} plus the
// nontrivial lamp-group elements at cost 1: lamp count plus the shorter of
// the two sweeps over the occupied interval.
long long word_length_lamplighter_line(const WreathGroup& g, const WreathElem& e);

// Distances of the ball of radius <= `radius` around the identity, by
// breadth-first search over the given symmetric generator list. Throws
// MemoryCap past node_cap.
struct BfsBall {
  std::unordered_map<Element, int, ElementHash, ElementEq> dist;
  int radius = 0;
};

BfsBall bfs_ball(const Group& g, const std::vector<Element>& gens, int radius,
                 std::size_t node_cap = 5000000);

// Exact Cayley distance by BFS, or nullopt when the element was not reached
// within radius_cap.
std::optional<int> word_length_bfs(const Group& g, const Element& e,
                                   const std::vector<Element>& gens, int radius_cap,
                                   std::size_t node_cap = 5000000);

// Closure of {e} under conjugation by the generator list; nullopt once the
// closure exceeds `cap` (suspected infinite class).
std::optional<std::vector<Element>> conjugacy_closure(const Group& g, const Element& e,
                                                      const std::vector<Element>& gens,
                                                      std::size_t cap);

}  // namespace walklab
