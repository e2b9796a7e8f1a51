#include "walklab/word_metric.hpp"

#include <algorithm>
#include <deque>

#include "walklab/errors.hpp"

namespace walklab {

long long word_length_lamplighter_line(const WreathGroup& g, const WreathElem& e) {
  if (g.base().is_cycle() || g.base().dim() != 1)
    throw MetricUnavailable("lamplighter line metric needs base Z");
  if (g.lamp().kind() != LampGroup::Kind::Table)
    throw MetricUnavailable("lamplighter line metric needs a finite lamp group");
  const long long x = e.pos;
  long long l = std::min<long long>(0, x);
  long long r = std::max<long long>(0, x);
  for (const auto& [site, v] : e.lamps) {
    l = std::min(l, site);
    r = std::max(r, site);
  }
  long long travel = (r - l) + std::min((0 - l) + (r - x), (r - 0) + (x - l));
  return static_cast<long long>(e.lamps.size()) + travel;
}

BfsBall bfs_ball(const Group& g, const std::vector<Element>& gens, int radius,
                 std::size_t node_cap) {
  BfsBall ball;
  ball.radius = radius;
  std::deque<Element> frontier;
  Element id = g.identity();
  ball.dist.emplace(id, 0);
  frontier.push_back(id);
  int d = 0;
  while (d < radius && !frontier.empty()) {
    std::deque<Element> next;
    for (const auto& cur : frontier) {
      for (const auto& s : gens) {
        Element e = g.mul(cur, s);
        if (ball.dist.emplace(e, d + 1).second) {
          if (ball.dist.size() > node_cap)
            throw MemoryCap("bfs_ball: ball exceeds node cap");
          next.push_back(std::move(e));
        }
      }
    }
    frontier = std::move(next);
    ++d;
  }
  return ball;
}

std::optional<std::vector<Element>> conjugacy_closure(const Group& g, const Element& e,
                                                      const std::vector<Element>& gens,
                                                      std::size_t cap) {
  std::unordered_map<Element, char, ElementHash, ElementEq> seen;
  std::deque<Element> frontier;
  seen.emplace(e, 1);
  frontier.push_back(e);
  while (!frontier.empty()) {
    Element cur = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& s : gens) {
      Element c = g.conj(cur, s);
      if (seen.emplace(c, 1).second) {
        if (seen.size() > cap) return std::nullopt;
        frontier.push_back(std::move(c));
      }
    }
  }
  std::vector<Element> out;
  out.reserve(seen.size());
  for (const auto& [el, tag] : seen) out.push_back(el);
  return out;
}

std::optional<int> word_length_bfs(const Group& g, const Element& e,
                                   const std::vector<Element>& gens, int radius_cap,
                                   std::size_t node_cap) {
  if (g.is_identity(e)) return 0;
  std::unordered_map<Element, int, ElementHash, ElementEq> dist;
  std::deque<Element> frontier;
  Element id = g.identity();
  dist.emplace(id, 0);
  frontier.push_back(id);
  int d = 0;
  while (d < radius_cap && !frontier.empty()) {
    std::deque<Element> next;
    for (const auto& cur : frontier) {
      for (const auto& s : gens) {
        Element n = g.mul(cur, s);
        if (n == e) return d + 1;
        if (dist.emplace(n, d + 1).second) {
          if (dist.size() > node_cap) throw MemoryCap("word_length_bfs: node cap");
          next.push_back(std::move(n));
        }
      }
    }
    frontier = std::move(next);
    ++d;
  }
  return std::nullopt;
}

}  // namespace walklab
