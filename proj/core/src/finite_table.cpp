#include "walklab/finite_table.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "walklab/errors.hpp"

namespace walklab {

Perm perm_compose(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}

Perm perm_inverse(const Perm& a) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<int>(i);
  return r;
}

std::string perm_cycles(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    any = true;
    os << '(';
    std::size_t j = i;
    bool first = true;
    do {
      if (!first) os << ' ';
      os << j;
      first = false;
      seen[j] = true;
      j = static_cast<std::size_t>(p[j]);
    } while (j != i);
    os << ')';
  }
  if (!any) return "()";
  return os.str();
}

FiniteGroupTable FiniteGroupTable::from_permutations(const std::vector<Perm>& generators,
                                                     std::size_t cap) {
  if (generators.empty()) throw ConfigError("from_permutations: no generators");
  const std::size_t domain = generators[0].size();
  for (const auto& g : generators) {
    if (g.size() != domain) throw ConfigError("from_permutations: mixed domains");
    Perm check = g;
    std::sort(check.begin(), check.end());
    for (std::size_t i = 0; i < domain; ++i)
      if (check[i] != static_cast<int>(i))
        throw ConfigError("from_permutations: not a permutation");
  }

  Perm identity(domain);
  std::iota(identity.begin(), identity.end(), 0);

  std::map<Perm, int> index;
  std::vector<Perm> elems;
  std::queue<int> todo;
  index[identity] = 0;
  elems.push_back(identity);
  todo.push(0);
  while (!todo.empty()) {
    int cur = todo.front();
    todo.pop();
    for (const auto& g : generators) {
      Perm next = perm_compose(elems[cur], g);
      if (index.emplace(next, static_cast<int>(elems.size())).second) {
        if (elems.size() >= cap)
          throw ClosureOverflow("from_permutations: order exceeds cap", cap);
        elems.push_back(std::move(next));
        todo.push(static_cast<int>(elems.size()) - 1);
      }
    }
  }

  const int n = static_cast<int>(elems.size());
  FiniteGroupTable t;
  t.mul_.assign(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      t.mul_[static_cast<std::size_t>(a) * n + b] = index.at(perm_compose(elems[a], elems[b]));
  t.names_.resize(n);
  for (int a = 0; a < n; ++a) t.names_[a] = perm_cycles(elems[a]);
  t.perms_ = std::move(elems);
  std::vector<int> gen_ids;
  for (const auto& g : generators) gen_ids.push_back(index.at(g));
  t.mark("gens", gen_ids);
  t.finish();
  return t;
}

FiniteGroupTable FiniteGroupTable::cyclic(int m) {
  FiniteGroupTable t;
  t.mul_.assign(static_cast<std::size_t>(m) * m, 0);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) t.mul_[static_cast<std::size_t>(a) * m + b] = (a + b) % m;
  t.names_.resize(m);
  for (int a = 0; a < m; ++a) t.names_[a] = std::to_string(a);
  t.mark("gens", {m > 1 ? 1 : 0});
  t.finish();
  return t;
}

FiniteGroupTable FiniteGroupTable::symmetric(int n) {
  if (n < 2 || n > 6) throw ConfigError("symmetric: supported range is 2..6");
  std::vector<Perm> gens;
  Perm swap01(n);
  std::iota(swap01.begin(), swap01.end(), 0);
  std::swap(swap01[0], swap01[1]);
  Perm cyc(n);
  for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
  gens.push_back(swap01);
  gens.push_back(cyc);
  return from_permutations(gens);
}

FiniteGroupTable FiniteGroupTable::dihedral_8() {
  // Two reflections of the square whose product is the rotation of order 4.
  Perm a = {1, 0, 3, 2};
  Perm b = {0, 3, 2, 1};
  auto t = from_permutations({a, b});
  if (t.order() != 8) throw ConfigError("dihedral_8: unexpected closure");
  return t;
}

FiniteGroupTable FiniteGroupTable::direct_product(const FiniteGroupTable& a,
                                                  const FiniteGroupTable& b) {
  FiniteGroupTable t;
  const int na = a.order(), nb = b.order(), n = na * nb;
  t.b_order_ = nb;
  t.mul_.assign(static_cast<std::size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int xa = x / nb, xb = x % nb, ya = y / nb, yb = y % nb;
      t.mul_[static_cast<std::size_t>(x) * n + y] = a.mul(xa, ya) * nb + b.mul(xb, yb);
    }
  t.names_.resize(n);
  for (int x = 0; x < n; ++x)
    t.names_[x] = "(" + a.name(x / nb) + "," + b.name(x % nb) + ")";
  t.finish();
  return t;
}

void FiniteGroupTable::finish() {
  const int n = static_cast<int>(names_.size());
  inv_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    if (mul(0, a) != a || mul(a, 0) != a)
      throw ConfigError("table: index 0 is not a two-sided identity");
    for (int b = 0; b < n; ++b)
      if (mul(a, b) == 0) {
        inv_[a] = b;
        break;
      }
    if (inv_[a] < 0) throw ConfigError("table: missing inverse");
    if (mul(inv_[a], a) != 0) throw ConfigError("table: one-sided inverse");
  }
  if (n <= 512) check_axioms();
}

void FiniteGroupTable::check_axioms() const {
  const int n = order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw ConfigError("table: associativity fails");
}

int FiniteGroupTable::element_order(int a) const {
  int k = 1, x = a;
  while (x != 0) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

bool FiniteGroupTable::is_abelian() const {
  for (int a = 0; a < order(); ++a)
    for (int b = a + 1; b < order(); ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

int FiniteGroupTable::find(const std::string& n) const {
  for (int a = 0; a < order(); ++a)
    if (names_[a] == n) return a;
  return -1;
}

const std::vector<int>& FiniteGroupTable::marked(const std::string& role) const {
  auto it = marked_.find(role);
  if (it == marked_.end()) throw ConfigError("no marked subset named '" + role + "'");
  return it->second;
}

std::vector<int> FiniteGroupTable::subgroup_closure(std::vector<int> seed) const {
  std::set<int> have(seed.begin(), seed.end());
  have.insert(0);
  std::queue<int> todo;
  for (int s : have) todo.push(s);
  while (!todo.empty()) {
    int cur = todo.front();
    todo.pop();
    for (int s : seed) {
      int p = mul(cur, s);
      if (have.insert(p).second) todo.push(p);
      p = mul(cur, inv(s));
      if (have.insert(p).second) todo.push(p);
    }
  }
  return std::vector<int>(have.begin(), have.end());
}

std::vector<int> FiniteGroupTable::normal_closure(const std::vector<int>& seed) const {
  std::set<int> conj_set;
  for (int s : seed)
    for (int g = 0; g < order(); ++g) conj_set.insert(conj(s, g));
  return subgroup_closure(std::vector<int>(conj_set.begin(), conj_set.end()));
}

std::vector<int> FiniteGroupTable::coset_reps(const std::vector<int>& n) const {
  std::vector<int> rep(order(), -1);
  for (int g = 0; g < order(); ++g) {
    if (rep[g] >= 0) continue;
    int best = g;
    for (int h : n) best = std::min(best, mul(g, h));
    for (int h : n) rep[mul(g, h)] = best;
  }
  return rep;
}

std::vector<int> FiniteGroupTable::conjugacy_class(int a) const {
  std::set<int> cls;
  for (int g = 0; g < order(); ++g) cls.insert(conj(a, g));
  return std::vector<int>(cls.begin(), cls.end());
}

}  // namespace walklab
