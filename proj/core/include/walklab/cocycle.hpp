#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "walklab/measure.hpp"
#include "walklab/rational.hpp"
#include "walklab/schreier.hpp"
#include "walklab/wreath.hpp"

namespace walklab {

// Finitely supported rational field on Z; the slices b(g) of the explicit
// cocycles live here.
struct ZSlice {
  std::map<long long, Rational> v;

  Rational at(long long x) const {
    auto it = v.find(x);
    return it == v.end() ? Rational(0) : it->second;
  }
  void set(long long x, const Rational& r) {
    if (r == 0)
      v.erase(x);
    else
      v[x] = r;
  }
  void add(long long x, const Rational& r) { set(x, at(x) + r); }
  Rational norm2() const {
    Rational s = 0;
    for (const auto& [x, r] : v) s += r * r;
    return s;
  }
  bool zero() const { return v.empty(); }
  friend bool operator==(const ZSlice&, const ZSlice&) = default;
};

// ---------------------------------------------------------------------------
// Sym(Z) x| Z: the harmonic function h (identity on x <= 0, x - 2/3 above)
// and its cocycle b(g)(x) = h(x.g) - h(x) - T_g.
// ---------------------------------------------------------------------------

Rational symz_h(long long x);

// Window graph of the action on [-window, window]: generators shift,
// shift^-1, transposition of 0 and 1.
SchreierGraph symz_graph(long long window);
// The measure 1/4 shift + 1/4 shift^-1 + 1/2 transposition on that graph.
GraphMeasure symz_measure(const SchreierGraph& g);
// h evaluated on the graph verticesics.
RationalField symz_field(const SchreierGraph& g);

// Exact cocycle slice. Throws SupportEscapesWindow when the permutation part
// of g (or its translation) is not well inside the window.
ZSlice symz_cocycle(const SymZElem& g, long long window);

// Exact residual max_x |b(g1 g2)(x) - b(g1)(x) - b(g2)(x.g1)| with the
// natural action x.g = g(x).
Rational symz_cocycle_identity_residual(const SymZElem& g1, const SymZElem& g2,
                                        long long window);

// ---------------------------------------------------------------------------
// Z wr Z: the lamp-reading cocycle b(f,c)(x) = f(x) with the shift action
// x.(f,c) = x - c.
// ---------------------------------------------------------------------------

ZSlice zwz_cocycle(const WreathElem& g, long long window);
Rational zwz_cocycle_identity_residual(const WreathGroup& g, const WreathElem& g1,
                                       const WreathElem& g2, long long window);
// Exact value of sum_g theta(g) b(g) as a slice (theta a measure on Z wr Z).
ZSlice zwz_harmonicity_sum(const WreathGroup& g, const Measure& theta, long long window);

}  // namespace walklab
