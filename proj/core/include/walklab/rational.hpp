#pragma once

#include <gmpxx.h>

#include <string>

namespace walklab {

// Exact rational arithmetic. All measure algebra, harmonicity residuals and
// energy sums are carried out in Rational; floats appear only in Monte Carlo
// summaries and in the sparse linear solver.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) { return Rational(num, den); }

// Canonical "p/q" form ("p" when q == 1).
inline std::string rat_str(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline double rat_double(const Rational& r) { return r.get_d(); }

inline Rational rat_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

}  // namespace walklab
