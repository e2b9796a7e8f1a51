#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "walklab/rational.hpp"

namespace walklab {

// A finite window of the Schreier graph of a marked action: vertices with
// per-generator action maps (-1 where the window truncates the orbit) and an
// interior flag for vertices whose whole neighborhood is present.
struct SchreierGraph {
  std::vector<std::string> keys;
  std::unordered_map<std::string, int> index;
  std::vector<std::string> gen_names;
  std::vector<int> gen_inverse;          // generator index of the inverse action
  std::vector<std::vector<int>> act;     // act[g][v], -1 when missing
  std::vector<char> interior;
  int base = 0;

  int add_vertex(const std::string& key);
  int vertex(const std::string& key) const;  // -1 when absent
  int apply(int gen, int v) const { return act[gen][v]; }
  int num_vertices() const { return static_cast<int>(keys.size()); }
  // Marks as interior every vertex with all generator images present.
  void compute_interior();
  // BFS distance from `base` over all generator edges; -1 = unreached.
  std::vector<int> distances_from_base() const;
};

// Probability weights on the generators (plus an optional identity mass for
// lazy measures). Weights must sum to 1 with the identity mass.
struct GraphMeasure {
  std::vector<std::pair<int, Rational>> gen_weights;
  Rational identity_mass = 0;
  Rational total() const;
};

// Field of exact rational values on all vertices of a graph.
struct RationalField {
  std::vector<Rational> v;
};

struct RealField {
  std::vector<double> v;
};

// max over interior vertices of |sum_g w_g f(x.g) + w_id f(x) - f(x)|, exact.
Rational harmonicity_residual(const SchreierGraph& g, const RationalField& f,
                              const GraphMeasure& m);
std::vector<Rational> harmonicity_residuals(const SchreierGraph& g, const RationalField& f,
                                            const GraphMeasure& m);
double harmonicity_residual(const SchreierGraph& g, const RealField& f, const GraphMeasure& m);

// Solves the discrete Dirichlet problem: harmonic at free vertices, pinned
// elsewhere. Conjugate gradient on I - P with diagonal preconditioning; the
// measure must be symmetric along inverse generator pairs.
std::vector<double> dirichlet_solve(const SchreierGraph& g, const GraphMeasure& m,
                                    const std::vector<char>& pinned,
                                    const std::vector<double>& pinned_values,
                                    double tol = 1e-10, int max_iter = 100000);

struct GrowthPoint {
  int n = 0;
  double m_n = 0;         // max |value| over the BFS ball of radius n
  double m_over_n = 0;
  double log_m_over_n = 0;
};

// Growth profile M(n) of |values| over BFS balls around the base vertex,
// with a coarse classification hint.
struct GrowthProfile {
  std::vector<GrowthPoint> points;
  std::string hint;  // "constant", "sublinear", "linear", "superlinear"
};

GrowthProfile growth_profile(const SchreierGraph& g, const std::vector<double>& absvals,
                             const std::vector<int>& radii);

}  // namespace walklab
