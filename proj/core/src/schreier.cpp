#include "walklab/schreier.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "walklab/errors.hpp"

namespace walklab {

int SchreierGraph::add_vertex(const std::string& key) {
  auto it = index.find(key);
  if (it != index.end()) return it->second;
  int id = static_cast<int>(keys.size());
  keys.push_back(key);
  index.emplace(key, id);
  for (auto& a : act) a.push_back(-1);
  return id;
}

int SchreierGraph::vertex(const std::string& key) const {
  auto it = index.find(key);
  return it == index.end() ? -1 : it->second;
}

void SchreierGraph::compute_interior() {
  interior.assign(keys.size(), 1);
  for (std::size_t v = 0; v < keys.size(); ++v)
    for (const auto& a : act)
      if (a[v] < 0) {
        interior[v] = 0;
        break;
      }
}

std::vector<int> SchreierGraph::distances_from_base() const {
  std::vector<int> dist(keys.size(), -1);
  std::deque<int> q;
  dist[base] = 0;
  q.push_back(base);
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (const auto& a : act) {
      int w = a[v];
      if (w >= 0 && dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push_back(w);
      }
    }
  }
  return dist;
}

Rational GraphMeasure::total() const {
  Rational t = identity_mass;
  for (const auto& [g, w] : gen_weights) t += w;
  return t;
}

std::vector<Rational> harmonicity_residuals(const SchreierGraph& g, const RationalField& f,
                                            const GraphMeasure& m) {
  std::vector<Rational> res(g.keys.size(), Rational(0));
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (!g.interior[v]) continue;
    Rational s = m.identity_mass * f.v[v];
    for (const auto& [gi, w] : m.gen_weights) {
      int u = g.apply(gi, v);
      if (u < 0) throw BoundaryTouched("residual: interior vertex with missing neighbor");
      s += w * f.v[u];
    }
    res[v] = s - f.v[v];
  }
  return res;
}

Rational harmonicity_residual(const SchreierGraph& g, const RationalField& f,
                              const GraphMeasure& m) {
  Rational mx = 0;
  for (auto& r : harmonicity_residuals(g, f, m)) mx = std::max(mx, rat_abs(r));
  return mx;
}

double harmonicity_residual(const SchreierGraph& g, const RealField& f, const GraphMeasure& m) {
  double mx = 0;
  double id_w = rat_double(m.identity_mass);
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (!g.interior[v]) continue;
    double s = id_w * f.v[v];
    for (const auto& [gi, w] : m.gen_weights) {
      int u = g.apply(gi, v);
      if (u < 0) throw BoundaryTouched("residual: interior vertex with missing neighbor");
      s += rat_double(w) * f.v[u];
    }
    mx = std::max(mx, std::fabs(s - f.v[v]));
  }
  return mx;
}

std::vector<double> dirichlet_solve(const SchreierGraph& g, const GraphMeasure& m,
                                    const std::vector<char>& pinned,
                                    const std::vector<double>& pinned_values,
                                    double tol, int max_iter) {
  const int n = g.num_vertices();
  std::vector<int> free_id(n, -1);
  std::vector<int> free_list;
  for (int v = 0; v < n; ++v)
    if (!pinned[v]) {
      free_id[v] = static_cast<int>(free_list.size());
      free_list.push_back(v);
    }
  const int nf = static_cast<int>(free_list.size());
  std::vector<double> u(n, 0);
  for (int v = 0; v < n; ++v)
    if (pinned[v]) u[v] = pinned_values[v];
  if (nf == 0) return u;

  std::vector<double> w_gen;
  for (const auto& [gi, w] : m.gen_weights) w_gen.push_back(rat_double(w));
  const double diag = 1.0 - rat_double(m.identity_mass);

  // A x = b with A = (1 - w_id) I - sum_g w_g S_g restricted to free vertices.
  auto apply_A = [&](const std::vector<double>& x, std::vector<double>& out) {
    for (int i = 0; i < nf; ++i) {
      int v = free_list[i];
      double s = diag * x[i];
      int k = 0;
      for (const auto& [gi, w] : m.gen_weights) {
        int nb = g.apply(gi, v);
        if (nb < 0) throw BoundaryTouched("dirichlet: free vertex touches the cut");
        if (free_id[nb] >= 0) s -= w_gen[k] * x[free_id[nb]];
        ++k;
      }
      out[i] = s;
    }
  };

  std::vector<double> b(nf, 0);
  for (int i = 0; i < nf; ++i) {
    int v = free_list[i];
    double s = 0;
    int k = 0;
    for (const auto& [gi, w] : m.gen_weights) {
      int nb = g.apply(gi, v);
      if (nb >= 0 && free_id[nb] < 0) s += w_gen[k] * u[nb];
      ++k;
    }
    b[i] = s;
  }

  std::vector<double> x(nf, 0), r = b, z(nf), p(nf), ap(nf);
  const double pre = 1.0 / diag;
  for (int i = 0; i < nf; ++i) z[i] = pre * r[i];
  p = z;
  double rz = 0;
  for (int i = 0; i < nf; ++i) rz += r[i] * z[i];
  double b_norm = 0;
  for (int i = 0; i < nf; ++i) b_norm = std::max(b_norm, std::fabs(b[i]));
  if (b_norm == 0) b_norm = 1;

  int it = 0;
  for (; it < max_iter; ++it) {
    double r_inf = 0;
    for (int i = 0; i < nf; ++i) r_inf = std::max(r_inf, std::fabs(r[i]));
    if (r_inf <= tol * b_norm) break;
    apply_A(p, ap);
    double pap = 0;
    for (int i = 0; i < nf; ++i) pap += p[i] * ap[i];
    if (pap <= 0) throw SolverDiverged("dirichlet: CG breakdown");
    double alpha = rz / pap;
    for (int i = 0; i < nf; ++i) {
      x[i] += alpha * p[i];
      r[i] -= alpha * ap[i];
    }
    double rz_new = 0;
    for (int i = 0; i < nf; ++i) {
      z[i] = pre * r[i];
      rz_new += r[i] * z[i];
    }
    double beta = rz_new / rz;
    rz = rz_new;
    for (int i = 0; i < nf; ++i) p[i] = z[i] + beta * p[i];
  }
  if (it >= max_iter) throw SolverDiverged("dirichlet: CG did not converge");

  for (int i = 0; i < nf; ++i) u[free_list[i]] = x[i];
  return u;
}

GrowthProfile growth_profile(const SchreierGraph& g, const std::vector<double>& absvals,
                             const std::vector<int>& radii) {
  auto dist = g.distances_from_base();
  GrowthProfile out;
  for (int n : radii) {
    GrowthPoint pt;
    pt.n = n;
    double m = 0;
    for (int v = 0; v < g.num_vertices(); ++v)
      if (dist[v] >= 0 && dist[v] <= n) m = std::max(m, std::fabs(absvals[v]));
    pt.m_n = m;
    pt.m_over_n = n > 0 ? m / n : m;
    pt.log_m_over_n = n > 0 && m > 0 ? std::log(m) / n : 0;
    out.points.push_back(pt);
  }
  // Coarse hint from the last two points.
  if (out.points.size() >= 2) {
    const auto& a = out.points[out.points.size() - 2];
    const auto& b = out.points.back();
    if (b.m_n == a.m_n)
      out.hint = "constant";
    else if (b.m_over_n > 1e-9 && std::fabs(b.m_over_n - a.m_over_n) < 0.1 * b.m_over_n)
      out.hint = "linear";
    else if (b.m_over_n < a.m_over_n)
      out.hint = "sublinear";
    else
      out.hint = "superlinear";
  } else {
    out.hint = "unknown";
  }
  return out;
}

}  // namespace walklab
