#include "walklab/walk.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "walklab/errors.hpp"
#include "walklab/parallel.hpp"
#include "walklab/word_metric.hpp"
#include "walklab/wreath.hpp"

namespace walklab {

MeasureSampler::MeasureSampler(const Measure& m) {
  auto sorted = m.sorted_support();
  double acc = 0;
  const bool has_phi = m.group->has_phi();
  for (const auto& [k, e] : sorted) {
    Rational p = m.at(e);
    elems_.push_back(e);
    keys_.push_back(k);
    phis_.push_back(has_phi ? m.group->phi(e) : 0);
    probs_.push_back(p);
    acc += rat_double(p);
    cum_.push_back(acc);
  }
  if (!cum_.empty()) cum_.back() = 1.0;  // absorb rounding in the last atom
}

int MeasureSampler::sample(Rng& rng) const {
  double u = rng.uniform();
  auto it = std::upper_bound(cum_.begin(), cum_.end(), u);
  if (it == cum_.end()) --it;
  return static_cast<int>(it - cum_.begin());
}

WalkTrace sample_walk(const Measure& d, int n, std::uint64_t seed) {
  if (n < 0) throw ConfigError("sample_walk: negative n");
  MeasureSampler sampler(d);
  WalkTrace t;
  t.seed = seed;
  Rng rng(seed, 0);
  Element pos = d.group->identity();
  const bool has_phi = d.group->has_phi();
  t.positions.push_back(pos);
  if (has_phi) t.projections.push_back(0);
  for (int i = 0; i < n; ++i) {
    int a = sampler.sample(rng);
    t.steps.push_back(a);
    t.step_keys.push_back(sampler.key(a));
    pos = d.group->mul(pos, sampler.element(a));
    t.positions.push_back(pos);
    if (has_phi) t.projections.push_back(d.group->phi(pos));
  }
  return t;
}

long long local_time(const WalkTrace& trace, long long x) {
  long long c = 0;
  for (long long p : trace.projections)
    if (p == x) ++c;
  return c;
}

namespace {

// Projected one-dimensional sampler: (phi value, cumulative prob).
struct PhiSampler {
  std::vector<long long> vals;
  std::vector<double> cum;
  explicit PhiSampler(const Measure& d) {
    // Atom-level cumulative table in canonical order; collapsing equal phi
    // values is not needed for sampling.
    MeasureSampler s(d);
    double acc = 0;
    for (int i = 0; i < s.size(); ++i) {
      vals.push_back(s.phi(i));
      acc += rat_double(s.prob(i));
      cum.push_back(acc);
    }
    if (!cum.empty()) cum.back() = 1.0;
  }
  long long step(Rng& rng) const {
    double u = rng.uniform();
    auto it = std::upper_bound(cum.begin(), cum.end(), u);
    if (it == cum.end()) --it;
    return vals[it - cum.begin()];
  }
};

MonteCarloEstimate summarize(const std::vector<double>& xs) {
  MonteCarloEstimate e;
  e.trials = static_cast<long long>(xs.size());
  double s = 0;
  for (double x : xs) s += x;
  e.mean = e.trials ? s / static_cast<double>(e.trials) : 0;
  if (e.trials > 1) {
    double ss = 0;
    for (double x : xs) ss += (x - e.mean) * (x - e.mean);
    e.stderr_ = std::sqrt(ss / (static_cast<double>(e.trials - 1))) /
                std::sqrt(static_cast<double>(e.trials));
  }
  return e;
}

}  // namespace

MonteCarloEstimate local_time_event_probability(const Measure& d, long long n, double c1,
                                                double c2, double delta, long long trials,
                                                std::uint64_t seed) {
  PhiSampler sampler(d);
  const long long window = static_cast<long long>(std::floor(c1 * std::sqrt((double)n)));
  const double threshold = c2 * std::pow(static_cast<double>(n), 0.5 - delta);
  std::vector<double> hits(static_cast<std::size_t>(trials), 0.0);
  parallel_for(static_cast<std::size_t>(trials), [&](std::size_t trial) {
    Rng rng(seed, trial);
    // counts[i] = L(i - n, n); only |x| <= window is inspected at the end.
    std::vector<long long> counts(static_cast<std::size_t>(2 * window + 1), 0);
    long long pos = 0;
    auto tally = [&](long long x) {
      if (x >= -window && x <= window) ++counts[static_cast<std::size_t>(x + window)];
    };
    tally(0);
    for (long long i = 0; i < n; ++i) {
      pos += sampler.step(rng);
      tally(pos);
    }
    bool ok = true;
    for (long long x = -window; x <= window && ok; ++x)
      if (static_cast<double>(counts[static_cast<std::size_t>(x + window)]) < threshold)
        ok = false;
    hits[trial] = ok ? 1.0 : 0.0;
  });
  return summarize(hits);
}

namespace {

// In-place walker for F wr Z with a finite lamp table; avoids rebuilding the
// lamp configuration on every step.
struct LamplighterWalker {
  const WreathGroup& g;
  const FiniteGroupTable& table;
  std::unordered_map<long long, int> lamps;
  long long cursor = 0;

  explicit LamplighterWalker(const WreathGroup& wg) : g(wg), table(wg.lamp().table()) {}

  void apply(const WreathElem& atom) {
    for (const auto& [site, v] : atom.lamps) {
      long long s = g.base().add(cursor, site);
      int idx = std::get<TableElem>(v).idx;
      auto it = lamps.find(s);
      int merged = it == lamps.end() ? idx : table.mul(it->second, idx);
      if (merged == 0) {
        if (it != lamps.end()) lamps.erase(it);
      } else {
        lamps[s] = merged;
      }
    }
    cursor = g.base().add(cursor, atom.pos);
  }

  long long line_word_length() const {
    long long l = std::min<long long>(0, cursor);
    long long r = std::max<long long>(0, cursor);
    for (const auto& [site, v] : lamps) {
      l = std::min(l, site);
      r = std::max(r, site);
    }
    long long travel = (r - l) + std::min((0 - l) + (r - cursor), (r - 0) + (cursor - l));
    return static_cast<long long>(lamps.size()) + travel;
  }
};

}  // namespace

MonteCarloEstimate speed_estimate(const Measure& d, long long n, long long trials,
                                  std::uint64_t seed, SpeedMetric metric, int bfs_radius_cap) {
  std::vector<double> dist(static_cast<std::size_t>(trials), 0.0);

  if (metric == SpeedMetric::PhiAbs) {
    if (!d.group->has_phi()) throw MetricUnavailable("phi-abs metric: no projection to Z");
    PhiSampler sampler(d);
    parallel_for(static_cast<std::size_t>(trials), [&](std::size_t trial) {
      Rng rng(seed, trial);
      long long pos = 0;
      for (long long i = 0; i < n; ++i) pos += sampler.step(rng);
      dist[trial] = static_cast<double>(pos < 0 ? -pos : pos);
    });
    return summarize(dist);
  }

  if (metric == SpeedMetric::LamplighterLine) {
    const auto* wg = dynamic_cast<const WreathGroup*>(d.group.get());
    if (!wg || wg->base().is_cycle() || wg->base().dim() != 1 ||
        wg->lamp().kind() != LampGroup::Kind::Table)
      throw MetricUnavailable("lamplighter line metric needs F wr Z");
    MeasureSampler sampler(d);
    std::vector<WreathElem> atoms;
    for (int i = 0; i < sampler.size(); ++i)
      atoms.push_back(std::get<WreathElem>(sampler.element(i)));
    parallel_for(static_cast<std::size_t>(trials), [&](std::size_t trial) {
      Rng rng(seed, trial);
      LamplighterWalker w(*wg);
      for (long long i = 0; i < n; ++i) w.apply(atoms[sampler.sample(rng)]);
      dist[trial] = static_cast<double>(w.line_word_length());
    });
    return summarize(dist);
  }

  // BFS metric: generic element walk, distance via breadth-first search over
  // the support. Intended for small n only.
  MeasureSampler sampler(d);
  std::vector<Element> gens;
  for (int i = 0; i < sampler.size(); ++i) gens.push_back(sampler.element(i));
  parallel_for(static_cast<std::size_t>(trials), [&](std::size_t trial) {
    Rng rng(seed, trial);
    Element pos = d.group->identity();
    for (long long i = 0; i < n; ++i) pos = d.group->mul(pos, sampler.element(sampler.sample(rng)));
    auto len = word_length_bfs(*d.group, pos, gens, bfs_radius_cap);
    if (!len) throw MetricUnavailable("bfs metric: element beyond radius cap");
    dist[trial] = static_cast<double>(*len);
  });
  return summarize(dist);
}

MonteCarloEstimate mean_phi(const Measure& d, long long n, long long trials,
                            std::uint64_t seed) {
  if (!d.group->has_phi()) throw MetricUnavailable("mean_phi: no projection to Z");
  PhiSampler sampler(d);
  std::vector<double> xs(static_cast<std::size_t>(trials), 0.0);
  parallel_for(static_cast<std::size_t>(trials), [&](std::size_t trial) {
    Rng rng(seed, trial);
    long long pos = 0;
    for (long long i = 0; i < n; ++i) pos += sampler.step(rng);
    xs[trial] = static_cast<double>(pos);
  });
  return summarize(xs);
}

}  // namespace walklab
