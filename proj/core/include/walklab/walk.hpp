#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "walklab/measure.hpp"
#include "walklab/rng.hpp"

namespace walklab {

// Draws atoms of a measure with the exact probabilities (converted once to a
// cumulative double table; atoms in canonical-key order so the draw sequence
// is reproducible across platforms and runs).
class MeasureSampler {
 public:
  explicit MeasureSampler(const Measure& m);

  int sample(Rng& rng) const;  // atom index
  int size() const { return static_cast<int>(elems_.size()); }
  const Element& element(int i) const { return elems_[i]; }
  const std::string& key(int i) const { return keys_[i]; }
  long long phi(int i) const { return phis_[i]; }
  const Rational& prob(int i) const { return probs_[i]; }

 private:
  std::vector<Element> elems_;
  std::vector<std::string> keys_;
  std::vector<long long> phis_;  // 0 when the group has no projection
  std::vector<Rational> probs_;
  std::vector<double> cum_;
};

// Full trace of a sampled walk Z_0 = e, Z_{m+1} = Z_m X_{m+1}.
struct WalkTrace {
  std::uint64_t seed = 0;
  std::vector<int> steps;              // atom indices into the sampler order
  std::vector<std::string> step_keys;
  std::vector<Element> positions;      // length n+1
  std::vector<long long> projections;  // phi(Z_m), when available
};

WalkTrace sample_walk(const Measure& d, int n, std::uint64_t seed);

// L(x,n) = |{0 <= m <= n : phi(Z_m) = x}|.
long long local_time(const WalkTrace& trace, long long x);

struct MonteCarloEstimate {
  double mean = 0;
  double stderr_ = 0;
  long long trials = 0;
};

// P( L(x,n) >= c2 * n^(1/2-delta) for every integer x in [-c1 sqrt(n), c1 sqrt(n)] ),
// estimated over the projected walk.
MonteCarloEstimate local_time_event_probability(const Measure& d, long long n, double c1,
                                                double c2, double delta, long long trials,
                                                std::uint64_t seed);

enum class SpeedMetric { PhiAbs, LamplighterLine, Bfs };

// Monte Carlo estimate of E d(e, Z_n) under the named metric. No fallback:
// requesting a metric the group does not support throws MetricUnavailable.
MonteCarloEstimate speed_estimate(const Measure& d, long long n, long long trials,
                                  std::uint64_t seed, SpeedMetric metric,
                                  int bfs_radius_cap = 12);

// Mean of phi(Z_n) over independent trials (diagnostic used by tests).
MonteCarloEstimate mean_phi(const Measure& d, long long n, long long trials,
                            std::uint64_t seed);

}  // namespace walklab
