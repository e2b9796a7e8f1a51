#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "walklab/measure.hpp"
#include "walklab/walk.hpp"

namespace walklab {

// Configuration of the paired mu^(R)-walk coupling for a finite subgroup F,
// normal in the kernel of phi. Built by build_coupling_config, which
// recomputes and validates every derived quantity exactly.
struct CouplingConfig {
  GroupPtr group;
  Measure mu;     // one-step distribution; its Z-projection must be the SRW law
  int R = 1;
  Measure muR;    // exact R-fold convolution
  Measure case_b;  // (muR - eps*u_F)/(1-eps), validated nonnegative atomwise
  std::vector<Element> F;
  Rational eps;
  Element gamma;
  long long x = 0;

  bool normality_ok = true;
  std::string normality_note;

  // Conjugate sets F^y, materialized on demand (mutable cache keyed by y).
  const std::unordered_set<std::string>* level_set(long long y) const;
  std::vector<Element> level_elements(long long y) const;

 private:
  mutable std::map<long long, std::unordered_set<std::string>> level_cache_;
};

CouplingConfig build_coupling_config(GroupPtr group, Measure mu, int R,
                                     std::vector<Element> F, Element gamma, long long x,
                                     bool enforce_normality = true,
                                     std::size_t atom_cap = 20000000);

enum class RecordLevel {
  TauOnly,  // cursor and coins only; the coupling time has the same law
  Full,     // both trajectories as group elements, with exact per-step checks
};

struct CoupleOptions {
  RecordLevel level = RecordLevel::Full;
  bool throw_on_violation = true;  // demo mode records the step instead
  bool record_case_tags = false;
  bool record_difference = false;
  bool record_increments = false;  // per-walk increment tallies (chi-square input)
};

struct CouplingRecord {
  std::uint64_t seed = 0;
  long long steps = 0;              // steps actually simulated
  long long tau = -1;               // coupling time; -1 = not coupled by horizon
  long long tau_r = -1;             // exit time when run with an exit interval
  bool exited_before_coupling = false;
  long long on_level_visits = 0;    // steps attempted from level x
  long long case_c_count = 0;
  long long first_violation = -1;   // step of the first membership failure
  std::string violation_note;
  std::vector<char> case_tags;      // 'a','b','c','p' per step (optional)
  std::vector<std::string> difference_keys;  // difference trace (optional)
  std::map<std::string, long long> z_increments;
  std::map<std::string, long long> zt_increments;
  bool coupled() const { return tau >= 0; }
};

// The paired walk: (a) off-level copy, (b) on-level residual copy with
// probability 1-eps, (c) on-level uniform-F step with the mirrored increment,
// probability eps. Runs to `horizon` or until coupled when stop_when_coupled.
CouplingRecord couple_main(const CouplingConfig& cfg, long long horizon, std::uint64_t seed,
                           const CoupleOptions& opt = {}, bool stop_when_coupled = true);

// Runs the same coupling until min(tau, tau_r) where tau_r is the first exit
// of the cursor from [-r, r]. Requires |x| <= r/2.
CouplingRecord couple_until_exit(const CouplingConfig& cfg, long long r, std::uint64_t seed,
                                 const CoupleOptions& opt = {});

struct TailPoint {
  long long n = 0;
  long long exceed_count = 0;  // #trials with tau > n
  long long trials = 0;
  double p_hat = 0;
  double stderr_ = 0;
  double sqrt_n_times_p = 0;
};

// Empirical tail P(tau > n) over the given n grid (one simulation per trial,
// horizon = max n).
std::vector<TailPoint> tail_profile(const CouplingConfig& cfg, const std::vector<long long>& ns,
                                    long long trials, std::uint64_t seed);

struct ExitPoint {
  long long r = 0;
  long long not_coupled_count = 0;
  long long trials = 0;
  double p_hat = 0;  // P(tau > tau_r)
  double stderr_ = 0;
  double r_times_p = 0;
};

std::vector<ExitPoint> exit_profile(const CouplingConfig& cfg, const std::vector<long long>& rs,
                                    long long trials, std::uint64_t seed);

// ---------------------------------------------------------------------------
// FC-center coupling: for gamma with a finite conjugacy class, the difference
// walks inside the union of conjugated cyclic subgroups <gamma>^{g_i} and the
// coupling time is exactly Geometric(eps).
// ---------------------------------------------------------------------------

struct FcCouplingConfig {
  GroupPtr group;
  Measure mu;
  int R = 1;
  Element gamma;
  int gamma_order = 1;
  std::vector<Element> conj_class;                    // conjugacy class of gamma
  std::vector<std::vector<Element>> subgroups;        // distinct <c>, c in class
  Rational eps;
  // element key -> (subgroup index, power); covers the union of subgroups.
  std::unordered_map<std::string, std::pair<int, int>> locate;
  // exact muR probabilities on the union (for the acceptance step).
  std::unordered_map<std::string, Rational> union_prob;
  std::shared_ptr<Measure> muR_sampler_source;
};

FcCouplingConfig build_fc_config(GroupPtr group, Measure mu, Element gamma,
                                 std::size_t class_cap = 100000, int r_max = 8,
                                 std::size_t atom_cap = 20000000);

struct FcRecord {
  std::uint64_t seed = 0;
  long long steps = 0;
  long long tau = -1;
  std::vector<std::string> difference_keys;  // optional
  bool coupled() const { return tau >= 0; }
};

FcRecord couple_fc(const FcCouplingConfig& cfg, const Element& x_start, long long horizon,
                   std::uint64_t seed, bool record_difference = false);

// ---------------------------------------------------------------------------
// Demonstration of why normality of F in the kernel is needed: running the
// same machinery on Sym(Z) x| Z with F = <transposition> makes the tracked
// difference leave the conjugate set. Violation is the expected outcome.
// ---------------------------------------------------------------------------

struct NonNormalReport {
  bool violation_observed = false;
  long long violation_step = -1;
  std::string note;
  CouplingConfig cfg;  // the (invalid) configuration used
};

NonNormalReport non_normal_demo(std::uint64_t seed, long long horizon = 1000,
                                bool gamma_identity = false);

}  // namespace walklab
