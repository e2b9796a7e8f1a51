#include "walklab/coupling.hpp"

#include <algorithm>
#include <cmath>

#include "walklab/errors.hpp"
#include "walklab/parallel.hpp"
#include "walklab/word_metric.hpp"
#include "walklab/wreath.hpp"

namespace walklab {

const std::unordered_set<std::string>* CouplingConfig::level_set(long long y) const {
  auto it = level_cache_.find(y);
  if (it == level_cache_.end()) {
    Element lift = group->section(y);
    std::unordered_set<std::string> keys;
    for (const auto& f : F) keys.insert(group->key(group->conj(f, lift)));
    it = level_cache_.emplace(y, std::move(keys)).first;
  }
  return &it->second;
}

std::vector<Element> CouplingConfig::level_elements(long long y) const {
  Element lift = group->section(y);
  std::vector<Element> out;
  out.reserve(F.size());
  for (const auto& f : F) out.push_back(group->conj(f, lift));
  return out;
}

CouplingConfig build_coupling_config(GroupPtr group, Measure mu, int R,
                                     std::vector<Element> F, Element gamma, long long x,
                                     bool enforce_normality, std::size_t atom_cap) {
  CouplingConfig cfg;
  cfg.group = group;
  if (!group->has_phi()) throw ConfigError("coupling: group has no projection to Z");
  if (!phi_is_simple_random_walk(mu))
    throw ConfigError("coupling: projection of mu to Z is not the simple random walk law");
  cfg.mu = std::move(mu);
  cfg.R = R;
  cfg.muR = convolve_power(cfg.mu, R, atom_cap);

  if (F.empty()) throw ConfigError("coupling: F is empty");
  // F must be a finite subgroup of the kernel of phi.
  std::unordered_set<std::string> fkeys;
  for (const auto& f : F) fkeys.insert(group->key(f));
  if (!fkeys.count(group->key(group->identity())))
    throw ConfigError("coupling: F does not contain the identity");
  for (const auto& f : F) {
    if (group->phi(f) != 0) throw ConfigError("coupling: F is not inside ker(phi)");
    if (!fkeys.count(group->key(group->inv(f))))
      throw ConfigError("coupling: F not closed under inversion");
    for (const auto& g : F)
      if (!fkeys.count(group->key(group->mul(f, g))))
        throw ConfigError("coupling: F not closed under multiplication");
  }
  cfg.F = std::move(F);
  std::sort(cfg.F.begin(), cfg.F.end(), [&](const Element& a, const Element& b) {
    return group->key(a) < group->key(b);
  });

  // eps = |F| * inf_F muR, recomputed exactly.
  Rational minp = -1;
  for (const auto& f : cfg.F) {
    Rational p = cfg.muR.at(f);
    if (p == 0)
      throw ConfigError("coupling: F is not contained in supp(mu^(R)); increase R");
    if (minp < 0 || p < minp) minp = p;
  }
  cfg.eps = Rational(static_cast<long>(cfg.F.size())) * minp;

  // Case-(b) distribution (muR - eps*u_F) / (1-eps), exact and atomwise >= 0.
  const Rational unit = cfg.eps / Rational(static_cast<long>(cfg.F.size()));
  if (cfg.eps < 1) {
    Measure b;
    b.group = group;
    for (const auto& [e, p] : cfg.muR.atoms) {
      Rational q = p;
      if (fkeys.count(group->key(e))) q -= unit;
      if (q < 0)
        throw ConfigError("coupling: case-(b) distribution has a negative atom");
      if (q > 0) b.atoms.emplace(e, q / (1 - cfg.eps));
    }
    if (b.mass() != 1) throw ConfigError("coupling: case-(b) distribution mass != 1");
    // Mixture identity (1-eps)*caseB + eps*u_F == muR, atom by atom.
    for (const auto& [e, p] : cfg.muR.atoms) {
      Rational mix = (1 - cfg.eps) * b.at(e);
      if (fkeys.count(group->key(e))) mix += unit;
      if (mix != p) throw ConfigError("coupling: mixture identity fails");
    }
    cfg.case_b = std::move(b);
  }

  // Conjugation structure: within each phi-level of supp(muR) the conjugate
  // of F must not depend on the lift, and level 0 must fix F setwise.
  cfg.normality_ok = true;
  for (const auto& [g, p] : cfg.muR.atoms) {
    long long y = group->phi(g);
    std::unordered_set<std::string> conj_keys;
    for (const auto& f : cfg.F) conj_keys.insert(group->key(group->conj(f, g)));
    if (conj_keys != *cfg.level_set(y)) {
      cfg.normality_ok = false;
      cfg.normality_note = "conjugate of F by " + group->key(g) +
                           " differs from the canonical conjugate at level " +
                           std::to_string(y);
      break;
    }
  }
  if (enforce_normality && !cfg.normality_ok)
    throw ConfigError("coupling: F is not normal in the kernel: " + cfg.normality_note);

  cfg.gamma = gamma;
  cfg.x = x;
  if (!cfg.level_set(x)->count(group->key(gamma)))
    throw ConfigError("coupling: gamma does not lie in F^x");
  return cfg;
}

namespace {

struct Engine {
  const CouplingConfig& cfg;
  const MeasureSampler muR;
  const MeasureSampler* case_b;  // null when eps == 1
  MeasureSampler case_b_storage;
  double eps_d;

  explicit Engine(const CouplingConfig& c)
      : cfg(c), muR(c.muR), case_b(nullptr), case_b_storage(c.eps < 1 ? c.case_b : c.muR) {
    if (c.eps < 1) case_b = &case_b_storage;
    eps_d = rat_double(c.eps);
  }
};

}  // namespace

static CouplingRecord run_coupling(const CouplingConfig& cfg, long long horizon,
                                   std::uint64_t seed, const CoupleOptions& opt,
                                   bool stop_when_coupled, long long exit_r) {
  Engine eng(cfg);
  const Group& G = *cfg.group;
  CouplingRecord rec;
  rec.seed = seed;
  Rng rng(seed, 0);

  const bool full = opt.level == RecordLevel::Full;
  const bool track_exit = exit_r >= 0;
  bool coupled = G.is_identity(cfg.gamma);
  if (coupled) rec.tau = 0;

  long long cursor = 0;
  Element Z = G.identity();
  Element Zt = G.identity();
  Element D = cfg.gamma;  // = Zt^-1 gamma Z, maintained incrementally

  auto check_step = [&](long long n) {
    if (!full) return true;
    if (G.phi(Z) != cursor || G.phi(Zt) != cursor) {
      rec.violation_note = "phi desynchronized at step " + std::to_string(n);
      return false;
    }
    if (coupled) {
      if (!G.is_identity(D)) {
        rec.violation_note = "difference nontrivial after coupling";
        return false;
      }
      return true;
    }
    long long y = cfg.x - cursor;
    if (!cfg.level_set(y)->count(G.key(D))) {
      rec.violation_note = "difference " + G.key(D) + " leaves F^" + std::to_string(y);
      return false;
    }
    return true;
  };

  for (long long n = 1; n <= horizon; ++n) {
    char tag;
    int xi;
    Element X, Xt;
    bool mirrored = false;
    if (coupled) {
      tag = 'p';
      xi = eng.muR.sample(rng);
      if (full) X = eng.muR.element(xi);
    } else if (cursor != cfg.x) {
      tag = 'a';
      xi = eng.muR.sample(rng);
      if (full) X = eng.muR.element(xi);
    } else {
      ++rec.on_level_visits;
      if (rng.uniform() < eng.eps_d) {
        tag = 'c';
        std::uint64_t fi = rng.below(cfg.F.size());
        xi = -1;
        X = cfg.F[fi];
        mirrored = true;
      } else {
        tag = 'b';
        if (!eng.case_b)
          throw ConfigError("coupling: case (b) sampled with eps == 1");
        xi = eng.case_b->sample(rng);
      }
    }

    long long phi_step;
    if (tag == 'c') {
      phi_step = 0;  // F lies in ker(phi)
    } else if (tag == 'b') {
      phi_step = eng.case_b->phi(xi);
      if (full) X = eng.case_b->element(xi);
    } else {
      phi_step = eng.muR.phi(xi);
    }

    if (full) {
      if (mirrored) {
        Xt = G.mul(D, X);  // forces gamma Z_{n+1} = Zt_{n+1}
      } else {
        Xt = X;
      }
      Z = G.mul(Z, X);
      Zt = G.mul(Zt, Xt);
      D = coupled ? D : G.mul(G.inv(Xt), G.mul(D, X));
      if (opt.record_increments) {
        ++rec.z_increments[G.key(X)];
        ++rec.zt_increments[G.key(Xt)];
      }
      if (opt.record_difference) rec.difference_keys.push_back(G.key(D));
    }
    cursor += phi_step;
    if (mirrored) {
      coupled = true;
      rec.tau = n;
      ++rec.case_c_count;
    }
    rec.steps = n;
    if (opt.record_case_tags) rec.case_tags.push_back(tag);

    if (!check_step(n)) {
      rec.first_violation = n;
      if (opt.throw_on_violation)
        throw InvariantViolation("coupling: " + rec.violation_note, n);
      return rec;
    }

    // Sanity resync of the incrementally maintained difference.
    if (full && (n & 1023) == 0) {
      Element d2 = G.mul(G.inv(Zt), G.mul(cfg.gamma, Z));
      if (!(d2 == D)) throw InvariantViolation("coupling: difference bookkeeping drift", n);
    }

    if (track_exit && (cursor < -exit_r || cursor > exit_r)) {
      rec.tau_r = n;
      rec.exited_before_coupling = !coupled;
      return rec;
    }
    if (coupled && stop_when_coupled) return rec;
  }
  return rec;
}

CouplingRecord couple_main(const CouplingConfig& cfg, long long horizon, std::uint64_t seed,
                           const CoupleOptions& opt, bool stop_when_coupled) {
  return run_coupling(cfg, horizon, seed, opt, stop_when_coupled, -1);
}

CouplingRecord couple_until_exit(const CouplingConfig& cfg, long long r, std::uint64_t seed,
                                 const CoupleOptions& opt) {
  if (cfg.x < -r / 2 || cfg.x > r / 2)
    throw ConfigError("couple_until_exit: requires |x| <= r/2");
  // Horizon is a safety net; the exit of [-r, r] happens in O(r^2) steps.
  long long horizon = 400 * (r + 2) * (r + 2) + 10000;
  return run_coupling(cfg, horizon, seed, opt, true, r);
}

std::vector<TailPoint> tail_profile(const CouplingConfig& cfg, const std::vector<long long>& ns,
                                    long long trials, std::uint64_t seed) {
  long long horizon = 0;
  for (long long n : ns) horizon = std::max(horizon, n);
  std::vector<long long> taus(static_cast<std::size_t>(trials));
  parallel_for(static_cast<std::size_t>(trials), [&](std::size_t trial) {
    CoupleOptions opt;
    opt.level = RecordLevel::TauOnly;
    auto rec = run_coupling(cfg, horizon, splitmix64(seed) ^ trial, opt, true, -1);
    taus[trial] = rec.coupled() ? rec.tau : horizon + 1;
  });
  std::vector<TailPoint> out;
  for (long long n : ns) {
    TailPoint tp;
    tp.n = n;
    tp.trials = trials;
    for (long long t : taus)
      if (t > n) ++tp.exceed_count;
    tp.p_hat = static_cast<double>(tp.exceed_count) / static_cast<double>(trials);
    tp.stderr_ = std::sqrt(tp.p_hat * (1 - tp.p_hat) / static_cast<double>(trials));
    tp.sqrt_n_times_p = std::sqrt(static_cast<double>(n)) * tp.p_hat;
    out.push_back(tp);
  }
  return out;
}

std::vector<ExitPoint> exit_profile(const CouplingConfig& cfg, const std::vector<long long>& rs,
                                    long long trials, std::uint64_t seed) {
  std::vector<ExitPoint> out;
  for (long long r : rs) {
    ExitPoint ep;
    ep.r = r;
    ep.trials = trials;
    std::vector<char> exited(static_cast<std::size_t>(trials), 0);
    parallel_for(static_cast<std::size_t>(trials), [&](std::size_t trial) {
      CoupleOptions opt;
      opt.level = RecordLevel::TauOnly;
      auto rec = couple_until_exit(cfg, r, splitmix64(seed ^ (0xabcdULL * r)) ^ trial, opt);
      exited[trial] = rec.exited_before_coupling ? 1 : 0;
    });
    for (char e : exited)
      if (e) ++ep.not_coupled_count;
    ep.p_hat = static_cast<double>(ep.not_coupled_count) / static_cast<double>(trials);
    ep.stderr_ = std::sqrt(ep.p_hat * (1 - ep.p_hat) / static_cast<double>(trials));
    ep.r_times_p = static_cast<double>(r) * ep.p_hat;
    out.push_back(ep);
  }
  return out;
}

// ---------------------------------------------------------------------------
// FC coupling
// ---------------------------------------------------------------------------

FcCouplingConfig build_fc_config(GroupPtr group, Measure mu, Element gamma,
                                 std::size_t class_cap, int r_max, std::size_t atom_cap) {
  FcCouplingConfig cfg;
  cfg.group = group;
  cfg.gamma = gamma;

  std::vector<Element> gens;
  for (const auto& [e, p] : mu.atoms) gens.push_back(e);
  auto cls = conjugacy_closure(*group, gamma, gens, class_cap);
  if (!cls)
    throw InfiniteClassSuspected("couple_fc: conjugacy class closure exceeds cap");
  cfg.conj_class = std::move(*cls);
  std::sort(cfg.conj_class.begin(), cfg.conj_class.end(),
            [&](const Element& a, const Element& b) { return group->key(a) < group->key(b); });

  // order of gamma
  cfg.gamma_order = 1;
  Element p = gamma;
  while (!group->is_identity(p)) {
    p = group->mul(p, gamma);
    ++cfg.gamma_order;
    if (cfg.gamma_order > 1000000) throw ConfigError("couple_fc: gamma has huge order");
  }

  // Distinct cyclic subgroups <c> over the class, with the (subgroup, power)
  // locator for every element of the union.
  std::unordered_set<std::string> seen_subgroups;
  for (const auto& c : cfg.conj_class) {
    std::vector<Element> sub;
    std::vector<std::string> keys;
    Element cur = group->identity();
    do {
      sub.push_back(cur);
      keys.push_back(group->key(cur));
      cur = group->mul(cur, c);
    } while (!group->is_identity(cur));
    auto sorted_keys = keys;
    std::sort(sorted_keys.begin(), sorted_keys.end());
    std::string fingerprint;
    for (const auto& k : sorted_keys) fingerprint += k + ";";
    if (!seen_subgroups.insert(fingerprint).second) continue;
    int idx = static_cast<int>(cfg.subgroups.size());
    for (std::size_t j = 0; j < sub.size(); ++j)
      cfg.locate.emplace(keys[j], std::make_pair(idx, static_cast<int>(j)));
    cfg.subgroups.push_back(std::move(sub));
  }

  // Smallest R with the whole union inside supp(mu^(R)).
  Measure muR;
  for (int R = 1; R <= r_max; ++R) {
    muR = convolve_power(mu, R, atom_cap);
    bool ok = true;
    cfg.union_prob.clear();
    for (const auto& sub : cfg.subgroups) {
      for (const auto& u : sub) {
        Rational q = muR.at(u);
        if (q == 0) {
          ok = false;
          break;
        }
        cfg.union_prob[group->key(u)] = q;
      }
      if (!ok) break;
    }
    if (ok) {
      cfg.R = R;
      cfg.mu = std::move(mu);
      // eps = order(gamma) * inf over the union.
      Rational minp = -1;
      for (const auto& [k, q] : cfg.union_prob)
        if (minp < 0 || q < minp) minp = q;
      cfg.eps = Rational(cfg.gamma_order) * minp;
      // Acceptance probabilities eps/(order * muR(u)) must be <= 1.
      for (const auto& [k, q] : cfg.union_prob)
        if (cfg.eps > Rational(cfg.gamma_order) * q)
          throw ConfigError("couple_fc: acceptance probability above 1");
      // Store the full muR for sampling.
      cfg.muR_sampler_source = std::make_shared<Measure>(std::move(muR));
      return cfg;
    }
  }
  throw ConfigError("couple_fc: union of conjugated cyclic subgroups not inside supp(mu^(R)) "
                    "for R <= " + std::to_string(r_max));
}

FcRecord couple_fc(const FcCouplingConfig& cfg, const Element& x_start, long long horizon,
                   std::uint64_t seed, bool record_difference) {
  const Group& G = *cfg.group;
  FcRecord rec;
  rec.seed = seed;
  Rng rng(seed, 0);
  MeasureSampler muR(*cfg.muR_sampler_source);

  // Per-subgroup key sets for exact membership.
  std::vector<std::unordered_set<std::string>> member(cfg.subgroups.size());
  for (std::size_t i = 0; i < cfg.subgroups.size(); ++i)
    for (const auto& u : cfg.subgroups[i]) member[i].insert(G.key(u));

  Element D = G.mul(G.inv(x_start), G.mul(cfg.gamma, x_start));
  if (G.is_identity(D)) {
    rec.tau = 0;
    return rec;
  }
  auto locate_or_throw = [&](const Element& d) {
    auto it = cfg.locate.find(G.key(d));
    if (it == cfg.locate.end())
      throw InvariantViolation("couple_fc: difference left the tracked union", rec.steps);
    return it->second;
  };
  std::pair<int, int> loc = locate_or_throw(D);

  const double order_d = static_cast<double>(cfg.gamma_order);
  const double eps_d = rat_double(cfg.eps);
  for (long long n = 1; n <= horizon; ++n) {
    rec.steps = n;
    int xi = muR.sample(rng);
    const Element& X = muR.element(xi);
    bool in_subgroup = member[static_cast<std::size_t>(loc.first)].count(muR.key(xi)) > 0;
    if (in_subgroup) {
      double mu_x = rat_double(cfg.union_prob.at(muR.key(xi)));
      double accept = eps_d / (order_d * mu_x);
      if (rng.uniform() < accept) {
        rec.tau = n;
        if (record_difference) rec.difference_keys.push_back(G.key(G.identity()));
        return rec;
      }
    }
    D = G.mul(G.inv(X), G.mul(D, X));
    loc = locate_or_throw(D);
    if (record_difference) rec.difference_keys.push_back(G.key(D));
  }
  return rec;
}

// ---------------------------------------------------------------------------
// Non-normal demonstration on Sym(Z) x| Z
// ---------------------------------------------------------------------------

NonNormalReport non_normal_demo(std::uint64_t seed, long long horizon, bool gamma_identity) {
  auto group = std::make_shared<SymZGroup>();
  Element t = SymZGroup::shift(1);
  Element tinv = SymZGroup::shift(-1);
  Element s01 = SymZGroup::transposition(0);
  Element st = group->mul(s01, t);
  Element st_inv = group->inv(st);
  Measure mu = make_step_distribution(
      group, {{t, Rational(1, 4)}, {tinv, Rational(1, 4)}, {st, Rational(1, 4)},
              {st_inv, Rational(1, 4)}});
  std::vector<Element> F = {group->identity(), s01};
  Element gamma = gamma_identity ? group->identity() : s01;

  NonNormalReport rep;
  rep.cfg = build_coupling_config(group, mu, 2, F, gamma, 0, /*enforce_normality=*/false);
  CoupleOptions opt;
  opt.level = RecordLevel::Full;
  opt.throw_on_violation = false;
  opt.record_case_tags = true;
  auto rec = couple_main(rep.cfg, horizon, seed, opt, /*stop_when_coupled=*/false);
  rep.violation_observed = rec.first_violation >= 0;
  rep.violation_step = rec.first_violation;
  rep.note = rep.violation_observed
                 ? rec.violation_note
                 : (rep.cfg.normality_ok ? "no violation" : "no violation within horizon");
  return rep;
}

}  // namespace walklab
