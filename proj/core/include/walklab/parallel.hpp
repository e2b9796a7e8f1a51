#pragma once

#include <cstddef>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace walklab {

inline unsigned thread_count() {
  if (const char* env = std::getenv("WALKLAB_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return static_cast<unsigned>(n);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Static block partition of [0, n). The work function receives the global
// index, so per-trial RNG streams are identical regardless of thread count.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  unsigned nthreads = thread_count();
  if (nthreads <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  if (nthreads > n) nthreads = static_cast<unsigned>(n);
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  std::size_t chunk = (n + nthreads - 1) / nthreads;
  for (unsigned t = 0; t < nthreads; ++t) {
    std::size_t lo = t * chunk;
    std::size_t hi = lo + chunk < n ? lo + chunk : n;
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace walklab
