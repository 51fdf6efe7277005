#pragma once

#include <cstdlib>
#include <thread>
#include <vector>

namespace sv {

/// Worker cap: SIMONS_VERIFY_THREADS when set, hardware concurrency
/// otherwise. Always at least one.
inline unsigned thread_cap() {
  if (const char* env = std::getenv("SIMONS_VERIFY_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Index-parallel loop with a deterministic work split. Results must be
/// written to disjoint slots; reductions happen after the join, so the
/// output is independent of the thread count.
template <class F>
void parallel_for(std::size_t n, F&& f) {
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(thread_cap(), n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) f(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace sv
