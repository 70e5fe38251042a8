#pragma once

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace vcmkit {

/// Worker cap: VCMKIT_THREADS if set to a positive integer, else the hardware count.
inline unsigned worker_count() {
  unsigned hw = std::max(1U, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("VCMKIT_THREADS")) {
    const int requested = std::atoi(env);
    if (requested > 0) return std::min(hw, static_cast<unsigned>(requested));
  }
  return hw;
}

/// Runs fn(i) for i in [0, count). Each index is visited exactly once; callers
/// write results into per-index slots so the outcome does not depend on
/// scheduling.
template <class Fn>
void parallel_for(std::size_t count, Fn&& fn, std::size_t min_per_worker = 64) {
  const std::size_t workers =
      std::min<std::size_t>(worker_count(), std::max<std::size_t>(1, count / std::max<std::size_t>(1, min_per_worker)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) fn(i);
    });
  }
}

}  // namespace vcmkit
