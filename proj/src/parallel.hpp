#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace g2forge {

/// Indexed parallel loop; callers write results into per-index slots so the
/// assembled output is deterministic regardless of scheduling.
template <class Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
  unsigned hw = threads > 0 ? static_cast<unsigned>(threads)
                            : std::max(1u, std::thread::hardware_concurrency());
  if (hw <= 1 || n < 4) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < hw && t < n; ++t)
    pool.emplace_back([&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        fn(i);
      }
    });
  for (auto& th : pool) th.join();
}

}  // namespace g2forge
