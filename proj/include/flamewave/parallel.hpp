// Minimal index-parallel loop on std::thread. Each index is processed by
// exactly one worker; results must be written to per-index slots.

#ifndef FLAMEWAVE_PARALLEL_HPP
#define FLAMEWAVE_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace flamewave {

/// threads <= 0 selects std::thread::hardware_concurrency().
template <class F>
void parallel_for(std::size_t n, int threads, F&& body) {
  std::size_t workers = threads > 0 ? static_cast<std::size_t>(threads)
                                    : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) body(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace flamewave

#endif  // FLAMEWAVE_PARALLEL_HPP
