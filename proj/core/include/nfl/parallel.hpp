#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace nfl {

// Run body(i) for i in [0, n) across `threads` workers. Each worker owns a
// strided slice, results land in caller-owned slots indexed by i, so the
// outcome is identical for any worker count.
inline void parallel_for(std::uint64_t n, int threads,
                         const std::function<void(std::uint64_t)>& body) {
  if (threads <= 1 || n <= 1) {
    for (std::uint64_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int w = 0; w < threads; ++w) {
    pool.emplace_back([&, w]() {
      for (std::uint64_t i = static_cast<std::uint64_t>(w); i < n;
           i += static_cast<std::uint64_t>(threads))
        body(i);
    });
  }
  for (auto& t : pool) t.join();
}

} // namespace nfl
