#pragma once

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace kfl {

namespace detail {
inline std::atomic<int>& thread_count_storage() {
  static std::atomic<int> n{0};  // 0 = use hardware concurrency
  return n;
}
}  // namespace detail

inline void set_thread_count(int n) { detail::thread_count_storage().store(n); }

inline int thread_count() {
  int n = detail::thread_count_storage().load();
  if (n > 0) return n;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

namespace detail {

// Runs body(i) for i in [0,n). Results must be written to disjoint slots;
// then the outcome is independent of the worker count.
template <class Body>
void parallel_for(std::int64_t n, Body&& body) {
  const int workers = thread_count();
  if (workers <= 1 || n < 64) {
    for (std::int64_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::int64_t> next{0};
  const std::int64_t chunk = std::max<std::int64_t>(1, n / (8 * workers));
  auto run = [&] {
    for (;;) {
      std::int64_t b = next.fetch_add(chunk);
      if (b >= n) return;
      std::int64_t e = std::min(n, b + chunk);
      for (std::int64_t i = b; i < e; ++i) body(i);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (int t = 0; t + 1 < workers; ++t) pool.emplace_back(run);
  run();
  for (auto& th : pool) th.join();
}

// Deterministic parallel reduction: partial results are produced per fixed
// block (block boundaries do not depend on the worker count) and combined
// in block order by the caller.
template <class T, class BlockBody>
std::vector<T> parallel_block_map(std::int64_t n, std::int64_t block, BlockBody&& body) {
  const std::int64_t nblocks = (n + block - 1) / block;
  std::vector<T> out(static_cast<std::size_t>(nblocks));
  parallel_for(nblocks, [&](std::int64_t b) {
    const std::int64_t lo = b * block;
    const std::int64_t hi = std::min(n, lo + block);
    out[static_cast<std::size_t>(b)] = body(lo, hi);
  });
  return out;
}

}  // namespace detail
}  // namespace kfl
