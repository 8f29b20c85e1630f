#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

#include "pedmri/errors.hpp"

namespace pedmri {

// Worker cap from PEDMRI_THREADS (0 or unset = hardware concurrency).
inline int max_workers() {
  if (const char* env = std::getenv("PEDMRI_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0') {
      if (v < 0) throw UsageError("PEDMRI_THREADS must be >= 0");
      if (v > 0) return static_cast<int>(std::min<long>(v, 256));
    }
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 1;
}

// Runs fn(chunk_index) for chunk_index in [0, n_chunks) on up to
// max_workers() threads. The chunk decomposition is the caller's, so
// results that are combined in chunk order do not depend on the number
// of threads actually used.
inline void parallel_chunks(int n_chunks, const std::function<void(int)>& fn) {
  if (n_chunks <= 0) return;
  int workers = std::min(max_workers(), n_chunks);
  if (workers <= 1) {
    for (int c = 0; c < n_chunks; ++c) fn(c);
    return;
  }
  std::atomic<int> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex err_mutex;
  auto worker = [&] {
    for (;;) {
      int c = next.fetch_add(1);
      if (c >= n_chunks || failed.load()) return;
      try {
        fn(c);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (!first_error) first_error = std::current_exception();
        failed.store(true);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (int t = 0; t < workers - 1; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

// Splits [0, n) into contiguous ranges and runs fn(begin, end) on each.
// Intended for loops whose iterations write to disjoint outputs.
inline void parallel_for(std::int64_t n,
                         const std::function<void(std::int64_t, std::int64_t)>& fn) {
  if (n <= 0) return;
  int workers = std::min<std::int64_t>(max_workers(), n);
  if (workers <= 1) {
    fn(0, n);
    return;
  }
  std::int64_t chunk = (n + workers - 1) / workers;
  parallel_chunks(workers, [&](int c) {
    std::int64_t lo = c * chunk;
    std::int64_t hi = std::min<std::int64_t>(lo + chunk, n);
    if (lo < hi) fn(lo, hi);
  });
}

}  // namespace pedmri
