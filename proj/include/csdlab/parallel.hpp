#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace csdlab {

// Runs body(worker, index) for index in [0, count) on up to `jobs` threads.
// Indices are handed out dynamically; callers that need a deterministic
// result must merge per-worker state in an order-independent way. The first
// exception thrown by any worker is rethrown after all workers stop.
template <typename Body>
void parallel_for(std::size_t count, unsigned jobs, Body&& body) {
  const std::size_t workers = std::min<std::size_t>(std::max(1U, jobs), std::max<std::size_t>(count, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(std::size_t{0}, i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < count; i = next++) body(w, i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    });
  }
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
}

inline std::size_t worker_count(std::size_t count, unsigned jobs) {
  return std::min<std::size_t>(std::max(1U, jobs), std::max<std::size_t>(count, 1));
}

}  // namespace csdlab
