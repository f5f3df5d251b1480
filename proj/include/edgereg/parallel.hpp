#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace edgereg {

// Runs body(worker, begin, end) over [0, count) in blocks pulled from a
// shared counter. The first exception thrown by any worker is rethrown.
template <typename Body>
void parallel_blocks(std::size_t count, int jobs, std::size_t block, Body&& body) {
  if (jobs <= 1 || count <= block) {
    for (std::size_t b = 0; b < count; b += block) body(0, b, std::min(count, b + block));
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto run = [&](int worker) {
    try {
      for (;;) {
        const std::size_t b = next.fetch_add(block);
        if (b >= count) return;
        body(worker, b, std::min(count, b + block));
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next.store(count);
    }
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < jobs; ++w) pool.emplace_back(run, w);
  run(0);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace edgereg
