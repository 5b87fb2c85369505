#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "hookbound/harness.hpp"

namespace hookbound::cli {

// Each call starts `jobs` threads that pull indices from a shared counter.
// The first exception is rethrown on the caller's thread after all workers
// stop.
inline ParallelFor make_parallel_runner(unsigned jobs) {
  if (jobs <= 1) return sequential_runner();
  return [jobs](std::size_t count, const std::function<void(std::size_t)>& body) {
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
      while (!stop.load(std::memory_order_relaxed)) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          stop = true;
        }
      }
    };
    std::vector<std::thread> threads;
    const unsigned spawn = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
    for (unsigned t = 0; t < spawn; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    if (error) std::rethrow_exception(error);
  };
}

}  // namespace hookbound::cli
