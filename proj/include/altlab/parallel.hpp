#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace altlab {

/// Worker count for data-parallel loops. Results never depend on it: every
/// loop writes into a slot owned by its index.
struct Parallelism {
  unsigned workers = 1;

  /// Reads ALTLAB_WORKERS; falls back to 1.
  static Parallelism from_env() {
    Parallelism p;
    if (const char* env = std::getenv("ALTLAB_WORKERS")) {
      try {
        const long v = std::stol(env);
        if (v >= 1) p.workers = static_cast<unsigned>(std::min(v, 256L));
      } catch (const std::exception&) {
      }
    }
    return p;
  }
};

/// Runs body(i) for i in [0, count). The first exception thrown by any
/// worker is rethrown after all workers have joined.
template <class F>
void parallel_for(std::size_t count, const Parallelism& par, F&& body) {
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(par.workers, count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          next = count;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace altlab
