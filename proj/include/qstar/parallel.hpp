#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace qstar {

/// Process-wide worker cap used by the parallel pipelines. Results never
/// depend on it: every parallel loop writes into a slot indexed by item.
unsigned default_threads();
void set_default_threads(unsigned threads);

/// Runs fn(i) for i in [0, count) on up to `threads` workers. Items are
/// claimed through an atomic counter; the first exception is rethrown after
/// all workers join.
template <class Fn>
void parallel_for(std::size_t count, Fn&& fn, unsigned threads = default_threads()) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(count);
        return;
      }
    }
  };
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace qstar
