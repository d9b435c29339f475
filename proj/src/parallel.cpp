#include "apnforge/parallel.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace apnforge {

unsigned default_workers() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

void parallel_for(std::size_t begin, std::size_t end, unsigned workers,
                  const std::function<void(std::size_t, std::size_t)>& body) {
  if (end <= begin) return;
  if (workers == 0) workers = default_workers();
  const std::size_t count = end - begin;
  const std::size_t parts = std::min<std::size_t>(workers, count);
  if (parts <= 1) {
    body(begin, end);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto run = [&](std::size_t lo, std::size_t hi) {
    try {
      body(lo, hi);
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };
  std::vector<std::jthread> threads;
  threads.reserve(parts - 1);
  const std::size_t step = count / parts;
  const std::size_t extra = count % parts;
  std::size_t lo = begin;
  std::size_t first_hi = 0;
  for (std::size_t p = 0; p < parts; ++p) {
    const std::size_t hi = lo + step + (p < extra ? 1 : 0);
    if (p == 0) {
      first_hi = hi;
    } else {
      threads.emplace_back(run, lo, hi);
    }
    lo = hi;
  }
  run(begin, first_hi);
  threads.clear();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace apnforge
