#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace inflation {

/// Splits [0, count) into contiguous chunks, one per worker, and runs
/// `body(begin, end, worker)` on each. The chunking depends only on
/// (count, workers); callers reduce per-worker results in worker order.
template <typename Body>
void parallel_ranges(std::uint64_t count, unsigned workers, Body&& body) {
  workers = std::max(1u, workers);
  if (workers == 1 || count < 2) {
    body(std::uint64_t{0}, count, 0u);
    return;
  }
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, count));
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  const std::uint64_t step = count / workers;
  const std::uint64_t extra = count % workers;
  std::uint64_t begin = 0;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t end = begin + step + (w < extra ? 1 : 0);
    pool.emplace_back([&, begin, end, w] {
      try {
        body(begin, end, w);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
    begin = end;
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace inflation
