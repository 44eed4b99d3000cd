#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace symvar::detail {

// Runs body(begin, end) over [0, total) split into contiguous chunks.
template <typename Body>
void parallel_chunks(std::uint64_t total, unsigned threads, Body&& body) {
  threads = std::max(1u, threads);
  if (threads == 1 || total < 4096) {
    body(std::uint64_t{0}, total);
    return;
  }
  std::vector<std::thread> pool;
  const std::uint64_t chunk = (total + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::uint64_t begin = t * chunk;
    const std::uint64_t end = std::min(total, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&body, begin, end] { body(begin, end); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace symvar::detail
