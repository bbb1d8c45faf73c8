#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace filiform {

inline unsigned default_thread_count() {
  unsigned n = std::thread::hardware_concurrency();
  return n ? n : 1;
}

/// Runs body(begin, end) over a contiguous partition of [0, count).
/// Chunks are assigned in index order so callers can merge deterministically.
inline void parallel_chunks(
    std::size_t count, unsigned threads,
    const std::function<void(unsigned, std::size_t, std::size_t)>& body) {
  if (threads == 0) threads = default_thread_count();
  if (threads > count) threads = count ? static_cast<unsigned>(count) : 1;
  if (threads <= 1) {
    body(0, 0, count);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  std::size_t per = count / threads, extra = count % threads, at = 0;
  for (unsigned t = 0; t < threads; ++t) {
    std::size_t len = per + (t < extra ? 1 : 0);
    pool.emplace_back(body, t, at, at + len);
    at += len;
  }
  for (auto& th : pool) th.join();
}

}  // namespace filiform
