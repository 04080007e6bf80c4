#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace stratsum {

inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  return static_cast<int>(std::min(hw, 8u));
}

// Splits [begin, end) into `chunks` contiguous ranges and runs `body(chunk,
// lo, hi)` on worker threads. Chunk boundaries depend only on the range, so
// per-chunk results can be merged in chunk order to give schedule-independent
// output.
inline void parallel_chunks(std::uint64_t begin, std::uint64_t end, int threads,
                            const std::function<void(int, std::uint64_t, std::uint64_t)>& body) {
  threads = resolve_threads(threads);
  const std::uint64_t total = end > begin ? end - begin : 0;
  if (total == 0) return;
  int chunks = static_cast<int>(std::min<std::uint64_t>(total, static_cast<std::uint64_t>(threads)));
  if (chunks <= 1) {
    body(0, begin, end);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(chunks);
  const std::uint64_t step = total / chunks;
  const std::uint64_t rem = total % chunks;
  std::uint64_t lo = begin;
  for (int c = 0; c < chunks; ++c) {
    std::uint64_t hi = lo + step + (static_cast<std::uint64_t>(c) < rem ? 1 : 0);
    pool.emplace_back([c, lo, hi, &body] { body(c, lo, hi); });
    lo = hi;
  }
  for (auto& t : pool) t.join();
}

}  // namespace stratsum
