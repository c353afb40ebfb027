#pragma once

/// Thread control and the deterministic "first hit" reduction shared by the
/// OpenMP kernels.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mdslab {

/// Sets the worker count used by every parallel kernel (0 = runtime default).
void set_thread_count(int n);
int thread_count();

inline constexpr std::uint64_t kNoHit = UINT64_MAX;

/// Scans [0, total) in chunks and returns the smallest index for which the
/// chunk function reports a hit. `scan(begin, end)` returns the first hit in
/// its range or kNoHit. Chunks that start past the best hit so far are
/// skipped, so the answer equals the serial answer for any thread count.
template <class Scan>
std::uint64_t first_hit_parallel(std::uint64_t total, std::uint64_t chunk, Scan&& scan) {
  if (total == 0) return kNoHit;
  chunk = std::max<std::uint64_t>(chunk, 1);
  const std::int64_t chunks = static_cast<std::int64_t>((total + chunk - 1) / chunk);
  std::atomic<std::uint64_t> best{kNoHit};
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t c = 0; c < chunks; ++c) {
    const std::uint64_t begin = static_cast<std::uint64_t>(c) * chunk;
    if (begin >= best.load(std::memory_order_relaxed)) continue;
    const std::uint64_t end = std::min(total, begin + chunk);
    const std::uint64_t hit = scan(begin, end);
    if (hit == kNoHit) continue;
    std::uint64_t cur = best.load(std::memory_order_relaxed);
    while (hit < cur && !best.compare_exchange_weak(cur, hit, std::memory_order_relaxed)) {
    }
  }
  return best.load();
}

}  // namespace mdslab
