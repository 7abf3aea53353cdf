#pragma once

#include <cstdint>
#include <functional>

namespace ouschro {

/// Worker count: min(hardware_concurrency, OU_SCHRO_THREADS). At least 1.
int thread_count();

/// Runs fn(begin, end) over a static contiguous partition of [0, n).
/// Chunks are disjoint, so callers write to distinct slots without locking.
void parallel_for(std::int64_t n,
                  const std::function<void(std::int64_t, std::int64_t)>& fn);

/// Pairwise (cascade) reduction with a fixed association order. The result is
/// independent of thread count because every reduction is performed serially
/// in this order; parallelism only ever splits work across independent sums.
template <class T, class F>
T pairwise_map_sum(std::int64_t lo, std::int64_t hi, const F& term) {
  if (hi - lo <= 32) {
    T s{};
    for (std::int64_t i = lo; i < hi; ++i) s += term(i);
    return s;
  }
  const std::int64_t mid = lo + (hi - lo) / 2;
  return pairwise_map_sum<T>(lo, mid, term) + pairwise_map_sum<T>(mid, hi, term);
}

template <class T>
T pairwise_sum(const T* data, std::int64_t n) {
  return pairwise_map_sum<T>(0, n, [data](std::int64_t i) { return data[i]; });
}

}  // namespace ouschro
