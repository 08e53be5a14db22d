#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace clausesearch {

/// Resolves the worker count: `requested` when nonzero, otherwise the
/// CLAUSESEARCH_THREADS environment variable, otherwise 1.
unsigned resolve_threads(unsigned requested);

/// Runs fn(begin, end) over [0, count) split into at most `threads`
/// contiguous chunks. The chunking never affects what fn computes per index,
/// so callers that write disjoint outputs get identical results for any
/// thread count.
template <class Fn>
void parallel_chunks(std::size_t count, unsigned threads, Fn&& fn) {
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(threads, count));
  if (workers == 1) {
    fn(std::size_t{0}, count);
    return;
  }
  const std::size_t chunk = (count + workers - 1) / workers;
  std::vector<std::jthread> pool;
  pool.reserve(workers - 1);
  for (std::size_t w = 1; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(count, begin + chunk);
    if (begin < end) pool.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
  fn(std::size_t{0}, std::min(count, chunk));
}

/// Sums `values` with a balanced pairwise tree whose shape depends only on
/// values.size().
template <class T>
T pairwise_sum(const T* values, std::size_t count) {
  if (count == 0) return T{};
  if (count == 1) return values[0];
  const std::size_t half = count / 2;
  return pairwise_sum(values, half) + pairwise_sum(values + half, count - half);
}

}  // namespace clausesearch
