#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace bom {

/// Number of workers used by the Monte Carlo loops: hardware concurrency
/// clamped to [1, 8] unless overridden (0 = automatic).
inline int worker_count(int requested = 0) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return static_cast<int>(hw == 0 ? 1 : (hw > 8 ? 8 : hw));
}

/// Accumulated first and second moments of a batch of evaluations.
struct MomentAccumulator {
  double sum = 0.0;
  double sum_sq = 0.0;
  std::uint64_t count = 0;
};

/// Evaluates f(i) for i in [0, n) and accumulates sum / sum of squares.
/// The index range is split into fixed-size chunks whose partial sums are
/// combined in chunk order, so the result is bitwise independent of the
/// worker count and of scheduling.
template <class F>
MomentAccumulator parallel_moments(std::uint64_t n, F&& f, int threads = 0) {
  constexpr std::uint64_t kChunk = 1024;
  const std::uint64_t chunks = (n + kChunk - 1) / kChunk;
  std::vector<MomentAccumulator> partial(static_cast<std::size_t>(chunks));
  const int workers = worker_count(threads);

  std::atomic<std::uint64_t> next{0};
  auto work = [&]() {
    for (;;) {
      const std::uint64_t c = next.fetch_add(1);
      if (c >= chunks) return;
      MomentAccumulator acc;
      const std::uint64_t lo = c * kChunk;
      const std::uint64_t hi = std::min(n, lo + kChunk);
      for (std::uint64_t i = lo; i < hi; ++i) {
        const double v = f(i);
        acc.sum += v;
        acc.sum_sq += v * v;
        ++acc.count;
      }
      partial[static_cast<std::size_t>(c)] = acc;
    }
  };

  if (workers <= 1 || chunks <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  MomentAccumulator total;
  for (const auto& p : partial) {
    total.sum += p.sum;
    total.sum_sq += p.sum_sq;
    total.count += p.count;
  }
  return total;
}

/// Evaluates f(i) for i in [0, n) into a vector, chunked the same
/// deterministic way as parallel_moments.
template <class F>
std::vector<double> parallel_map(std::uint64_t n, F&& f, int threads = 0) {
  constexpr std::uint64_t kChunk = 256;
  const std::uint64_t chunks = (n + kChunk - 1) / kChunk;
  std::vector<double> out(static_cast<std::size_t>(n));
  const int workers = worker_count(threads);

  std::atomic<std::uint64_t> next{0};
  auto work = [&]() {
    for (;;) {
      const std::uint64_t c = next.fetch_add(1);
      if (c >= chunks) return;
      const std::uint64_t lo = c * kChunk;
      const std::uint64_t hi = std::min(n, lo + kChunk);
      for (std::uint64_t i = lo; i < hi; ++i) out[static_cast<std::size_t>(i)] = f(i);
    }
  };
  if (workers <= 1 || chunks <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  return out;
}

}  // namespace bom
