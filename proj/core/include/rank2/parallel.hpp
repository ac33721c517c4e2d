#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace rank2 {

/// Worker count: GREEDY_THREADS when set to a positive integer, else
/// `requested` (values below 1 mean 1).
int resolve_threads(int requested);

/// Splits [0, total) into `threads` contiguous chunks, runs fn(begin, end) on
/// each and returns the results in chunk order. Exceptions from workers are
/// rethrown on the calling thread.
template <class Result, class Fn>
std::vector<Result> parallel_chunks(std::uint64_t total, int threads, Fn fn) {
  const auto workers = static_cast<std::uint64_t>(
      std::max<std::int64_t>(1, std::min<std::int64_t>(threads, static_cast<std::int64_t>(total))));
  std::vector<Result> results(static_cast<std::size_t>(workers));
  if (workers == 1) {
    results[0] = fn(std::uint64_t{0}, total);
    return results;
  }
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (std::uint64_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      const std::uint64_t begin = total * w / workers;
      const std::uint64_t end = total * (w + 1) / workers;
      try {
        results[static_cast<std::size_t>(w)] = fn(begin, end);
      } catch (...) {
        errors[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

} // namespace rank2
