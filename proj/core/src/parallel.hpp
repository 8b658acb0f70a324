#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace simplex_cover::detail {

/// Splits [0, items) into contiguous chunks, runs `fn(begin, end)` for each
/// on its own thread and returns the partial results in chunk order, so a
/// caller that merges them front to back gets a thread-count-independent
/// answer.
template <class Partial, class Fn>
std::vector<Partial> run_chunked(std::size_t items, unsigned threads, Fn fn) {
  std::size_t workers = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(items, 1));
  const std::size_t chunk = (items + workers - 1) / workers;

  std::vector<Partial> parts(workers);
  if (workers == 1) {
    parts[0] = fn(std::size_t{0}, items);
    return parts;
  }

  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        const std::size_t begin = std::min(items, w * chunk);
        const std::size_t end = std::min(items, begin + chunk);
        try {
          parts[w] = fn(begin, end);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return parts;
}

}  // namespace simplex_cover::detail
