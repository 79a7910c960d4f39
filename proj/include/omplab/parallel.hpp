#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <optional>
#include <string>
#include <thread>
#include <type_traits>
#include <utility>
#include <vector>

namespace omplab {

/// Worker count: OMPLAB_THREADS if set and positive, else the hardware
/// concurrency, capped at 64.
inline unsigned worker_count() {
  if (const char* env = std::getenv("OMPLAB_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(std::min(v, 64L));
    } catch (...) {
    }
  }
  return std::clamp(std::thread::hardware_concurrency(), 1U, 64U);
}

/// Evaluates `fn(i)` for i in [0, count) on up to `threads` workers and
/// returns the result for the smallest i whose result is engaged. The answer
/// does not depend on scheduling.
template <class Fn>
auto parallel_find_first(std::size_t count, Fn fn, unsigned threads = worker_count())
    -> std::optional<std::pair<std::size_t, typename std::invoke_result_t<Fn, std::size_t>::value_type>> {
  using R = typename std::invoke_result_t<Fn, std::size_t>::value_type;
  std::vector<std::optional<R>> results(count);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{count};

  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count || i > best.load()) return;
      results[i] = fn(i);
      if (results[i]) {
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };

  const unsigned n = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::min<std::size_t>(count, 64))));
  if (n <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n);
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(work);
  }
  const std::size_t b = best.load();
  if (b >= count) return std::nullopt;
  return std::pair{b, std::move(*results[b])};
}

} // namespace omplab
