#pragma once

#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <utility>
#include <vector>

namespace superring {

// Filters [0, n) through pred with a static contiguous partition, one chunk
// per worker. Chunks are concatenated in chunk order, so the result is the
// sequential one for every worker count.
template <typename Pred>
std::vector<std::int64_t> parallel_filter_indices(std::int64_t n, int workers, Pred&& pred) {
  if (workers < 1) workers = 1;
  if (workers == 1 || n < 2 * workers) {
    std::vector<std::int64_t> out;
    for (std::int64_t i = 0; i < n; ++i)
      if (pred(i)) out.push_back(i);
    return out;
  }
  std::vector<std::vector<std::int64_t>> chunks((std::size_t)workers);
  std::vector<std::thread> threads;
  std::exception_ptr error;
  std::mutex error_mu;
  const std::int64_t per = n / workers, extra = n % workers;
  std::int64_t begin = 0;
  for (int w = 0; w < workers; ++w) {
    const std::int64_t len = per + (w < extra ? 1 : 0);
    const std::int64_t end = begin + len;
    threads.emplace_back([&, w, begin, end]() {
      try {
        for (std::int64_t i = begin; i < end; ++i)
          if (pred(i)) chunks[(std::size_t)w].push_back(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
      }
    });
    begin = end;
  }
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
  std::vector<std::int64_t> out;
  for (const auto& c : chunks) out.insert(out.end(), c.begin(), c.end());
  return out;
}

}  // namespace superring
