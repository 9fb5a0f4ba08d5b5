#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

namespace epos {

/// Worker count used by every parallel loop in the library. Resolution
/// order: set_worker_count(), then the EPOS_WORKERS environment variable,
/// then the hardware concurrency.
unsigned worker_count();

/// Overrides the worker count; 0 restores the default resolution.
void set_worker_count(unsigned workers);

/// Runs `map(i)` for every task index in [0, tasks) on worker_count()
/// threads and folds the results with `reduce(acc, value)` in task order,
/// so the outcome does not depend on scheduling.
template <class Result, class Map, class Reduce>
Result map_reduce(std::size_t tasks, Result init, Map&& map, Reduce&& reduce) {
  std::vector<std::optional<Result>> partial(tasks);
  const auto workers = static_cast<unsigned>(std::min<std::size_t>(worker_count(), tasks == 0 ? 1 : tasks));
  if (workers <= 1) {
    for (std::size_t i = 0; i < tasks; ++i) reduce(init, map(i));
    return init;
  }
  std::atomic<std::size_t> cursor{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = cursor++; i < tasks; i = cursor++) {
          try {
            partial[i].emplace(map(i));
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  for (auto& value : partial) reduce(init, std::move(*value));
  return init;
}

}  // namespace epos
