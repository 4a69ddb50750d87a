#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace momo::batch {

/// Worker count actually used for a requested --jobs value (0 → all cores).
int resolve_jobs(int requested);

/// Applies `fn` to every index in [0, count) on `jobs` threads. Results land
/// in input order, so downstream aggregation is independent of the worker
/// count. The first exception (by index) is rethrown after all workers stop.
template <typename Out>
std::vector<Out> parallel_map(int count, int jobs,
                              const std::function<Out(int)>& fn) {
  std::vector<Out> results(count);
  if (count == 0) return results;
  jobs = std::min(resolve_jobs(jobs), count);

  if (jobs <= 1) {
    for (int i = 0; i < count; ++i) results[i] = fn(i);
    return results;
  }

  std::vector<std::exception_ptr> errors(count);
  std::atomic<int> cursor{0};
  auto worker = [&] {
    for (;;) {
      const int i = cursor.fetch_add(1);
      if (i >= count) return;
      try {
        results[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (int w = 0; w < jobs; ++w) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  for (auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }
  return results;
}

}  // namespace momo::batch
