#pragma once

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace acqudit {

// Runs f(i) for i in [0, n).  Each index owns its output slot, so the result
// is independent of the number of workers.
template <class F>
void parallel_for(int n, int jobs, F&& f) {
  jobs = std::clamp(jobs, 1, std::max(1, n));
  if (jobs == 1) {
    for (int i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (int w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) f(i);
    });
  }
  for (auto& t : workers) t.join();
}

}  // namespace acqudit
