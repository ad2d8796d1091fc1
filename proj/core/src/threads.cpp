#include "stochdg/threads.hpp"

#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace stochdg {

namespace {
std::atomic<int> g_workers{0};
}

void set_default_workers(int n) { g_workers.store(n > 0 ? n : 0); }

int default_workers() {
  int n = g_workers.load();
  if (n > 0) return n;
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body,
                  int workers) {
  if (workers <= 0) workers = default_workers();
  if (workers <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::size_t nthreads = std::min<std::size_t>(workers, n);
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  std::exception_ptr err;
  std::atomic<bool> failed{false};
  for (std::size_t t = 0; t < nthreads; ++t) {
    pool.emplace_back([&, t]() {
      std::size_t lo = n * t / nthreads;
      std::size_t hi = n * (t + 1) / nthreads;
      try {
        for (std::size_t i = lo; i < hi; ++i) {
          if (failed.load(std::memory_order_relaxed)) return;
          body(i);
        }
      } catch (...) {
        bool expected = false;
        if (failed.compare_exchange_strong(expected, true)) {
          err = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace stochdg
