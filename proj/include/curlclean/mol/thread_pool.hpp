#pragma once
#include <condition_variable>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace curlclean {

// Persistent worker pool for grid sweeps.  parallel_for splits [0,n) into
// one contiguous slab per worker; slab boundaries depend only on (n, size),
// never on timing, so any data race-free kernel produces identical results
// at every worker count (reductions are handled by the callers, which keep
// per-slab partials in index order).
class ThreadPool {
 public:
  explicit ThreadPool(int threads);
  ~ThreadPool();

  int size() const { return int(workers_.size()) + 1; }

  // fn(begin, end) over half-open index ranges; blocks until all slabs are
  // done.  The calling thread works too.  The first exception thrown by any
  // slab is rethrown here.
  void parallel_for(std::int64_t n, const std::function<void(std::int64_t, std::int64_t)>& fn);

 private:
  struct Task {
    std::int64_t begin = 0, end = 0;
    const std::function<void(std::int64_t, std::int64_t)>* fn = nullptr;
  };
  void worker_loop(int slot);

  std::vector<std::thread> workers_;
  std::mutex mu_;
  std::condition_variable cv_work_, cv_done_;
  std::vector<Task> tasks_;     // one slot per worker
  std::vector<bool> pending_;   // slot has unconsumed work
  int outstanding_ = 0;
  std::uint64_t generation_ = 0;
  bool stop_ = false;
  std::exception_ptr error_;
};

}  // namespace curlclean
