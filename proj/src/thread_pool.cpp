#include "curlclean/mol/thread_pool.hpp"

#include <algorithm>

namespace curlclean {

ThreadPool::ThreadPool(int threads) {
  const int n = std::max(1, threads);
  tasks_.resize(n - 1);
  pending_.assign(n - 1, false);
  for (int i = 0; i < n - 1; ++i) workers_.emplace_back([this, i] { worker_loop(i); });
}

ThreadPool::~ThreadPool() {
  {
    std::lock_guard<std::mutex> lk(mu_);
    stop_ = true;
  }
  cv_work_.notify_all();
  for (auto& w : workers_) w.join();
}

void ThreadPool::worker_loop(int slot) {
  std::uint64_t seen = 0;
  for (;;) {
    Task t;
    {
      std::unique_lock<std::mutex> lk(mu_);
      cv_work_.wait(lk, [&] { return stop_ || (pending_[slot] && generation_ != seen); });
      if (stop_) return;
      seen = generation_;
      t = tasks_[slot];
      pending_[slot] = false;
    }
    try {
      if (t.begin < t.end) (*t.fn)(t.begin, t.end);
    } catch (...) {
      std::lock_guard<std::mutex> lk(mu_);
      if (!error_) error_ = std::current_exception();
    }
    {
      std::lock_guard<std::mutex> lk(mu_);
      if (--outstanding_ == 0) cv_done_.notify_all();
    }
  }
}

void ThreadPool::parallel_for(std::int64_t n,
                              const std::function<void(std::int64_t, std::int64_t)>& fn) {
  const int nw = size();
  if (nw == 1 || n <= 1) {
    if (n > 0) fn(0, n);
    return;
  }
  // contiguous slabs, remainder spread over the leading slabs
  const std::int64_t base = n / nw, rem = n % nw;
  std::int64_t cursor = base + (rem > 0 ? 1 : 0);  // slab 0 runs on this thread
  const std::int64_t my_end = cursor;
  {
    std::lock_guard<std::mutex> lk(mu_);
    error_ = nullptr;
    ++generation_;
    outstanding_ = 0;
    for (int w = 0; w < nw - 1; ++w) {
      const std::int64_t len = base + (w + 1 < rem ? 1 : 0);
      tasks_[w] = Task{cursor, cursor + len, &fn};
      cursor += len;
      pending_[w] = true;
      ++outstanding_;
    }
  }
  cv_work_.notify_all();
  try {
    if (my_end > 0) fn(0, my_end);
  } catch (...) {
    std::lock_guard<std::mutex> lk(mu_);
    if (!error_) error_ = std::current_exception();
  }
  {
    std::unique_lock<std::mutex> lk(mu_);
    cv_done_.wait(lk, [&] { return outstanding_ == 0; });
    if (error_) {
      auto e = error_;
      error_ = nullptr;
      std::rethrow_exception(e);
    }
  }
}

}  // namespace curlclean
