// SPDX-FileCopyrightText: © 2026 The gfc authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace gfc {

/// Runs fn(i) for i in [0, count) across hardware threads with a static
/// partition. Work items must write to disjoint state so results do not
/// depend on the schedule. The first exception thrown by any item is
/// rethrown on the calling thread.
inline void parallel_for(std::size_t count,
                         const std::function<void(std::size_t)>& fn) {
  if (count == 0) {
    return;
  }
  std::size_t n_threads = std::thread::hardware_concurrency();
  if (n_threads < 2 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) {
      fn(i);
    }
    return;
  }
  n_threads = std::min(n_threads, count);

  std::mutex error_mutex;
  std::exception_ptr first_error;
  auto worker = [&](std::size_t thread_idx) {
    for (std::size_t i = thread_idx; i < count; i += n_threads) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) {
          first_error = std::current_exception();
        }
        return;
      }
    }
  };

  std::vector<std::thread> threads;
  threads.reserve(n_threads);
  for (std::size_t t = 0; t < n_threads; ++t) {
    threads.emplace_back(worker, t);
  }
  for (auto& t : threads) {
    t.join();
  }
  if (first_error) {
    std::rethrow_exception(first_error);
  }
}

}  // namespace gfc
