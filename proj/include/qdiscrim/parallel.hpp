// Copyright 2026 The qdiscrim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace qdiscrim {

/// Trials per RNG stream in every Monte Carlo routine. Block k always uses
/// stream k, so results do not depend on how blocks are spread over workers.
inline constexpr std::size_t kTrialBlock = std::size_t{1} << 15;

/// 0 means one worker per hardware thread.
std::size_t resolve_threads(std::size_t requested);

/// Value of QDISCRIM_THREADS, or 0 when unset or unparsable.
std::size_t threads_from_env();

/// Runs fn(task) for task in [0, n_tasks) on up to `threads` workers.
/// The first exception thrown by any task is rethrown on the caller.
template <class Fn>
void parallel_for(std::size_t n_tasks, std::size_t threads, Fn&& fn) {
  const std::size_t workers = std::min(resolve_threads(threads), n_tasks);
  if (workers <= 1) {
    for (std::size_t t = 0; t < n_tasks; ++t) fn(t);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t t = next++; t < n_tasks; t = next++) {
          try {
            fn(t);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = n_tasks;
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace qdiscrim
