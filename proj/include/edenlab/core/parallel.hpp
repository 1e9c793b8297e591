#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

#include "edenlab/core/error.hpp"

namespace edenlab {

// ---------------------------------------------------------------------------
// Deterministic trial-level parallelism
// ---------------------------------------------------------------------------
//
// Experiments that run many independent trials hand each trial an index and
// a private RNG stream, so the result of an item depends only on its index.
// run_indexed exploits that: items are distributed over a worker pool, but
// the output vector is filled by item index, which makes the collected
// results identical for every worker count.

/// Upper bound on workers; a larger request is almost certainly a typo.
inline constexpr unsigned max_jobs = 64;

/// Validates a worker-count request and returns it unchanged.
inline unsigned checked_jobs(unsigned jobs) {
  if (jobs < 1) throw usage_error("jobs: need at least one worker");
  if (jobs > max_jobs)
    throw limit_error("jobs: refusing more than 64 workers");
  return jobs;
}

/// Runs `work(ctx, i)` for every i in [0, count) and returns the results
/// in index order.
///
/// Each worker thread builds one private context via `make_ctx()` and then
/// pulls item indices from a shared counter; with `jobs == 1` the single
/// context lives on the calling thread and the loop is a plain sequential
/// scan.  Because an item sees only its index and a context that is
/// semantically equivalent across workers, the returned vector is
/// byte-identical for every `jobs` value.
///
/// T must be default-constructible.  If any item throws, the exception of
/// the lowest failing index is rethrown after all workers have joined, so
/// failures are deterministic as well.
template <class T, class MakeCtx, class Work>
std::vector<T> run_indexed(std::uint64_t count, unsigned jobs,
                           MakeCtx make_ctx, Work work) {
  checked_jobs(jobs);
  std::vector<T> out(count);
  if (count == 0) return out;

  if (jobs == 1) {
    auto ctx = make_ctx();
    for (std::uint64_t i = 0; i < count; ++i) out[i] = work(ctx, i);
    return out;
  }

  const auto workers = static_cast<unsigned>(
      std::min<std::uint64_t>(jobs, count));
  std::vector<std::exception_ptr> item_errors(count);
  std::vector<std::exception_ptr> worker_errors(workers);
  std::atomic<std::uint64_t> next{0};

  auto body = [&](unsigned w) {
    try {
      auto ctx = make_ctx();
      for (;;) {
        const std::uint64_t i = next.fetch_add(1, std::memory_order_relaxed);
        if (i >= count) break;
        try {
          out[i] = work(ctx, i);
        } catch (...) {
          item_errors[i] = std::current_exception();
        }
      }
    } catch (...) {
      worker_errors[w] = std::current_exception();
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body, w);
  for (auto& t : pool) t.join();

  for (auto& e : item_errors)
    if (e) std::rethrow_exception(e);
  for (auto& e : worker_errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace edenlab
