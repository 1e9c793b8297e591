#pragma once
// The growth engine: a uniform-boundary jump chain with an attached
// continuous clock.
//
// Each event is sampled in a fixed order — first the clock increment
// dt ~ Exp(rate = |∂A|), then the uniform boundary index — and the pair is
// held as a *pending event* until it commits. run_to_fpp_time leaves the
// first event beyond its horizon pending, so consecutive time-limited runs
// consume the random stream exactly as one long run would:
// run_to_fpp_time(5) followed by run_to_fpp_time(10) reproduces
// run_to_fpp_time(10) bit for bit, and a later run_to_size continues from
// the same committed event sequence.
//
// A zero increment (possible at double precision) or an increment too small
// to advance the clock is a passage-time tie and aborts the trial with
// tie_error; ties are never silently broken.

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "edenlab/core/error.hpp"
#include "edenlab/core/rng.hpp"
#include "edenlab/graph/concepts.hpp"
#include "edenlab/growth/cluster.hpp"
#include "edenlab/growth/trace.hpp"

namespace edenlab {

template <graph_backend G>
class eden_engine {
public:
  using vertex_id = typename G::vertex_id;

  static constexpr std::uint64_t no_cap = std::numeric_limits<std::uint64_t>::max();

  struct run_result {
    std::uint64_t steps = 0;   ///< events committed by this call
    bool truncated = false;    ///< step cap hit before the target
  };

  eden_engine(const G& g, std::uint64_t seed) : state_(g), rng_(seed) {}

  eden_engine(const G& g, std::uint64_t seed, const vertex_id& start)
      : state_(g, start), rng_(seed) {}

  /// Continue growing an existing cluster with a fresh stream.
  eden_engine(cluster_state<G> st, std::uint64_t seed)
      : state_(std::move(st)), rng_(seed) {}

  const cluster_state<G>& state() const { return state_; }

  /// Start recording trace rows, beginning with a row for the current state
  /// (the seed row when called on a fresh engine).
  void enable_trace() {
    if (trace_on_) return;
    trace_on_ = true;
    record_row();
  }

  const std::vector<trace_row>& trace() const { return trace_; }

  /// Commit exactly one event (sampling it first if none is pending).
  vertex_id step() {
    ensure_pending();
    return commit_pending();
  }

  /// Grow until |A| = n (n >= 1). An existing pending event commits first.
  /// With a step cap, stops early and flags truncation.
  run_result run_to_size(std::uint64_t n, std::uint64_t step_cap = no_cap) {
    if (n < 1) throw usage_error("run_to_size: target size must be >= 1");
    run_result r;
    while (state_.size() < n) {
      if (r.steps >= step_cap) {
        r.truncated = true;
        break;
      }
      step();
      ++r.steps;
    }
    return r;
  }

  /// Commit every event with clock value <= t (t >= 0); the first event
  /// beyond t stays pending for the next call.
  run_result run_to_fpp_time(double t, std::uint64_t step_cap = no_cap) {
    if (!(t >= 0.0)) throw usage_error("run_to_fpp_time: target time must be >= 0");
    run_result r;
    for (;;) {
      ensure_pending();
      if (pending_->clock > t) break;
      if (r.steps >= step_cap) {
        r.truncated = true;
        break;
      }
      commit_pending();
      ++r.steps;
    }
    return r;
  }

private:
  struct pending_event {
    double clock;      ///< absolute fpp time of the event
    std::size_t index; ///< boundary slot to infect
  };

  void ensure_pending() {
    if (pending_) return;
    const std::size_t bs = state_.boundary_size();
    const double dt = rng_.exponential(static_cast<double>(bs));
    if (dt <= 0.0)
      throw tie_error("passage-time increment of zero (tie between boundary clocks)");
    const std::size_t idx = static_cast<std::size_t>(
        rng_.uniform_below(static_cast<std::uint64_t>(bs)));
    pending_ = pending_event{state_.fpp_clock() + dt, idx};
  }

  vertex_id commit_pending() {
    const pending_event ev = *pending_;
    pending_.reset();
    // infect_boundary_at raises tie_error if ev.clock failed to advance
    // past the current clock (dt below one ulp).
    const vertex_id v = state_.infect_boundary_at(ev.index, ev.clock);
    if (trace_on_) record_row();
    return v;
  }

  void record_row() {
    trace_row row;
    row.step = state_.step_count();
    row.vertex = state_.graph().print_id(state_.infected_order().back());
    row.fpp_time = state_.fpp_clock();
    row.boundary_size = state_.boundary_size();
    row.cluster_size = state_.size();
    trace_.push_back(std::move(row));
  }

  cluster_state<G> state_;
  rng_stream rng_;
  std::optional<pending_event> pending_;
  bool trace_on_ = false;
  std::vector<trace_row> trace_;
};

} // namespace edenlab
