#pragma once
// Growth-ratio diagnostics over recorded traces.
//
// For a degree-d graph, eps = ln((d+1)/d) is the time in which a fixed
// boundary vertex is infected with probability 1/(d+1) (solve
// 1 - e^{-eps} = 1/(d+1)). The check reports, at each requested time t:
//   * how often |A(t+eps)| <= |A(t)| + |∂A(t)| across trials — the
//     one-ring-per-eps event, whose frequency should approach 1 as t grows;
//   * the mean ratio |A(t)| / |A(max(t-2, 0))|, a two-unit growth factor.
// Everything is computed from trace rows alone; `horizon` is the fpp time
// each trace was run to, so a trace whose last row is earlier than a query
// point is still exact (no event happened in between).

#include <cmath>
#include <cstdint>
#include <vector>

#include "edenlab/core/error.hpp"
#include "edenlab/growth/trace.hpp"

namespace edenlab {

inline double epsilon_for_degree(int degree) {
  if (degree < 1) throw usage_error("epsilon_for_degree: degree must be >= 1");
  return std::log((degree + 1.0) / static_cast<double>(degree));
}

struct growth_ratio_point {
  double t = 0.0;
  std::uint64_t trials_evaluated = 0;
  std::uint64_t trials_skipped = 0;   ///< horizon shorter than t + eps
  double event_frequency = 0.0;       ///< P[|A(t+eps)| <= |A(t)| + |∂A(t)|]
  double mean_ratio_two_back = 0.0;   ///< mean |A(t)| / |A(max(t-2,0))|
};

struct growth_ratio_report {
  double epsilon = 0.0;
  std::vector<growth_ratio_point> points;
};

namespace detail {

/// Cluster size and boundary size at fpp time tau, from rows sorted by time.
/// Before the first row (tau < 0 never happens; row 0 is at time 0).
inline std::pair<std::uint64_t, std::uint64_t>
state_at(const std::vector<trace_row>& rows, double tau) {
  // Last row with fpp_time <= tau.
  std::size_t lo = 0, hi = rows.size();
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (rows[mid].fpp_time <= tau)
      lo = mid;
    else
      hi = mid;
  }
  return {rows[lo].cluster_size, rows[lo].boundary_size};
}

} // namespace detail

/// Evaluate the ratio diagnostics on a set of traces that were each run to
/// fpp time `horizon`. Times with t + eps beyond the horizon are reported as
/// fully skipped rather than guessed.
inline growth_ratio_report growth_ratio_check(
    const std::vector<std::vector<trace_row>>& traces, int degree,
    const std::vector<double>& times, double horizon) {
  if (traces.empty()) throw usage_error("growth_ratio_check: no traces given");
  for (const auto& rows : traces) {
    if (rows.empty() || rows.front().step != 0 || rows.front().fpp_time != 0.0)
      throw usage_error("growth_ratio_check: traces must start at the seed row");
  }
  growth_ratio_report rep;
  rep.epsilon = epsilon_for_degree(degree);
  for (const double t : times) {
    growth_ratio_point pt;
    pt.t = t;
    double ratio_sum = 0.0;
    std::uint64_t events = 0;
    for (const auto& rows : traces) {
      if (t + rep.epsilon > horizon) {
        ++pt.trials_skipped;
        continue;
      }
      const auto [size_t0, boundary_t0] = detail::state_at(rows, t);
      const auto [size_eps, boundary_eps] = detail::state_at(rows, t + rep.epsilon);
      (void)boundary_eps;
      const auto [size_back, boundary_back] = detail::state_at(rows, t > 2.0 ? t - 2.0 : 0.0);
      (void)boundary_back;
      if (size_eps <= size_t0 + boundary_t0) ++events;
      ratio_sum += static_cast<double>(size_t0) / static_cast<double>(size_back);
      ++pt.trials_evaluated;
    }
    pt.event_frequency = pt.trials_evaluated
                             ? static_cast<double>(events) / static_cast<double>(pt.trials_evaluated)
                             : 0.0;
    pt.mean_ratio_two_back =
        pt.trials_evaluated ? ratio_sum / static_cast<double>(pt.trials_evaluated) : 0.0;
    rep.points.push_back(pt);
  }
  return rep;
}

} // namespace edenlab
