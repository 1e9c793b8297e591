#pragma once
// Quasi-isometry comparison of isoperimetric profiles.
//
// Given graphs T, W and a claimed (C, K)-quasi-isometry f : T -> W, the
// profiles can differ at most by a constructive factor
//     N_T(C*K) * N_W(K) * deg(T)^(C*(3K+1))
// (ball volumes count how much f can collapse, the degree power bounds the
// boundary distortion of transported sets). qi_compare first spot-checks the
// claimed constants on a ball — a map violating them is a caller error —
// then computes both exact profiles and verifies the two-sided bound.

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "edenlab/core/error.hpp"
#include "edenlab/graph/concepts.hpp"
#include "edenlab/graph/ops.hpp"
#include "edenlab/iso/enumerate.hpp"

namespace edenlab {

struct qi_row {
  std::size_t n = 0;
  std::uint64_t f_t = 0;  ///< profile of T at n
  std::uint64_t f_w = 0;  ///< profile of W at n
};

struct qi_report {
  double c = 0.0, k = 0.0;
  double bound = 0.0;            ///< the constructive comparison constant
  double max_ratio_t_over_w = 0.0;
  double max_ratio_w_over_t = 0.0;
  bool within_bound = false;
  std::vector<qi_row> rows;
};

template <graph_backend GT, graph_backend GW, typename Map>
qi_report qi_compare(const GT& gt, const GW& gw, Map&& f, double c, double k,
                     std::size_t n_max, int check_radius = 3,
                     std::uint64_t node_budget = 200000000ull) {
  if (c < 1.0 || k < 0.0)
    throw usage_error("qi_compare: need C >= 1 and K >= 0");

  // Spot-check the claimed constants on all pairs in a ball around the origin.
  const auto probe = ball(gt, gt.origin(), check_radius);
  const int cap_t = 2 * check_radius + 1;
  const int cap_w = static_cast<int>(std::ceil(c * (2 * check_radius) + k)) + 1;
  for (std::size_t i = 0; i < probe.verts.size(); ++i) {
    for (std::size_t j = i + 1; j < probe.verts.size(); ++j) {
      const auto dt = distance_within(gt, probe.verts[i], probe.verts[j], cap_t);
      if (!dt) continue;  // outside cap; not expected within the ball
      const auto dw =
          distance_within(gw, f(probe.verts[i]), f(probe.verts[j]), cap_w);
      const double upper = c * *dt + k;
      const double lower = *dt / c - k;
      const double dwv = dw ? static_cast<double>(*dw) : static_cast<double>(cap_w);
      if (dwv > upper || dwv < lower)
        throw usage_error("qi_compare: the claimed map is not a (" +
                          std::to_string(c) + ", " + std::to_string(k) +
                          ")-quasi-isometry: d_T = " + std::to_string(*dt) +
                          " maps to d_W = " + std::to_string(dwv));
    }
  }

  const auto prof_t = exact_connected_profile(gt, n_max, node_budget);
  const auto prof_w = exact_connected_profile(gw, n_max, node_budget);

  qi_report rep;
  rep.c = c;
  rep.k = k;
  const double n_t = static_cast<double>(
      ball(gt, gt.origin(), static_cast<int>(std::llround(c * k))).volume());
  const double n_w = static_cast<double>(
      ball(gw, gw.origin(), static_cast<int>(std::llround(k))).volume());
  rep.bound = n_t * n_w * std::pow(static_cast<double>(gt.degree()), c * (3.0 * k + 1.0));

  for (std::size_t n = 1; n <= n_max; ++n) {
    qi_row row;
    row.n = n;
    row.f_t = prof_t.value(n);
    row.f_w = prof_w.value(n);
    rep.rows.push_back(row);
    const double rt = static_cast<double>(row.f_t) / static_cast<double>(row.f_w);
    const double rw = static_cast<double>(row.f_w) / static_cast<double>(row.f_t);
    if (rt > rep.max_ratio_t_over_w) rep.max_ratio_t_over_w = rt;
    if (rw > rep.max_ratio_w_over_t) rep.max_ratio_w_over_t = rw;
  }
  rep.within_bound =
      rep.max_ratio_t_over_w <= rep.bound && rep.max_ratio_w_over_t <= rep.bound;
  return rep;
}

} // namespace edenlab
