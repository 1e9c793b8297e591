#pragma once
// Monte Carlo cross-checks for the tree expectation curves, plus the
// exponential size/time relationship on arbitrary backends.
//
// expected_size_mc drives the actual growth engine on a degree-n tree —
// not a size-only shortcut — so agreement with the quadrature curve
// exercises the full jump-chain machinery. growth_rate_bound_check
// exhibits the two directions of the size/time relationship:
//
//   * |A(t)| <= D^t for a finite empirical D (exponential size bound),
//   * t >= log_D |A(t)| (time grows at least logarithmically in size).
//
// Both are reported from per-trial maxima so the bound direction holds by
// construction once D-hat is fixed; what the report adds is the measured
// rate itself (log-slope fit), which separates exponential backends
// (trees: rate near n-2) from polynomial ones (lattices: rate sinking
// toward zero as the horizon grows).

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "edenlab/core/error.hpp"
#include "edenlab/core/parallel.hpp"
#include "edenlab/core/rng.hpp"
#include "edenlab/core/stats.hpp"
#include "edenlab/graph/concepts.hpp"
#include "edenlab/graph/tree.hpp"
#include "edenlab/growth/eden.hpp"

namespace edenlab {

/// One Monte Carlo estimate of E|A(t)| with its sampling error.
struct mc_point {
  int degree = 0;
  double t = 0.0;
  std::uint64_t trials = 0;
  mean_sd stats;  ///< mean cluster size, sample sd, stderr
};

/// Monte Carlo E|A(t)| on the degree-n tree via the growth engine.
/// Each trial runs an independent engine stream to fpp time t.
inline mc_point expected_size_mc(int n, double t, std::uint64_t trials,
                                 std::uint64_t seed) {
  if (n < 3) throw usage_error("expected_size_mc: degree must be >= 3");
  if (!(t >= 0.0)) throw usage_error("expected_size_mc: time must be >= 0");
  if (trials < 1000)
    throw usage_error("expected_size_mc: need >= 1000 trials for a usable stderr");

  const tree_graph tree(n);
  std::vector<double> sizes;
  sizes.reserve(trials);
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    eden_engine<tree_graph> eng(tree, derive_stream_seed(seed, trial));
    eng.run_to_fpp_time(t);
    sizes.push_back(static_cast<double>(eng.state().size()));
  }

  mc_point out;
  out.degree = n;
  out.t = t;
  out.trials = trials;
  out.stats = mean_and_sd(sizes);
  return out;
}

/// Monte Carlo estimates at several times from the *same* trials: each
/// trial's engine is advanced through the grid once, so the points are
/// values of one coupled trajectory per trial (cheaper and smoother than
/// independent runs per time).
inline std::vector<mc_point> expected_size_mc_grid(int n,
                                                   const std::vector<double>& ts,
                                                   std::uint64_t trials,
                                                   std::uint64_t seed,
                                                   unsigned jobs = 1) {
  if (n < 3) throw usage_error("expected_size_mc_grid: degree must be >= 3");
  if (ts.empty()) throw usage_error("expected_size_mc_grid: empty time grid");
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (!(ts[i] >= 0.0)) throw usage_error("expected_size_mc_grid: negative time");
    if (i > 0 && !(ts[i] > ts[i - 1]))
      throw usage_error("expected_size_mc_grid: grid must be strictly increasing");
  }
  if (trials < 1000)
    throw usage_error("expected_size_mc_grid: need >= 1000 trials for a usable stderr");
  checked_jobs(jobs);

  // One work item per trial: the sizes observed along the whole time grid.
  const auto run_trial = [&](const tree_graph& tree, std::uint64_t trial) {
    eden_engine<tree_graph> eng(tree, derive_stream_seed(seed, trial));
    std::vector<double> row;
    row.reserve(ts.size());
    for (const double t : ts) {
      eng.run_to_fpp_time(t);
      row.push_back(static_cast<double>(eng.state().size()));
    }
    return row;
  };
  const auto per_trial = run_indexed<std::vector<double>>(
      trials, jobs, [&] { return tree_graph(n); }, run_trial);

  std::vector<std::vector<double>> sizes(ts.size());
  for (auto& column : sizes) column.reserve(trials);
  for (const auto& row : per_trial)
    for (std::size_t i = 0; i < ts.size(); ++i) sizes[i].push_back(row[i]);

  std::vector<mc_point> out(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) {
    out[i].degree = n;
    out[i].t = ts[i];
    out[i].trials = trials;
    out[i].stats = mean_and_sd(sizes[i]);
  }
  return out;
}

/// Empirical exponential size/time relationship for one backend.
struct growth_rate_report {
  std::string graph;            ///< backend descriptor
  std::uint64_t trials = 0;
  std::vector<double> grid;     ///< evaluation times 1, 2, ..., floor(t_max)
  std::vector<double> mean_log_size;  ///< mean of log|A(t)| per grid time
  double fit_rate = 0.0;        ///< least-squares slope of log|A(t)| vs t
  double sup_rate = 0.0;        ///< max over trials and grid of log|A(t)|/t
  double d_hat = 0.0;           ///< exp(sup_rate + margin); the empirical D
  double bound_fraction = 0.0;  ///< fraction of trials with |A(t)| <= d_hat^t throughout
  double min_time_over_log_size = 0.0;  ///< min over trials of t/log|A(t)| at the horizon
};

/// Measures sizes at integer times 1..floor(t_max) across independent
/// trials and reports the empirical rate, a dominating base d_hat, and the
/// logarithmic lower bound on time as a function of size.
template <graph_backend G>
growth_rate_report growth_rate_bound_check(const G& g, double t_max,
                                           std::uint64_t trials,
                                           std::uint64_t seed) {
  if (!(t_max >= 1.0))
    throw usage_error("growth_rate_bound_check: need t_max >= 1 for a rate");
  if (trials < 1) throw usage_error("growth_rate_bound_check: need >= 1 trial");

  // Margin added on top of the observed supremum rate before exponentiating;
  // keeps d_hat strictly dominating what was measured rather than touching it.
  constexpr double rate_margin = 0.15;

  growth_rate_report rep;
  rep.graph = g.descriptor();
  rep.trials = trials;
  for (double t = 1.0; t <= t_max + 1e-9; t += 1.0) rep.grid.push_back(t);

  const std::size_t nt = rep.grid.size();
  std::vector<double> log_sum(nt, 0.0);
  std::vector<double> trial_sup(trials, 0.0);
  rep.min_time_over_log_size = std::numeric_limits<double>::infinity();

  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    eden_engine<G> eng(g, derive_stream_seed(seed, trial));
    for (std::size_t i = 0; i < nt; ++i) {
      eng.run_to_fpp_time(rep.grid[i]);
      const double log_size = std::log(static_cast<double>(eng.state().size()));
      log_sum[i] += log_size;
      const double rate = log_size / rep.grid[i];
      if (rate > trial_sup[trial]) trial_sup[trial] = rate;
      if (i + 1 == nt && log_size > 0.0) {
        const double ratio = rep.grid[i] / log_size;
        if (ratio < rep.min_time_over_log_size) rep.min_time_over_log_size = ratio;
      }
    }
    if (trial_sup[trial] > rep.sup_rate) rep.sup_rate = trial_sup[trial];
  }

  rep.mean_log_size.resize(nt);
  for (std::size_t i = 0; i < nt; ++i)
    rep.mean_log_size[i] = log_sum[i] / static_cast<double>(trials);

  // Least-squares slope of mean log-size against time.
  double st = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < nt; ++i) {
    st += rep.grid[i];
    sy += rep.mean_log_size[i];
  }
  const double tbar = st / static_cast<double>(nt);
  const double ybar = sy / static_cast<double>(nt);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < nt; ++i) {
    sxx += (rep.grid[i] - tbar) * (rep.grid[i] - tbar);
    sxy += (rep.grid[i] - tbar) * (rep.mean_log_size[i] - ybar);
  }
  rep.fit_rate = sxx > 0.0 ? sxy / sxx : 0.0;

  rep.d_hat = std::exp(rep.sup_rate + rate_margin);
  std::uint64_t within = 0;
  const double log_d_hat = std::log(rep.d_hat);
  for (std::uint64_t trial = 0; trial < trials; ++trial)
    if (trial_sup[trial] <= log_d_hat) ++within;
  rep.bound_fraction = static_cast<double>(within) / static_cast<double>(trials);
  return rep;
}

}  // namespace edenlab
