#pragma once
// Betti-number growth experiment: grow independent clusters to each target
// size, compute beta_1 of the nerve, and summarize how it scales with the
// cluster size. On non-amenable tilings beta_1 grows linearly (the report
// carries the through-origin fit over per-size medians plus the empirical
// ratio envelope); on Z^2 the same table documents the contrast without
// asserting a law. Every run re-checks beta_0 against union-find and the
// simplex-count bound, so a broken complex aborts rather than skewing data.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "edenlab/core/error.hpp"
#include "edenlab/core/parallel.hpp"
#include "edenlab/core/rng.hpp"
#include "edenlab/graph/concepts.hpp"
#include "edenlab/growth/eden.hpp"
#include "edenlab/nerve/betti.hpp"
#include "edenlab/nerve/complex.hpp"

namespace edenlab {

struct betti_scaling_row {
  std::uint64_t target_size = 0;
  std::uint64_t trial = 0;
  std::uint64_t seed = 0;      ///< derived per-trial stream seed
  std::int64_t beta0 = 0;
  std::int64_t beta1 = 0;
};

struct betti_scaling_summary {
  std::uint64_t target_size = 0;
  double median_beta1 = 0.0;
};

struct betti_scaling_result {
  std::vector<betti_scaling_row> rows;
  std::vector<betti_scaling_summary> per_size;
  double slope = 0.0;      ///< through-origin least squares over per-size medians
  double r_squared = 0.0;  ///< 1 - SS_res/SS_tot on the medians
  double ratio_min = 0.0;  ///< min beta1/size over all rows (empirical c)
  double ratio_max = 0.0;  ///< max beta1/size over all rows (empirical C)
};

/// Grows trials independent clusters per target size (stream seed
/// derive_stream_seed(seed, size_index * trials + trial)), computes beta_1 of
/// each nerve at k_max = 2, and fits beta_1 against cluster size.  With
/// `jobs` > 1 trials run on a worker pool (one private graph copy per
/// worker); rows and fits are identical for every worker count.
template <tiling_backend G>
betti_scaling_result betti_scaling_experiment(const G& g,
                                              const std::vector<std::uint64_t>& sizes,
                                              std::uint64_t trials, std::uint64_t seed,
                                              unsigned jobs = 1) {
  if (sizes.empty() || trials == 0)
    throw usage_error("betti_scaling_experiment: need at least one size and one trial");
  for (const auto s : sizes) {
    if (s < 1) throw usage_error("betti_scaling_experiment: sizes must be >= 1");
  }
  checked_jobs(jobs);

  const auto run_item = [&](const G& gg, std::uint64_t item) {
    const auto si = static_cast<std::size_t>(item / trials);
    const std::uint64_t stream = derive_stream_seed(seed, item);
    eden_engine<G> eng(gg, stream);
    eng.run_to_size(sizes[si]);

    const auto cx = build_nerve(gg, eng.state().infected_order(), 2);
    const auto beta = betti_vector(cx);
    if (beta[0] != static_cast<std::int64_t>(component_count(cx)))
      throw invariant_error("beta_0 disagrees with the union-find component count");
    simplex_bound_check(gg, cx, eng.state().size());

    betti_scaling_row row;
    row.target_size = sizes[si];
    row.trial = item % trials;
    row.seed = stream;
    row.beta0 = beta[0];
    row.beta1 = beta[1];
    return row;
  };

  betti_scaling_result res;
  res.rows = run_indexed<betti_scaling_row>(
      static_cast<std::uint64_t>(sizes.size()) * trials, jobs,
      [&] { return g; }, run_item);

  bool first_ratio = true;
  for (std::size_t si = 0; si < sizes.size(); ++si) {
    std::vector<double> beta1s;
    beta1s.reserve(trials);
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
      const auto& row = res.rows[si * trials + trial];
      beta1s.push_back(static_cast<double>(row.beta1));
      const double ratio =
          static_cast<double>(row.beta1) / static_cast<double>(sizes[si]);
      if (first_ratio || ratio < res.ratio_min) res.ratio_min = ratio;
      if (first_ratio || ratio > res.ratio_max) res.ratio_max = ratio;
      first_ratio = false;
    }
    std::sort(beta1s.begin(), beta1s.end());
    const std::size_t h = beta1s.size() / 2;
    betti_scaling_summary sum;
    sum.target_size = sizes[si];
    sum.median_beta1 = (beta1s.size() % 2) ? beta1s[h] : 0.5 * (beta1s[h - 1] + beta1s[h]);
    res.per_size.push_back(sum);
  }

  double sxy = 0.0, sxx = 0.0, sy = 0.0;
  for (const auto& s : res.per_size) {
    const auto x = static_cast<double>(s.target_size);
    sxy += x * s.median_beta1;
    sxx += x * x;
    sy += s.median_beta1;
  }
  res.slope = (sxx > 0.0) ? sxy / sxx : 0.0;
  const double mean = sy / static_cast<double>(res.per_size.size());
  double ss_res = 0.0, ss_tot = 0.0;
  for (const auto& s : res.per_size) {
    const double fit = res.slope * static_cast<double>(s.target_size);
    ss_res += (s.median_beta1 - fit) * (s.median_beta1 - fit);
    ss_tot += (s.median_beta1 - mean) * (s.median_beta1 - mean);
  }
  res.r_squared = (ss_tot > 0.0) ? 1.0 - ss_res / ss_tot : (ss_res == 0.0 ? 1.0 : 0.0);
  return res;
}

} // namespace edenlab
