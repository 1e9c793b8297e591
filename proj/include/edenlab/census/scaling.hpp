#pragma once
// Pattern abundance against the isoperimetric profile across cluster sizes.
//
// For each target size, independent clusters are grown and a greedy
// census is packed on each; per-size medians are compared to a profile
// proxy F(n) — the exact profile is only computable at toy sizes, so the
// proxy is the fitted lattice power law, the exact linear tree formula,
// or (for nonamenable tilings, where no numeric closed form is carried) a
// unit-slope linear stand-in, flagged as such in the result. The log-log
// slope of median count against size is the headline number: near 1/2 on
// the square lattice, near 1 on trees and hyperbolic tilings.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "edenlab/census/census.hpp"
#include "edenlab/census/orbit.hpp"
#include "edenlab/census/pattern.hpp"
#include "edenlab/core/error.hpp"
#include "edenlab/core/parallel.hpp"
#include "edenlab/core/rng.hpp"
#include "edenlab/core/stats.hpp"
#include "edenlab/graph/concepts.hpp"
#include "edenlab/growth/eden.hpp"
#include "edenlab/iso/profile.hpp"

namespace edenlab {

struct census_scaling_row {
  std::uint64_t target_size = 0;
  std::uint64_t trial = 0;
  std::uint64_t seed = 0;          ///< derived stream seed for this run
  std::uint64_t count = 0;         ///< greedy census count
  double profile_value = 0.0;      ///< F-proxy at target_size
  double ratio = 0.0;              ///< count / profile_value
};

struct census_size_summary {
  std::uint64_t target_size = 0;
  double median_count = 0.0;
  double median_ratio = 0.0;
};

struct census_scaling_result {
  std::vector<census_scaling_row> rows;
  std::vector<census_size_summary> per_size;
  std::string proxy_label;
  bool proxy_flagged = false;  ///< true when the unit-slope stand-in was used
  bool has_exponent = false;   ///< false when a median count was zero
  double exponent = 0.0;       ///< log-log slope of median count vs size
};

/// Runs `trials` independent clusters at each size, packs a census on
/// each, and reports per-size medians plus the fitted growth exponent.
/// Trials are independent work items keyed by their derived stream seed,
/// so `jobs` workers produce the same rows as a sequential run; each
/// worker operates on its own copy of the graph handle (vertex ids are
/// canonical across instances).
template <graph_backend G>
census_scaling_result census_scaling_experiment(
    const G& g, const pattern_spec<G>& spec, const profile_model& proxy,
    const std::vector<std::uint64_t>& sizes, std::uint64_t trials,
    std::uint64_t seed, match_mode mode = match_mode::transported,
    unsigned jobs = 1) {
  if (sizes.empty()) throw usage_error("census_scaling_experiment: no sizes");
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] < 1)
      throw usage_error("census_scaling_experiment: sizes must be >= 1");
    if (i > 0 && sizes[i] <= sizes[i - 1])
      throw usage_error("census_scaling_experiment: sizes must be increasing");
  }
  if (trials < 1) throw usage_error("census_scaling_experiment: need >= 1 trial");
  checked_jobs(jobs);

  const auto images = pattern_images(g, spec, mode);

  census_scaling_result out;
  out.proxy_flagged = !proxy.has_value;
  out.proxy_label = proxy.has_value ? proxy.label : "linear-stand-in (nonamenable)";

  const auto run_item = [&](const G& gg, std::uint64_t item) {
    const auto si = static_cast<std::size_t>(item / trials);
    const std::uint64_t n = sizes[si];
    const double f_proxy =
        proxy.has_value ? proxy.value(n) : static_cast<double>(n);
    const std::uint64_t stream = derive_stream_seed(seed, item);
    eden_engine<G> eng(gg, stream);
    eng.run_to_size(n);
    const auto census = greedy_census(gg, eng.state(), images);

    census_scaling_row row;
    row.target_size = n;
    row.trial = item % trials;
    row.seed = stream;
    row.count = census.count();
    row.profile_value = f_proxy;
    row.ratio = f_proxy > 0.0
                    ? static_cast<double>(census.count()) / f_proxy
                    : 0.0;
    return row;
  };
  out.rows = run_indexed<census_scaling_row>(
      static_cast<std::uint64_t>(sizes.size()) * trials, jobs,
      [&] { return g; }, run_item);

  for (std::size_t si = 0; si < sizes.size(); ++si) {
    std::vector<double> counts, ratios;
    counts.reserve(trials);
    ratios.reserve(trials);
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
      const auto& row = out.rows[si * trials + trial];
      counts.push_back(static_cast<double>(row.count));
      ratios.push_back(row.ratio);
    }
    census_size_summary summary;
    summary.target_size = sizes[si];
    summary.median_count = median(counts);
    summary.median_ratio = median(ratios);
    out.per_size.push_back(summary);
  }

  // Log-log least squares on the medians; meaningless if any median is 0.
  out.has_exponent = out.per_size.size() >= 2;
  for (const auto& s : out.per_size)
    if (!(s.median_count > 0.0)) out.has_exponent = false;
  if (out.has_exponent) {
    double sx = 0, sy = 0;
    for (const auto& s : out.per_size) {
      sx += std::log(static_cast<double>(s.target_size));
      sy += std::log(s.median_count);
    }
    const double xb = sx / static_cast<double>(out.per_size.size());
    const double yb = sy / static_cast<double>(out.per_size.size());
    double sxx = 0, sxy = 0;
    for (const auto& s : out.per_size) {
      const double dx = std::log(static_cast<double>(s.target_size)) - xb;
      const double dy = std::log(s.median_count) - yb;
      sxx += dx * dx;
      sxy += dx * dy;
    }
    out.exponent = sxx > 0.0 ? sxy / sxx : 0.0;
  }
  return out;
}

}  // namespace edenlab
