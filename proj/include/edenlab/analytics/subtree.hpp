#pragma once
// The epsilon-subtree mean: the engine-independent half of the growth
// ratio argument.
//
// Take a rooted tree in which every node (root included) has d-1 children
// and an independent Exp(1) weight, and let eps solve
// P(weight < eps) = 1/(d+1), i.e. eps = ln((d+1)/d). The maximal subtree
// containing the root whose nodes all have weight < eps has expected size
//
//     E = (1/(d+1)) (1 + (d-1) E)   =>   E = 1/2,
//
// independent of d. That constant is what makes one boundary ring per eps
// of time the typical growth increment. The sampler here is a direct
// generation-by-generation Galton-Watson walk: each node is in the subtree
// iff its own weight is below eps and its parent is in, so offspring
// counts are Binomial(d-1, 1/(d+1)) and the process is subcritical
// (mean offspring (d-1)/(d+1) < 1). Generations whose reach probability
// falls below 1e-9 are truncated; the report carries both the truncation
// count and the analytic ceiling on the mass ignored.

#include <cmath>
#include <cstdint>
#include <vector>

#include "edenlab/core/error.hpp"
#include "edenlab/core/rng.hpp"
#include "edenlab/core/stats.hpp"
#include "edenlab/growth/ratio.hpp"

namespace edenlab {

struct subtree_report {
  int degree = 0;              ///< ambient graph degree d
  double epsilon = 0.0;        ///< ln((d+1)/d)
  std::uint64_t trials = 0;
  mean_sd stats;               ///< subtree size: mean 1/2 expected
  double root_in_fraction = 0.0;      ///< empirical P(root in) vs 1/(d+1)
  double conditional_mean = 0.0;      ///< mean size given root in, vs (d+1)/2
  std::uint64_t truncation_depth = 0; ///< generations sampled before cutoff
  std::uint64_t truncated_trials = 0; ///< trials still alive at the cutoff
  double truncation_bound = 0.0;      ///< analytic ceiling on the lost mean mass
};

/// Samples the eps-subtree size distribution and reports its mean against
/// the exact value 1/2 (plus the root-inclusion and conditional-mean
/// decompositions that follow from the same recurrence).
inline subtree_report subtree_expectation_check(int d, std::uint64_t trials,
                                                std::uint64_t seed) {
  if (d < 3) throw usage_error("subtree_expectation_check: degree must be >= 3");
  if (trials < 1) throw usage_error("subtree_expectation_check: need >= 1 trial");

  subtree_report rep;
  rep.degree = d;
  rep.epsilon = epsilon_for_degree(d);
  rep.trials = trials;

  const double p = 1.0 / (d + 1.0);      // P(one node's weight < eps)
  const double mp = (d - 1.0) * p;       // mean offspring, < 1
  // Reach probability of generation k is at most p * mp^k (expected count
  // bound); cut once that ceiling drops below 1e-9.
  double reach = p;
  while (reach >= 1e-9) {
    reach *= mp;
    ++rep.truncation_depth;
  }
  // Mean mass beyond the cutoff: sum_{k > depth} p mp^k = reach * mp/(1-mp).
  rep.truncation_bound = reach * mp / (1.0 - mp);

  rng_stream rng(seed);
  std::vector<double> sizes;
  sizes.reserve(trials);
  std::uint64_t roots_in = 0;

  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    std::uint64_t alive = rng.uniform01() < p ? 1 : 0;
    std::uint64_t size = alive;
    if (alive > 0) ++roots_in;
    for (std::uint64_t depth = 1; depth <= rep.truncation_depth && alive > 0;
         ++depth) {
      std::uint64_t next = 0;
      const std::uint64_t draws = alive * static_cast<std::uint64_t>(d - 1);
      for (std::uint64_t i = 0; i < draws; ++i)
        if (rng.uniform01() < p) ++next;
      alive = next;
      size += next;
    }
    if (alive > 0) ++rep.truncated_trials;  // still alive at the cutoff depth
    sizes.push_back(static_cast<double>(size));
  }

  rep.stats = mean_and_sd(sizes);
  rep.root_in_fraction = static_cast<double>(roots_in) /
                         static_cast<double>(trials);
  double in_sum = 0.0;  // size >= 1 exactly when the root made it in
  for (double s : sizes)
    if (s > 0.0) in_sum += s;
  rep.conditional_mean = roots_in > 0
                             ? in_sum / static_cast<double>(roots_in)
                             : 0.0;
  return rep;
}

}  // namespace edenlab
