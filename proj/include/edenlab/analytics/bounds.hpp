#pragma once
// The proved exponential ceiling on tree expectation curves.
//
// On the degree-n tree, E|A(t)| < C e^{(n-1)t} for a constant C chosen so
// the bound holds on [0, n]; a continuity/renewal argument then extends it
// to all t. This check follows that recipe literally: it takes the
// quadrature curve, computes the smallest C that works on [0, n], and then
// asserts the extended bound out to t_max. A violation is a hard failure —
// the bound is proved, so breaking it means the curve (or the grid) is
// wrong, not the mathematics.
//
// The exponent n-1 is deliberately looser than the sharp growth rate n-2
// from the ODE reduction; the report includes the measured tail rate so
// the slack is visible rather than silently absorbed.

#include <cmath>
#include <string>

#include "edenlab/analytics/expectation.hpp"
#include "edenlab/core/error.hpp"

namespace edenlab {

struct exponential_bound_report {
  int degree = 0;
  double c_star = 0.0;      ///< smallest C with g(t) <= C e^{(n-1)t} on [0, n]
  double c_star_at = 0.0;   ///< grid time where that ratio peaks
  double t_max = 0.0;       ///< horizon the extended bound was checked to
  double max_ratio = 0.0;   ///< max over the whole grid of g(t) / (C e^{(n-1)t})
  double tail_rate = 0.0;   ///< log-slope of the curve's upper half, near n-2
  bool holds = false;
};

/// Computes C on [0, n] from the quadrature curve and asserts
/// g(t) <= C e^{(n-1)t} for every grid point up to t_max.
inline exponential_bound_report exponential_bound_check(int n, double t_max,
                                                        double dt = 1e-3) {
  if (n < 3) throw usage_error("exponential_bound_check: degree must be >= 3");
  if (!(t_max > 0.0)) throw usage_error("exponential_bound_check: t_max must be > 0");

  const double horizon = std::max(t_max, static_cast<double>(n));
  const expectation_curve curve = expected_size_quadrature(n, horizon, dt);

  exponential_bound_report rep;
  rep.degree = n;
  rep.t_max = t_max;

  const double rate = static_cast<double>(n - 1);
  for (std::size_t i = 0; i < curve.ts.size(); ++i) {
    if (curve.ts[i] > static_cast<double>(n) + 1e-12) break;
    const double ratio = curve.gs[i] * std::exp(-rate * curve.ts[i]);
    if (ratio > rep.c_star) {
      rep.c_star = ratio;
      rep.c_star_at = curve.ts[i];
    }
  }

  for (std::size_t i = 0; i < curve.ts.size(); ++i) {
    if (curve.ts[i] > t_max + 1e-12) break;
    const double ratio =
        curve.gs[i] * std::exp(-rate * curve.ts[i]) / rep.c_star;
    if (ratio > rep.max_ratio) rep.max_ratio = ratio;
  }

  // Tolerance covers only floating-point noise: by construction the ratio
  // is exactly 1 at the [0, n] peak and must not exceed it beyond.
  rep.holds = rep.max_ratio <= 1.0 + 1e-9;
  if (!rep.holds)
    throw invariant_error(
        "exponential_bound_check: curve exceeds C e^{(n-1)t} (ratio " +
        std::to_string(rep.max_ratio) + " at degree " + std::to_string(n) +
        "); the bound is proved, so the quadrature must be wrong");

  const std::size_t last = curve.ts.size() - 1;
  const std::size_t half = last / 2;
  rep.tail_rate = (std::log(curve.gs[last]) - std::log(curve.gs[half])) /
                  (curve.ts[last] - curve.ts[half]);
  return rep;
}

}  // namespace edenlab
