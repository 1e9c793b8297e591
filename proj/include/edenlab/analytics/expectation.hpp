#pragma once
// Expected cluster size on regular trees: E|A(t)| as a curve over time.
//
// On the degree-n regular tree (every vertex has n neighbours, so each
// non-root vertex has n-1 children), the expected Eden/FPP cluster size
// g(t) = E|A(t)| satisfies the renewal equation
//
//     g(t) = 2 - e^{-t} + (n-1) * \int_0^t e^{-s} g(t-s) ds,
//
// obtained by conditioning on the infection time of each of the root's n
// primary subtrees. This file solves that equation two independent ways:
//
//   * expected_size_quadrature — direct implicit-trapezoid stepping on the
//     convolution (no analytic shortcuts), the reference numerical method;
//   * expected_size_ode — the closed form of the equivalent linear ODE
//     g' = (n-2) g + 2, g(0) = 1, namely
//     g(t) = (n/(n-2)) e^{(n-2)t} - 2/(n-2).
//
// The reduction to the ODE: substituting u = t-s turns the convolution
// into e^{-t} \int_0^t e^u g(u) du, and differentiating then telescopes to
// g' = (n-2) g + 2. That reduction is never taken on faith — tests
// cross-check both curves numerically, and a Monte Carlo estimator
// (mc.hpp) arbitrates between them.

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "edenlab/core/error.hpp"

namespace edenlab {

enum class growth_method { ode, quadrature, monte_carlo };

inline const char* growth_method_name(growth_method m) {
  switch (m) {
    case growth_method::ode: return "ode";
    case growth_method::quadrature: return "quadrature";
    case growth_method::monte_carlo: return "monte-carlo";
  }
  throw invariant_error("growth_method_name: unknown tag");
}

/// E|A(t)| sampled on an increasing time grid starting at t = 0.
struct expectation_curve {
  int degree = 0;  ///< tree degree n (>= 3)
  growth_method method = growth_method::quadrature;
  std::vector<double> ts;  ///< grid times, ts[0] == 0
  std::vector<double> gs;  ///< values, gs[0] == 1

  /// Structural invariants: grid/value shape, g(0) = 1, strict growth.
  void validate() const {
    if (ts.size() != gs.size() || ts.empty())
      throw invariant_error("expectation_curve: grid/value size mismatch");
    if (ts.front() != 0.0)
      throw invariant_error("expectation_curve: grid must start at t = 0");
    if (std::abs(gs.front() - 1.0) > 1e-12)
      throw invariant_error("expectation_curve: g(0) must be 1, got " +
                            std::to_string(gs.front()));
    for (std::size_t i = 1; i < ts.size(); ++i) {
      if (!(ts[i] > ts[i - 1]))
        throw invariant_error("expectation_curve: grid not increasing");
      if (!(gs[i] > gs[i - 1]))
        throw invariant_error("expectation_curve: values not strictly increasing");
    }
  }
};

/// Closed form of the ODE reduction: (n/(n-2)) e^{(n-2)t} - 2/(n-2).
inline double tree_growth_closed_form(int n, double t) {
  if (n < 3) throw usage_error("tree_growth_closed_form: degree must be >= 3");
  if (!(t >= 0.0)) throw usage_error("tree_growth_closed_form: time must be >= 0");
  const double k = static_cast<double>(n - 2);
  return (static_cast<double>(n) / k) * std::exp(k * t) - 2.0 / k;
}

namespace detail {

inline std::size_t growth_grid_steps(double t_max, double dt) {
  if (!(t_max > 0.0)) throw usage_error("expectation curve: t_max must be > 0");
  if (!(dt > 0.0)) throw usage_error("expectation curve: dt must be > 0");
  const double raw = t_max / dt;
  if (raw > 5e7) throw limit_error("expectation curve: grid exceeds 5e7 steps");
  const auto m = static_cast<std::size_t>(std::llround(raw));
  return m < 1 ? 1 : m;
}

}  // namespace detail

/// Solves the renewal equation by implicit trapezoid steps on the
/// convolution. With t_i = i*dt and the trapezoid rule applied to
/// \int_0^{t_i} e^{-s} g(t_i - s) ds, the s = 0 endpoint contributes the
/// unknown g_i itself, so each step solves
///
///   g_i (1 - (n-1) dt/2) = 2 - e^{-t_i}
///                        + (n-1) dt [ 1/2 e^{-t_i} g_0
///                                     + \sum_{j=1}^{i-1} e^{-t_j} g_{i-j} ].
///
/// Requires (n-1) dt < 1 so the implicit factor stays positive; coarser
/// grids are refused as unable to meet any sensible tolerance.
inline expectation_curve expected_size_quadrature(int n, double t_max, double dt) {
  if (n < 3) throw usage_error("expected_size_quadrature: degree must be >= 3");
  const std::size_t m = detail::growth_grid_steps(t_max, dt);
  if (!((n - 1) * dt < 1.0))
    throw usage_error("expected_size_quadrature: dt too coarse, need (n-1)*dt < 1");

  expectation_curve curve;
  curve.degree = n;
  curve.method = growth_method::quadrature;
  curve.ts.resize(m + 1);
  curve.gs.resize(m + 1);
  curve.ts[0] = 0.0;
  curve.gs[0] = 1.0;

  std::vector<double> decay(m + 1);  // decay[j] = e^{-t_j}
  for (std::size_t j = 0; j <= m; ++j)
    decay[j] = std::exp(-static_cast<double>(j) * dt);

  const double w = (n - 1) * dt;
  for (std::size_t i = 1; i <= m; ++i) {
    double conv = 0.5 * decay[i] * curve.gs[0];
    for (std::size_t j = 1; j < i; ++j) conv += decay[j] * curve.gs[i - j];
    curve.ts[i] = static_cast<double>(i) * dt;
    curve.gs[i] = (2.0 - decay[i] + w * conv) / (1.0 - 0.5 * w);
  }
  curve.validate();
  return curve;
}

/// The ODE closed form tabulated on the same grid the quadrature uses.
inline expectation_curve expected_size_ode(int n, double t_max, double dt) {
  if (n < 3) throw usage_error("expected_size_ode: degree must be >= 3");
  const std::size_t m = detail::growth_grid_steps(t_max, dt);
  expectation_curve curve;
  curve.degree = n;
  curve.method = growth_method::ode;
  curve.ts.resize(m + 1);
  curve.gs.resize(m + 1);
  for (std::size_t i = 0; i <= m; ++i) {
    curve.ts[i] = static_cast<double>(i) * dt;
    curve.gs[i] = tree_growth_closed_form(n, curve.ts[i]);
  }
  curve.validate();
  return curve;
}

/// Largest relative gap between two curves tabulated on identical grids.
inline double curve_max_relative_gap(const expectation_curve& a,
                                     const expectation_curve& b) {
  if (a.ts.size() != b.ts.size())
    throw usage_error("curve_max_relative_gap: grids differ in length");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.ts.size(); ++i) {
    if (a.ts[i] != b.ts[i])
      throw usage_error("curve_max_relative_gap: grids differ at index " +
                        std::to_string(i));
    const double denom = std::max(std::abs(a.gs[i]), std::abs(b.gs[i]));
    if (denom > 0.0) {
      const double gap = std::abs(a.gs[i] - b.gs[i]) / denom;
      if (gap > worst) worst = gap;
    }
  }
  return worst;
}

}  // namespace edenlab
