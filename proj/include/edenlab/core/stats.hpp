#pragma once
// Small statistics toolbox: regularized incomplete gamma (for chi-square
// p-values), a two-sample chi-square test with pooled expectations, simple
// least-squares line fits, and order statistics.
//
// The incomplete-gamma evaluation is the classical series / continued-fraction
// pair (series for x < a+1, modified Lentz continued fraction otherwise);
// both converge to ~1e-14 relative accuracy over the range used here.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "edenlab/core/error.hpp"

namespace edenlab {

namespace detail {

/// Lower regularized incomplete gamma P(a, x) by power series.
inline double gamma_p_series(double a, double x) {
  double ap = a;
  double sum = 1.0 / a;
  double del = sum;
  for (int n = 0; n < 500; ++n) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::fabs(del) < std::fabs(sum) * 1e-16) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

/// Upper regularized incomplete gamma Q(a, x) by modified Lentz continued
/// fraction.
inline double gamma_q_cf(double a, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 500; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < 1e-16) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

} // namespace detail

/// Lower regularized incomplete gamma P(a, x) = gamma(a, x) / Gamma(a).
inline double regularized_gamma_p(double a, double x) {
  if (!(a > 0.0) || x < 0.0)
    throw usage_error("regularized_gamma_p: need a > 0 and x >= 0");
  if (x == 0.0) return 0.0;
  if (x < a + 1.0) return detail::gamma_p_series(a, x);
  return 1.0 - detail::gamma_q_cf(a, x);
}

/// Upper regularized incomplete gamma Q(a, x) = 1 - P(a, x).
inline double regularized_gamma_q(double a, double x) {
  if (!(a > 0.0) || x < 0.0)
    throw usage_error("regularized_gamma_q: need a > 0 and x >= 0");
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - detail::gamma_p_series(a, x);
  return detail::gamma_q_cf(a, x);
}

/// Survival function of the chi-square distribution: P(X > x) with `dof`
/// degrees of freedom.
inline double chi_square_sf(double x, int dof) {
  if (dof < 1) throw usage_error("chi_square_sf: dof must be >= 1");
  if (x <= 0.0) return 1.0;
  return regularized_gamma_q(0.5 * dof, 0.5 * x);
}

/// Result of a two-sample chi-square homogeneity test.
struct chi_square_result {
  double statistic = 0.0;
  int dof = 0;
  double p_value = 1.0;
  std::size_t cells_used = 0;  ///< cells with at least one observation
};

/// Two-sample chi-square with pooled expectations: under the null that both
/// count vectors come from the same distribution, E_i = (a_i + b_i)/2 per
/// side (equal totals assumed) and the statistic sums (obs-exp)^2/exp over
/// both sides. Cells empty on both sides are skipped; dof = used cells - 1.
inline chi_square_result two_sample_chi_square(const std::vector<std::uint64_t>& a,
                                               const std::vector<std::uint64_t>& b) {
  if (a.size() != b.size())
    throw usage_error("two_sample_chi_square: vectors must have equal length");
  std::uint64_t ta = 0, tb = 0;
  for (auto v : a) ta += v;
  for (auto v : b) tb += v;
  if (ta == 0 || tb == 0)
    throw usage_error("two_sample_chi_square: both samples must be nonempty");
  chi_square_result r;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double oa = static_cast<double>(a[i]);
    const double ob = static_cast<double>(b[i]);
    if (oa + ob == 0.0) continue;
    ++r.cells_used;
    // Pooled expectation, scaled for (possibly) unequal totals; reduces to
    // (oa+ob)/2 when the totals match.
    const double ea = (oa + ob) * static_cast<double>(ta) / static_cast<double>(ta + tb);
    const double eb = (oa + ob) * static_cast<double>(tb) / static_cast<double>(ta + tb);
    r.statistic += (oa - ea) * (oa - ea) / ea + (ob - eb) * (ob - eb) / eb;
  }
  if (r.cells_used < 2)
    throw usage_error("two_sample_chi_square: need at least two populated cells");
  r.dof = static_cast<int>(r.cells_used) - 1;
  r.p_value = chi_square_sf(r.statistic, r.dof);
  return r;
}

/// Least-squares line fit y ~ intercept + slope * x.
struct line_fit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 1.0;
  double residual_rms = 0.0;
};

inline line_fit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw usage_error("fit_line: need two equal-length samples of size >= 2");
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) throw usage_error("fit_line: degenerate x values");
  line_fit f;
  f.slope = (n * sxy - sx * sy) / denom;
  f.intercept = (sy - f.slope * sx) / n;
  double ss_res = 0, ss_tot = 0;
  const double ybar = sy / n;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double e = y[i] - (f.intercept + f.slope * x[i]);
    ss_res += e * e;
    ss_tot += (y[i] - ybar) * (y[i] - ybar);
  }
  f.residual_rms = std::sqrt(ss_res / n);
  f.r_squared = (ss_tot == 0.0) ? 1.0 : 1.0 - ss_res / ss_tot;
  return f;
}

/// Least-squares fit of y ~ slope * x through the origin, with R^2 measured
/// against the zero-intercept model.
inline line_fit fit_line_through_origin(const std::vector<double>& x,
                                        const std::vector<double>& y) {
  if (x.size() != y.size() || x.empty())
    throw usage_error("fit_line_through_origin: need equal-length nonempty samples");
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  if (sxx == 0.0) throw usage_error("fit_line_through_origin: degenerate x values");
  line_fit f;
  f.slope = sxy / sxx;
  f.intercept = 0.0;
  double ss_res = 0, ss_tot = 0, ybar = 0;
  for (double v : y) ybar += v;
  ybar /= static_cast<double>(y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double e = y[i] - f.slope * x[i];
    ss_res += e * e;
    ss_tot += (y[i] - ybar) * (y[i] - ybar);
  }
  f.residual_rms = std::sqrt(ss_res / static_cast<double>(x.size()));
  f.r_squared = (ss_tot == 0.0) ? 1.0 : 1.0 - ss_res / ss_tot;
  return f;
}

/// Median (averaging the two central order statistics for even sizes).
inline double median(std::vector<double> v) {
  if (v.empty()) throw usage_error("median: empty sample");
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return (n % 2 == 1) ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

struct mean_sd {
  double mean = 0.0;
  double sd = 0.0;      ///< sample standard deviation (n-1)
  double stderr_ = 0.0; ///< sd / sqrt(n)
  std::size_t n = 0;
};

inline mean_sd mean_and_sd(const std::vector<double>& v) {
  if (v.empty()) throw usage_error("mean_and_sd: empty sample");
  mean_sd m;
  m.n = v.size();
  double s = 0;
  for (double x : v) s += x;
  m.mean = s / static_cast<double>(m.n);
  if (m.n > 1) {
    double ss = 0;
    for (double x : v) ss += (x - m.mean) * (x - m.mean);
    m.sd = std::sqrt(ss / static_cast<double>(m.n - 1));
    m.stderr_ = m.sd / std::sqrt(static_cast<double>(m.n));
  }
  return m;
}

} // namespace edenlab
