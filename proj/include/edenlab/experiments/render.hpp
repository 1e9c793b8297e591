#pragma once
// Static Poincaré-disk rendering of {p,q} clusters.
//
// The backend stores tiles as exact matrices acting on a 3-dimensional
// quadratic space of signature (2,1); centers and corners are timelike
// vectors in simple-root coordinates. Rendering diagonalizes the Gram
// matrix once (Jacobi, symmetric 3x3), rescales to Minkowski coordinates
// (w1, w2, w3) with q(w) = w1^2 + w2^2 - w3^2, normalizes each point onto
// the unit hyperboloid, and projects to the Poincaré disk:
//
//     (w1, w2) / (1 + w3),   after fixing the sheet so w3 > 0.
//
// All group elements here preserve the sheet (products of pairs of
// spacelike reflections are orthochronous), so one global sign, fixed from
// the origin tile, is correct for the whole cluster; a point landing on
// the wrong sheet is a hard invariant failure, not something to patch up.
// Polygon edges are drawn as straight chords between corner images, which
// underdraws each hyperbolic cell slightly but keeps the SVG plain.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "edenlab/core/error.hpp"
#include "edenlab/core/fmt.hpp"
#include "edenlab/graph/hyperbolic.hpp"

namespace edenlab {

// ---------------------------------------------------------------------------
// Symmetric 3x3 eigendecomposition (cyclic Jacobi)
// ---------------------------------------------------------------------------

struct sym3_eigen_result {
  std::array<double, 3> values{};   ///< eigenvalues
  std::array<double, 9> vectors{};  ///< column c = eigenvector of values[c]
};

/// Diagonalizes a symmetric 3x3 matrix (row-major). Jacobi rotations are
/// unconditionally stable here and converge quadratically.
inline sym3_eigen_result sym3_eigen(std::array<double, 9> a) {
  std::array<double, 9> v = {1, 0, 0, 0, 1, 0, 0, 0, 1};
  const auto at = [](std::array<double, 9>& m, int r, int c) -> double& {
    return m[static_cast<std::size_t>(3 * r + c)];
  };
  for (int sweep = 0; sweep < 64; ++sweep) {
    const double off = at(a, 0, 1) * at(a, 0, 1) +
                       at(a, 0, 2) * at(a, 0, 2) +
                       at(a, 1, 2) * at(a, 1, 2);
    if (off < 1e-30) break;
    for (const auto [p, q] : {std::array<int, 2>{0, 1},
                              std::array<int, 2>{0, 2},
                              std::array<int, 2>{1, 2}}) {
      const double apq = at(a, p, q);
      if (std::abs(apq) < 1e-300) continue;
      const double theta = (at(a, q, q) - at(a, p, p)) / (2.0 * apq);
      const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                       (std::abs(theta) + std::sqrt(theta * theta + 1.0));
      const double c = 1.0 / std::sqrt(t * t + 1.0);
      const double s = t * c;
      for (int k = 0; k < 3; ++k) {
        const double akp = at(a, k, p), akq = at(a, k, q);
        at(a, k, p) = c * akp - s * akq;
        at(a, k, q) = s * akp + c * akq;
      }
      for (int k = 0; k < 3; ++k) {
        const double apk = at(a, p, k), aqk = at(a, q, k);
        at(a, p, k) = c * apk - s * aqk;
        at(a, q, k) = s * apk + c * aqk;
      }
      for (int k = 0; k < 3; ++k) {
        const double vkp = at(v, k, p), vkq = at(v, k, q);
        at(v, k, p) = c * vkp - s * vkq;
        at(v, k, q) = s * vkp + c * vkq;
      }
    }
  }
  sym3_eigen_result out;
  out.values = {a[0], a[4], a[8]};
  out.vectors = v;
  return out;
}

// ---------------------------------------------------------------------------
// Hyperboloid-to-disk mapping
// ---------------------------------------------------------------------------

/// Maps timelike vectors (simple-root coordinates) into the Poincaré disk.
class poincare_mapper {
 public:
  explicit poincare_mapper(const hyperbolic_graph& g) {
    const auto eig = sym3_eigen(g.gram_real());
    // Order axes so the unique negative eigenvalue is the timelike third.
    std::array<int, 3> order = {0, 1, 2};
    std::sort(order.begin(), order.end(), [&](int i, int j) {
      return eig.values[static_cast<std::size_t>(i)] >
             eig.values[static_cast<std::size_t>(j)];
    });
    int negatives = 0;
    for (const double lam : eig.values)
      if (lam < 0.0) ++negatives;
    if (negatives != 1 ||
        eig.values[static_cast<std::size_t>(order[0])] <= 0.0 ||
        eig.values[static_cast<std::size_t>(order[1])] <= 0.0)
      throw invariant_error(
          "poincare_mapper: Gram matrix is not of signature (2,1)");
    // Row i of map_: x -> sqrt(|lambda_i|) * (eigvec_i . x).
    for (int i = 0; i < 3; ++i) {
      const int col = order[static_cast<std::size_t>(i)];
      const double lam = eig.values[static_cast<std::size_t>(col)];
      const double scale = std::sqrt(std::abs(lam));
      for (int r = 0; r < 3; ++r)
        map_[static_cast<std::size_t>(3 * i + r)] =
            scale * eig.vectors[static_cast<std::size_t>(3 * r + col)];
    }
    // Fix the sheet from the origin tile's center.
    sign_ = 1.0;
    const double w3 = minkowski(g.center_real(g.origin()))[2];
    if (w3 < 0.0) sign_ = -1.0;
  }

  /// Minkowski coordinates (w1, w2, w3) with q(w) = w1^2 + w2^2 - w3^2.
  std::array<double, 3> minkowski(const std::array<double, 3>& x) const {
    std::array<double, 3> w{};
    for (int i = 0; i < 3; ++i)
      for (int r = 0; r < 3; ++r)
        w[static_cast<std::size_t>(i)] +=
            map_[static_cast<std::size_t>(3 * i + r)] *
            x[static_cast<std::size_t>(r)];
    return w;
  }

  /// Projects a timelike vector to the open unit disk.
  std::array<double, 2> disk(const std::array<double, 3>& x) const {
    auto w = minkowski(x);
    const double q = w[0] * w[0] + w[1] * w[1] - w[2] * w[2];
    if (!(q < 0.0))
      throw invariant_error("poincare_mapper: vector is not timelike");
    const double inv = sign_ / std::sqrt(-q);
    for (double& c : w) c *= inv;
    if (!(w[2] > 0.0))
      throw invariant_error("poincare_mapper: point crossed to the far sheet");
    return {w[0] / (1.0 + w[2]), w[1] / (1.0 + w[2])};
  }

 private:
  std::array<double, 9> map_{};  ///< simple-root -> Minkowski, row-major
  double sign_ = 1.0;            ///< global sheet orientation
};

// ---------------------------------------------------------------------------
// SVG assembly
// ---------------------------------------------------------------------------

/// What a render produced, beyond the SVG text itself.
struct render_result {
  std::string svg;
  std::size_t tiles = 0;
  double max_center_radius = 0.0;  ///< largest |disk center| drawn
};

namespace detail {

inline std::string svg_coord(double x) { return format_fixed(x, 6); }

/// Linear light-to-dark ramp by infection order.
inline std::string ramp_color(double frac) {
  const auto ch = [&](double a, double b) {
    const int v = static_cast<int>(std::lround(a + (b - a) * frac));
    return std::max(0, std::min(255, v));
  };
  // #dce9f5 (early) -> #123a66 (late)
  const int r = ch(220, 18), g = ch(233, 58), b = ch(245, 102);
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
  return buf;
}

}  // namespace detail

/// Renders the listed tiles (in infection order) to a Poincaré-disk SVG.
inline render_result render_poincare_svg(
    const hyperbolic_graph& g,
    const std::vector<hyperbolic_graph::vertex_id>& order) {
  if (order.empty()) throw usage_error("render: no tiles to draw");
  const poincare_mapper mapper(g);

  render_result out;
  out.tiles = order.size();

  std::string body;
  const double denom =
      order.size() > 1 ? static_cast<double>(order.size() - 1) : 1.0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto corners = g.corners_real(order[i]);
    std::string pts;
    for (const auto& corner : corners) {
      const auto d = mapper.disk(corner);
      if (!pts.empty()) pts += ' ';
      pts += detail::svg_coord(d[0]) + "," + detail::svg_coord(-d[1]);
    }
    const auto center = mapper.disk(g.center_real(order[i]));
    const double rad = std::hypot(center[0], center[1]);
    if (rad > out.max_center_radius) out.max_center_radius = rad;
    body += "  <polygon points=\"" + pts + "\" fill=\"" +
            detail::ramp_color(static_cast<double>(i) / denom) +
            "\" stroke=\"#10151c\" stroke-width=\"0.002\"/>\n";
  }

  out.svg =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1.05 -1.05 2.1 "
      "2.1\">\n"
      "  <rect x=\"-1.05\" y=\"-1.05\" width=\"2.1\" height=\"2.1\" "
      "fill=\"#ffffff\"/>\n"
      "  <circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"#888888\" "
      "stroke-width=\"0.004\"/>\n" +
      body + "</svg>\n";
  return out;
}

}  // namespace edenlab
