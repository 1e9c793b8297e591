#pragma once
// Independent floating-point oracle for the {p,q} tile-adjacency graph.
//
// Builds the same dual graph as hyperbolic_graph, but in the numeric
// hyperboloid model with the standard Minkowski form J = diag(1, 1, -1):
// mirror normals are constructed from explicit sines/cosines, tiles are BFS'd
// by multiplying double-precision reflection products, and tile identity is
// decided by fuzzy matching of center coordinates. Nothing here touches the
// exact cyclotomic arithmetic, so agreement between the two implementations
// checks both.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace edenlab::testing {

struct patch_oracle {
  using vec3 = std::array<double, 3>;
  using mat3 = std::array<double, 9>;  // row-major

  static double mink(const vec3& u, const vec3& v) {
    return u[0] * v[0] + u[1] * v[1] - u[2] * v[2];
  }

  static vec3 apply(const mat3& m, const vec3& v) {
    return {m[0] * v[0] + m[1] * v[1] + m[2] * v[2],
            m[3] * v[0] + m[4] * v[1] + m[5] * v[2],
            m[6] * v[0] + m[7] * v[1] + m[8] * v[2]};
  }

  static mat3 mul(const mat3& a, const mat3& b) {
    mat3 c{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        double s = 0.0;
        for (int k = 0; k < 3; ++k) s += a[std::size_t(3 * i + k)] * b[std::size_t(3 * k + j)];
        c[std::size_t(3 * i + j)] = s;
      }
    return c;
  }

  /// Reflection in the plane with spacelike unit normal n:
  /// x -> x - 2 <x, n> n  (Minkowski inner product).
  static mat3 reflection(const vec3& n) {
    mat3 r{1, 0, 0, 0, 1, 0, 0, 0, 1};
    const vec3 jn = {n[0], n[1], -n[2]};  // J n, so that r_ij -= 2 n_i (Jn)_j
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        r[std::size_t(3 * i + j)] -= 2.0 * n[std::size_t(i)] * jn[std::size_t(j)];
    return r;
  }

  int p, q;
  mat3 rot_a, flip_s;      // rotation about the base tile center; edge flip
  vec3 center0;            // base tile center, normalized <c,c> = -1, future
  std::vector<mat3> tiles; // group elements, one per found tile (BFS order)
  std::vector<vec3> centers;
  std::vector<std::size_t> ring_start;  // BFS ring r occupies [ring_start[r], ring_start[r+1])

  patch_oracle(int p_, int q_, int radius) : p(p_), q(q_) {
    if ((p - 2) * (q - 2) <= 4) throw std::runtime_error("oracle: not hyperbolic");
    const double sp = std::sin(M_PI / p), cp = std::cos(M_PI / p);
    const double cq = std::cos(M_PI / q);
    // Mirror normals: <n1,n2> = -cos(pi/p), <n2,n3> = -cos(pi/q), <n1,n3> = 0.
    const vec3 n1 = {1.0, 0.0, 0.0};
    const vec3 n2 = {-cp, sp, 0.0};
    const double b = -cq / sp;
    const vec3 n3 = {0.0, b, std::sqrt(b * b - 1.0)};
    const mat3 r1 = reflection(n1), r2 = reflection(n2), r3 = reflection(n3);
    rot_a = mul(r1, r2);
    flip_s = mul(r1, r3);

    // Base center: Minkowski-orthogonal to n1 and n2 => proportional to
    // J (n1 x n2); normalize to the future hyperboloid sheet.
    const vec3 cross = {n1[1] * n2[2] - n1[2] * n2[1], n1[2] * n2[0] - n1[0] * n2[2],
                        n1[0] * n2[1] - n1[1] * n2[0]};
    vec3 c = {cross[0], cross[1], -cross[2]};
    const double norm = mink(c, c);
    if (!(norm < 0.0)) throw std::runtime_error("oracle: center is not timelike");
    const double scale = 1.0 / std::sqrt(-norm);
    for (auto& x : c) x *= scale;
    if (c[2] < 0.0)
      for (auto& x : c) x = -x;
    center0 = c;

    bfs(radius);
  }

  std::vector<std::size_t> ring_sizes() const {
    std::vector<std::size_t> out;
    for (std::size_t r = 0; r + 1 < ring_start.size(); ++r)
      out.push_back(ring_start[r + 1] - ring_start[r]);
    return out;
  }

  /// Sorted multiset of pairwise center distances cosh d = -<c_i, c_j>
  /// (centers are unit timelike).
  std::vector<double> pairwise_cosh() const {
    std::vector<double> out;
    for (std::size_t i = 0; i < centers.size(); ++i)
      for (std::size_t j = i + 1; j < centers.size(); ++j)
        out.push_back(-mink(centers[i], centers[j]));
    std::sort(out.begin(), out.end());
    return out;
  }

private:
  void bfs(int radius) {
    const mat3 identity{1, 0, 0, 0, 1, 0, 0, 0, 1};
    tiles.push_back(identity);
    centers.push_back(center0);
    ring_start = {0, 1};
    std::size_t lo = 0, hi = 1;
    // Step matrices a^k S for the p edges.
    std::vector<mat3> steps;
    mat3 apow = identity;
    for (int k = 0; k < p; ++k) {
      steps.push_back(mul(apow, flip_s));
      apow = mul(apow, rot_a);
    }
    for (int r = 1; r <= radius; ++r) {
      for (std::size_t i = lo; i < hi; ++i) {
        const mat3 g = tiles[i];  // copy: tiles grows inside the loop
        for (const auto& st : steps) {
          const mat3 h = mul(g, st);
          const vec3 c = apply(h, center0);
          if (!known(c)) {
            tiles.push_back(h);
            centers.push_back(c);
          }
        }
      }
      lo = hi;
      hi = tiles.size();
      ring_start.push_back(hi);
    }
  }

  bool known(const vec3& c) const {
    // Distinct tile centers are at hyperbolic distance >= the adjacent-tile
    // distance (well above 1), so a cosh threshold just under that cleanly
    // separates "same tile" from "different tile" at double precision.
    for (const auto& k : centers)
      if (-mink(k, c) < 1.0 + 1e-6) return true;
    return false;
  }
};

} // namespace edenlab::testing
