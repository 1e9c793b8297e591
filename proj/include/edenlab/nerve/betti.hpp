#pragma once
// Betti numbers of a nerve complex over GF(2), plus the structural checks
// that keep them honest: a union-find recount of components, and the
// simplex-count bound count_k <= C(r, k+1) * m, where r is the number of
// tiles that can intersect one tile (so beta_k inherits the same bound).

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "edenlab/core/error.hpp"
#include "edenlab/graph/concepts.hpp"
#include "edenlab/nerve/complex.hpp"
#include "edenlab/nerve/gf2.hpp"

namespace edenlab {

/// beta_0 .. beta_{k_max}. The top entry treats the (absent) next boundary
/// operator as zero, which is exact whenever the true nerve has no simplices
/// above k_max — the case for the supported tessellations at their default
/// k_max. Lower entries are unconditional.
inline std::vector<std::int64_t> betti_vector(const nerve_complex& cx) {
  std::vector<std::size_t> rank(static_cast<std::size_t>(cx.k_max) + 2, 0);
  for (int k = 1; k <= cx.k_max; ++k)
    rank[static_cast<std::size_t>(k)] = gf2_rank(cx.boundary(k));
  std::vector<std::int64_t> beta;
  beta.reserve(static_cast<std::size_t>(cx.k_max) + 1);
  for (int k = 0; k <= cx.k_max; ++k) {
    const auto dim = static_cast<std::int64_t>(cx.count(k));
    const auto below = static_cast<std::int64_t>(rank[static_cast<std::size_t>(k)]);
    const auto above = static_cast<std::int64_t>(rank[static_cast<std::size_t>(k) + 1]);
    beta.push_back(dim - below - above);
  }
  return beta;
}

/// beta_k = dim C_k - rank d_k - rank d_{k+1}. Only k <= k_max - 1 is served:
/// the truncation at k_max discards the simplices that could cap k_max-cycles,
/// so the top dimension is not trustworthy through this entry point.
inline std::int64_t betti(const nerve_complex& cx, int k) {
  if (k < 0 || k > cx.k_max - 1)
    throw usage_error("betti: need 0 <= k <= k_max-1 (k_max = " +
                      std::to_string(cx.k_max) + ")");
  return betti_vector(cx)[static_cast<std::size_t>(k)];
}

/// Independent beta_0: connected components of the 1-skeleton by union-find.
inline std::size_t component_count(const nerve_complex& cx) {
  std::vector<std::uint32_t> parent(cx.tile_ids.size());
  std::iota(parent.begin(), parent.end(), 0u);
  const auto find = [&](std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const auto& e : cx.simplices[1]) {
    const auto a = find(e[0]), b = find(e[1]);
    if (a != b) parent[a] = b;
  }
  std::size_t components = 0;
  for (std::uint32_t i = 0; i < parent.size(); ++i)
    if (find(i) == i) ++components;
  return components;
}

/// The largest number of tiles intersecting one tile, read off the corner
/// fan and neighbor list of the origin (vertex transitivity makes the origin
/// representative). Equals p(q-2) on {p,q} duals and 3^d - 1 on Z^d cells.
template <tiling_backend G>
int intersection_degree(const G& g) {
  vertex_set<G> others;
  for (const auto& w : g.neighbors(g.origin())) others.insert(w);
  for (const auto& rec : g.corner_fan(g.origin()))
    for (const auto& t : rec.tiles) others.insert(t);
  others.erase(g.origin());
  return static_cast<int>(others.size());
}

struct simplex_bound_row {
  int k = 0;
  std::uint64_t simplex_count = 0;
  std::uint64_t bound = 0;  ///< C(r, k+1) * m
};

struct simplex_bound_report {
  int r = 0;
  std::uint64_t cluster_size = 0;
  std::vector<simplex_bound_row> rows;
};

namespace detail {

inline std::uint64_t binomial_u64(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t out = 1;
  for (int i = 1; i <= k; ++i)
    out = out * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return out;
}

} // namespace detail

/// Asserts count_k <= C(r, k+1) * m for every dimension of the complex: each
/// k-simplex is a (k+1)-subset of some tile's closed intersection
/// neighborhood, of which there are at most C(r, k+1) per tile. Violation
/// means the complex contains simplices no tile geometry can explain.
template <tiling_backend G>
simplex_bound_report simplex_bound_check(const G& g, const nerve_complex& cx,
                                         std::uint64_t cluster_size) {
  simplex_bound_report rep;
  rep.r = intersection_degree(g);
  rep.cluster_size = cluster_size;
  for (int k = 0; k <= cx.k_max; ++k) {
    simplex_bound_row row;
    row.k = k;
    row.simplex_count = cx.count(k);
    row.bound = detail::binomial_u64(rep.r, k + 1) * cluster_size;
    if (row.simplex_count > row.bound)
      throw invariant_error("simplex count in dimension " + std::to_string(k) + " is " +
                            std::to_string(row.simplex_count) + ", above the bound C(" +
                            std::to_string(rep.r) + ", " + std::to_string(k + 1) + ") * " +
                            std::to_string(cluster_size) + " = " + std::to_string(row.bound));
    rep.rows.push_back(row);
  }
  return rep;
}

} // namespace edenlab
