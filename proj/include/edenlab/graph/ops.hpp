#pragma once
// Generic graph operations over any backend: balls, spheres, capped
// distances, growth function, and the ball-volume bound check.
//
// All outputs are deterministic: BFS layers are sorted in the backend's
// canonical order before being returned.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "edenlab/core/error.hpp"
#include "edenlab/graph/concepts.hpp"

namespace edenlab {

/// A closed ball grouped by distance layer: layer r occupies
/// verts[layer_start[r] .. layer_start[r+1]).
template <graph_backend G>
struct ball_result {
  std::vector<typename G::vertex_id> verts;
  std::vector<std::size_t> layer_start;  // size radius+2; last entry = verts.size()

  std::size_t volume() const { return verts.size(); }

  std::vector<typename G::vertex_id> layer(int r) const {
    return {verts.begin() + static_cast<std::ptrdiff_t>(layer_start[r]),
            verts.begin() + static_cast<std::ptrdiff_t>(layer_start[r + 1])};
  }
};

/// Closed ball B_radius(v) by breadth-first search, each layer sorted
/// canonically.
template <graph_backend G>
ball_result<G> ball(const G& g, const typename G::vertex_id& v, int radius) {
  if (radius < 0) throw usage_error("ball: radius must be >= 0");
  ball_result<G> out;
  vertex_set<G> seen;
  std::vector<typename G::vertex_id> frontier{v};
  seen.insert(v);
  out.layer_start.push_back(0);
  for (int r = 0; r <= radius; ++r) {
    std::sort(frontier.begin(), frontier.end(),
              [&g](const auto& a, const auto& b) { return g.compare(a, b) < 0; });
    out.verts.insert(out.verts.end(), frontier.begin(), frontier.end());
    out.layer_start.push_back(out.verts.size());
    if (r == radius) break;
    std::vector<typename G::vertex_id> next;
    for (const auto& u : frontier) {
      for (auto& w : g.neighbors(u)) {
        if (seen.insert(w).second) next.push_back(std::move(w));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

/// The sphere D_radius(v): vertices at distance exactly radius.
template <graph_backend G>
std::vector<typename G::vertex_id> sphere(const G& g, const typename G::vertex_id& v,
                                          int radius) {
  return ball(g, v, radius).layer(radius);
}

/// Graph distance from a to b if it is <= cap, otherwise nullopt.
/// Plain BFS from a; cheap for the small caps used in verification.
template <graph_backend G>
std::optional<int> distance_within(const G& g, const typename G::vertex_id& a,
                                   const typename G::vertex_id& b, int cap) {
  typename G::id_eq eq;
  if (eq(a, b)) return 0;
  vertex_set<G> seen;
  seen.insert(a);
  std::vector<typename G::vertex_id> frontier{a};
  for (int r = 1; r <= cap; ++r) {
    std::vector<typename G::vertex_id> next;
    for (const auto& u : frontier) {
      for (auto& w : g.neighbors(u)) {
        if (eq(w, b)) return r;
        if (seen.insert(w).second) next.push_back(std::move(w));
      }
    }
    if (next.empty()) return std::nullopt;
    frontier = std::move(next);
  }
  return std::nullopt;
}

/// Closed-ball volumes |B_0|..|B_radius| around the origin.
template <graph_backend G>
std::vector<std::uint64_t> growth_function(const G& g, int radius) {
  const auto b = ball(g, g.origin(), radius);
  std::vector<std::uint64_t> out;
  out.reserve(static_cast<std::size_t>(radius) + 1);
  for (int r = 0; r <= radius; ++r) out.push_back(b.layer_start[r + 1]);
  return out;
}

/// Exterior vertex boundary ∂A = { w ∉ A : w adjacent to A }, recomputed
/// from scratch. Returns distinct vertices in first-encounter order over the
/// members of `set` (deterministic given the input order).
template <graph_backend G>
std::vector<typename G::vertex_id> exterior_boundary(
    const G& g, const std::vector<typename G::vertex_id>& set) {
  vertex_map<G, char> inside;
  for (const auto& v : set) inside.emplace(v, 1);
  vertex_map<G, char> seen;
  std::vector<typename G::vertex_id> out;
  for (const auto& v : set) {
    for (const auto& w : g.neighbors(v)) {
      if (inside.find(w) != inside.end()) continue;
      if (seen.emplace(w, 1).second) out.push_back(w);
    }
  }
  return out;
}

/// One row of the ball-volume bound report.
struct ball_bound_row {
  int radius = 0;
  std::uint64_t volume = 0;
  std::uint64_t bound = 0;  ///< degree^(radius+1), saturated at UINT64_MAX
  bool ok = false;
};

/// Checks |B_R| <= d^(R+1) for R = 0..radius around the origin. The bound
/// holds on every graph of maximum degree d; a violation therefore indicates
/// a backend bug and is reported rather than thrown, so callers can print the
/// failing row.
template <graph_backend G>
std::vector<ball_bound_row> ball_volume_bound_check(const G& g, int radius) {
  const auto vols = growth_function(g, radius);
  const std::uint64_t d = static_cast<std::uint64_t>(g.degree());
  std::vector<ball_bound_row> rows;
  std::uint64_t bound = 1;
  bool saturated = false;
  for (int r = 0; r <= radius; ++r) {
    if (!saturated && __builtin_mul_overflow(bound, d, &bound)) {
      bound = UINT64_MAX;
      saturated = true;
    }
    ball_bound_row row;
    row.radius = r;
    row.volume = vols[static_cast<std::size_t>(r)];
    row.bound = bound;  // after r+1 multiplications: d^(r+1)
    row.ok = row.volume <= row.bound;
    rows.push_back(row);
  }
  return rows;
}

} // namespace edenlab
