#pragma once
// Matching patterns against cluster slices and packing disjoint copies.
//
// A center v matches when the slice B_R(v) ∩ A equals the transported
// pattern exactly — every pattern vertex infected, nothing else in the
// ball infected. Matches are packed greedily in a deterministic order;
// choosing a center blocks the surrounding 2R-ball, so selected centers
// are pairwise more than 2R apart and their R-balls are disjoint. The
// greedy count is a certified lower bound on the maximum packing: each
// selection can eliminate at most vol(B_2R) <= d^{2R+1} candidates, which
// is the pigeonhole constant the abundance bound runs on.
//
// Candidate order: by distance from the growth origin where the backend
// has a metric, otherwise by distance from the cluster (shell index),
// with the canonical id order breaking ties. Both are deterministic; the
// packing argument itself is order-free.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "edenlab/census/pattern.hpp"
#include "edenlab/core/error.hpp"
#include "edenlab/graph/concepts.hpp"
#include "edenlab/graph/ops.hpp"
#include "edenlab/growth/cluster.hpp"

namespace edenlab {

/// True iff B_R(v) ∩ A equals the pattern transported to v: every
/// transported cell infected and no other infected vertex in the ball.
template <graph_backend G>
bool match_at(const G& g, const cluster_state<G>& state,
              const pattern_spec<G>& spec, const typename G::vertex_id& v) {
  vertex_set<G> expected;
  for (const auto& s : spec.cells) expected.insert(g.transport(v, s));
  if (expected.size() != spec.cells.size())
    throw invariant_error("match_at: transport collapsed pattern vertices");

  std::size_t matched = 0;
  for (const auto& u : ball(g, v, spec.radius).verts) {
    if (!state.contains(u)) continue;
    if (expected.find(u) == expected.end()) return false;  // intruder in slice
    ++matched;
  }
  return matched == expected.size();
}

/// Every vertex within distance R of the cluster (the cluster itself
/// included), in the deterministic greedy order. Any possible match
/// center lies here: a match slice is nonempty because the pattern
/// contains the full R-sphere.
template <graph_backend G>
std::vector<typename G::vertex_id> candidate_centers(
    const G& g, const cluster_state<G>& state, int radius) {
  if (radius < 0) throw usage_error("candidate_centers: radius must be >= 0");

  // Multi-source BFS from the cluster out to depth R: shell index is
  // d(v, A), with infected vertices at shell 0.
  std::vector<typename G::vertex_id> queue = state.infected_order();
  vertex_map<G, int> shell;
  for (const auto& v : queue) shell.emplace(v, 0);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const int d = shell.find(queue[qi])->second;
    if (d == radius) continue;
    for (const auto& w : g.neighbors(queue[qi]))
      if (shell.emplace(w, d + 1).second) queue.push_back(w);
  }

  struct keyed {
    std::int64_t key;
    typename G::vertex_id v;
  };
  std::vector<keyed> order;
  order.reserve(queue.size());
  for (const auto& v : queue) {
    std::int64_t key;
    if constexpr (metric_backend<G>)
      key = g.distance(g.origin(), v);
    else
      key = shell.find(v)->second;
    order.push_back({key, v});
  }
  std::sort(order.begin(), order.end(), [&](const keyed& a, const keyed& b) {
    if (a.key != b.key) return a.key < b.key;
    return g.compare(a.v, b.v) < 0;
  });

  std::vector<typename G::vertex_id> out;
  out.reserve(order.size());
  for (auto& k : order) out.push_back(std::move(k.v));
  return out;
}

/// One packed census: selected centers, their count, and bookkeeping the
/// scaling layer fills in (profile proxy and fitted ratio).
template <graph_backend G>
struct census_result {
  using vertex_id = typename G::vertex_id;

  std::vector<vertex_id> centers;
  std::uint64_t cluster_size = 0;
  double profile_value = 0.0;  ///< F-proxy at cluster_size, 0 until filled
  double fitted_ratio = 0.0;   ///< count / profile_value, 0 until filled
  std::string profile_label;   ///< which proxy produced profile_value

  std::uint64_t count() const { return centers.size(); }
};

/// True iff any image in the list matches at v. A census run under
/// orbit-closure matching passes the stabilizer orbit of the pattern
/// here; transported-equality matching passes a single image.
template <graph_backend G>
bool match_any(const G& g, const cluster_state<G>& state,
               const std::vector<pattern_spec<G>>& images,
               const typename G::vertex_id& v) {
  for (const auto& image : images)
    if (match_at(g, state, image, v)) return true;
  return false;
}

/// Greedy packing of matching centers, then a post-hoc audit: every
/// selected center must still match, and no two centers may lie within
/// 2R of each other (checked by ball recomputation, not trust).
template <graph_backend G>
census_result<G> greedy_census(const G& g, const cluster_state<G>& state,
                               const std::vector<pattern_spec<G>>& images) {
  if (images.empty()) throw usage_error("greedy_census: no pattern images");
  const int radius = images.front().radius;
  for (const auto& image : images)
    if (image.radius != radius)
      throw usage_error("greedy_census: images disagree on the radius");

  census_result<G> result;
  result.cluster_size = state.size();

  vertex_set<G> blocked;
  for (const auto& v : candidate_centers(g, state, radius)) {
    if (blocked.find(v) != blocked.end()) continue;
    if (!match_any(g, state, images, v)) continue;
    result.centers.push_back(v);
    for (const auto& u : ball(g, v, 2 * radius).verts) blocked.insert(u);
  }

  vertex_set<G> chosen;
  for (const auto& c : result.centers) chosen.insert(c);
  if (chosen.size() != result.centers.size())
    throw invariant_error("greedy_census: duplicate centers selected");
  for (const auto& c : result.centers) {
    if (!match_any(g, state, images, c))
      throw invariant_error("greedy_census: selected center no longer matches");
    for (const auto& u : ball(g, c, 2 * radius).verts)
      if (chosen.find(u) != chosen.end() && g.compare(u, c) != 0)
        throw invariant_error("greedy_census: centers within 2R of each other");
  }
  return result;
}

/// Transported-equality census of a single pattern.
template <graph_backend G>
census_result<G> greedy_census(const G& g, const cluster_state<G>& state,
                               const pattern_spec<G>& spec) {
  return greedy_census(g, state, std::vector<pattern_spec<G>>{spec});
}

}  // namespace edenlab
