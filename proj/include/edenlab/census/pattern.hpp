#pragma once
// Boundary patterns: rooted vertex sets matched against cluster slices.
//
// A pattern is a set S of vertices inside the radius-R ball around the
// origin, subject to the two hypotheses that make its abundance provable:
//
//   * S is connected as an induced subgraph of the ambient graph, and
//   * S contains the full sphere of radius R (the inner boundary of the
//     ball), so a matched slice is sealed off from the rest of the
//     cluster by infected vertices.
//
// S need not contain the origin itself — a punctured ball (a hole about
// to be swallowed) is the motivating example. Matching elsewhere
// transports S by the canonical automorphism carrying the origin to the
// candidate center (each backend's `transport`), so a pattern is matched
// as a positioned shape, not up to isomorphism.

#include <algorithm>
#include <string>
#include <vector>

#include "edenlab/core/error.hpp"
#include "edenlab/graph/concepts.hpp"
#include "edenlab/graph/ops.hpp"

namespace edenlab {

/// A validated pattern: radius plus the member vertices in canonical order.
template <graph_backend G>
struct pattern_spec {
  using vertex_id = typename G::vertex_id;

  int radius = 0;
  std::vector<vertex_id> cells;  ///< sorted by the backend order, no duplicates
  bool contains_center = false;  ///< whether the origin itself is in S
};

/// Checks the pattern hypotheses and returns the canonical spec.
/// Violations are reported as usage errors naming the broken hypothesis:
/// "not-in-ball", "not-connected", or "missing-sphere".
template <graph_backend G>
pattern_spec<G> validate_pattern(const G& g,
                                 const std::vector<typename G::vertex_id>& cells,
                                 int radius) {
  if (radius < 0) throw usage_error("validate_pattern: radius must be >= 0");
  if (radius > 8)
    throw limit_error("validate_pattern: radius capped at 8 (ball materialization)");
  if (cells.empty()) throw usage_error("validate_pattern: pattern is empty");

  pattern_spec<G> spec;
  spec.radius = radius;
  spec.cells = cells;
  std::sort(spec.cells.begin(), spec.cells.end(),
            [&](const auto& a, const auto& b) { return g.compare(a, b) < 0; });
  for (std::size_t i = 1; i < spec.cells.size(); ++i)
    if (g.compare(spec.cells[i - 1], spec.cells[i]) == 0)
      throw usage_error("validate_pattern: duplicate vertex " +
                        g.print_id(spec.cells[i]));

  const auto bal = ball(g, g.origin(), radius);
  vertex_set<G> ball_set;
  for (const auto& v : bal.verts) ball_set.insert(v);

  vertex_set<G> members;
  for (const auto& v : spec.cells) {
    if (ball_set.find(v) == ball_set.end())
      throw usage_error("validate_pattern: pattern not-in-ball, vertex " +
                        g.print_id(v) + " lies outside radius " +
                        std::to_string(radius));
    members.insert(v);
  }

  // Connectivity of the induced subgraph, by flood fill from any member.
  std::vector<typename G::vertex_id> queue{spec.cells.front()};
  vertex_set<G> seen;
  seen.insert(queue.front());
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    for (const auto& w : g.neighbors(queue[qi])) {
      if (members.find(w) == members.end()) continue;
      if (seen.insert(w).second) queue.push_back(w);
    }
  }
  if (seen.size() != spec.cells.size())
    throw usage_error("validate_pattern: pattern not-connected, reached " +
                      std::to_string(seen.size()) + " of " +
                      std::to_string(spec.cells.size()) + " vertices");

  for (const auto& v : bal.layer(radius))
    if (members.find(v) == members.end())
      throw usage_error("validate_pattern: pattern missing-sphere, vertex " +
                        g.print_id(v) + " of the radius-" +
                        std::to_string(radius) + " sphere is absent");

  spec.contains_center = members.find(g.origin()) != members.end();
  return spec;
}

}  // namespace edenlab
