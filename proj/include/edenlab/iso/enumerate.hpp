#pragma once
// Exact isoperimetric profile by exhaustive search over connected subsets.
//
// F(n) = min{ |∂A| : A connected, |A| = n } is computed by enumerating every
// finite connected subset containing the origin exactly once — the graph
// generalization of Redelmeier's fixed-polyomino enumeration. On a
// vertex-transitive graph every translation class of size-n subsets has
// exactly n members containing the origin, so each class is inspected and
// none is missed. Restricting to connected sets is a definitional choice
// (documented at the call sites that rely on it); for small sizes on the
// square lattice the unrestricted optimum is connected anyway, which
// window_exhaustive_min_boundary verifies independently.
//
// The search is budgeted: every enumeration node costs one work unit and
// exceeding the budget raises limit_error rather than running unbounded
// (e.g. the degree-3 tree has ~10^10 connected 20-subsets — such requests
// are refused, not attempted).

#include <cstdint>
#include <string>
#include <vector>

#include "edenlab/core/error.hpp"
#include "edenlab/graph/concepts.hpp"

namespace edenlab {

template <graph_backend G>
struct profile_entry {
  std::uint64_t boundary = 0;                    ///< F at this size
  std::vector<typename G::vertex_id> witness;    ///< a minimizing subset
};

template <graph_backend G>
struct profile_result {
  std::vector<profile_entry<G>> at_size;  ///< index i holds size i+1
  std::uint64_t nodes_visited = 0;

  std::uint64_t value(std::size_t n) const { return at_size.at(n - 1).boundary; }

  std::vector<std::uint64_t> values() const {
    std::vector<std::uint64_t> v;
    v.reserve(at_size.size());
    for (const auto& e : at_size) v.push_back(e.boundary);
    return v;
  }
};

template <graph_backend G>
profile_result<G> exact_connected_profile(const G& g, std::size_t n_max,
                                          std::uint64_t node_budget = 200000000ull) {
  using vertex_id = typename G::vertex_id;
  if (n_max < 1) throw usage_error("exact_connected_profile: n_max must be >= 1");

  constexpr std::uint64_t unset = UINT64_MAX;
  profile_result<G> res;
  res.at_size.assign(n_max, profile_entry<G>{unset, {}});

  std::vector<vertex_id> cur;          // current subset, insertion order
  vertex_map<G, char> in_set;
  vertex_map<G, std::uint32_t> cover;  // outside vertices -> # neighbors in set
  std::uint64_t boundary = 0;
  std::vector<vertex_id> ext;          // shared candidate stack
  vertex_map<G, char> listed;          // ever placed on ext (or in the set)
  std::uint64_t nodes = 0;

  auto add = [&](const vertex_id& v) {
    const auto it = cover.find(v);
    if (it != cover.end() && it->second > 0) --boundary;  // v leaves ∂
    in_set.emplace(v, 1);
    cur.push_back(v);
    for (const auto& w : g.neighbors(v)) {
      if (in_set.find(w) != in_set.end()) continue;
      if (++cover[w] == 1) ++boundary;
    }
  };
  auto remove_last = [&]() {
    const vertex_id v = cur.back();
    cur.pop_back();
    in_set.erase(v);
    for (const auto& w : g.neighbors(v)) {
      if (in_set.find(w) != in_set.end()) continue;
      auto it = cover.find(w);
      if (--it->second == 0) {
        cover.erase(it);
        --boundary;
      }
    }
    const auto it = cover.find(v);
    if (it != cover.end() && it->second > 0) ++boundary;  // v rejoins ∂
  };

  auto record = [&]() {
    auto& entry = res.at_size[cur.size() - 1];
    if (boundary < entry.boundary) {
      entry.boundary = boundary;
      entry.witness = cur;
    }
  };

  // Adding one vertex shrinks the boundary by at most 1, so from (size s,
  // boundary b) every size-n' descendant has boundary >= b - (n' - s):
  // prune when no remaining size could improve its record.
  auto can_improve = [&]() {
    const std::int64_t b = static_cast<std::int64_t>(boundary);
    const std::int64_t s = static_cast<std::int64_t>(cur.size());
    for (std::size_t np = cur.size() + 1; np <= n_max; ++np) {
      const std::uint64_t best = res.at_size[np - 1].boundary;
      if (best == unset) return true;
      if (b - (static_cast<std::int64_t>(np) - s) < static_cast<std::int64_t>(best))
        return true;
    }
    return false;
  };

  const auto recurse = [&](auto&& self, std::size_t lo, std::size_t hi) -> void {
    if (++nodes > node_budget)
      throw limit_error("exact_connected_profile: enumeration budget of " +
                        std::to_string(node_budget) + " nodes exhausted at size " +
                        std::to_string(cur.size()) +
                        "; reduce n_max or raise the budget explicitly");
    record();
    if (cur.size() == n_max) return;
    if (!can_improve()) return;
    for (std::size_t i = lo; i < hi; ++i) {
      add(ext[i]);
      const std::size_t mark = ext.size();
      for (const auto& w : g.neighbors(ext[i])) {
        if (listed.find(w) == listed.end()) {
          listed.emplace(w, 1);
          ext.push_back(w);
        }
      }
      self(self, i + 1, ext.size());
      while (ext.size() > mark) {
        listed.erase(ext.back());
        ext.pop_back();
      }
      remove_last();
    }
  };

  const vertex_id o = g.origin();
  listed.emplace(o, 1);
  add(o);
  for (const auto& w : g.neighbors(o)) {
    listed.emplace(w, 1);
    ext.push_back(w);
  }
  recurse(recurse, 0, ext.size());

  for (std::size_t n = 1; n <= n_max; ++n) {
    if (res.at_size[n - 1].boundary == unset)
      throw invariant_error("exact_connected_profile: no connected subset of size " +
                            std::to_string(n) + " was found");
  }
  res.nodes_visited = nodes;
  return res;
}

} // namespace edenlab
