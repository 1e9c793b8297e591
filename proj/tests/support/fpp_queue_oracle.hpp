#pragma once
// Reference first-passage-percolation engine: explicit per-site Exp(1)
// passage times with a priority queue. Used only as a test oracle against
// the jump-chain engine — the two must produce the same growth-shape
// distribution, though via completely different sampling.
//
// Each site w gets its clock when it first becomes adjacent to the cluster,
// at absolute time T = (time of first adjacency) + Exp(1); sites are infected
// in order of T. Equal keys in the queue would mean simultaneous infections,
// which the model excludes: they raise tie_error instead of being ordered
// arbitrarily.

#include <queue>
#include <vector>

#include "edenlab/core/error.hpp"
#include "edenlab/core/rng.hpp"
#include "edenlab/graph/concepts.hpp"

namespace edenlab::testing {

/// First n infected vertices (seed first) of a per-site FPP run from the
/// origin, together with their infection times.
template <graph_backend G>
std::vector<std::pair<typename G::vertex_id, double>>
fpp_first_infected(const G& g, rng_stream& rng, std::size_t n) {
  using vertex_id = typename G::vertex_id;
  struct entry {
    double time;
    std::uint64_t seq;  // push order; only for a deterministic heap layout
    vertex_id vertex;
    bool operator>(const entry& o) const {
      if (time != o.time) return time > o.time;
      return seq > o.seq;
    }
  };
  std::priority_queue<entry, std::vector<entry>, std::greater<entry>> queue;
  vertex_map<G, char> infected;
  vertex_map<G, char> scheduled;
  std::vector<std::pair<vertex_id, double>> out;

  std::uint64_t seq = 0;
  const vertex_id seed = g.origin();
  infected.emplace(seed, 1);
  out.emplace_back(seed, 0.0);
  for (const auto& w : g.neighbors(seed)) {
    scheduled.emplace(w, 1);
    queue.push(entry{rng.exponential(1.0), seq++, w});
  }

  while (out.size() < n) {
    if (queue.empty())
      throw invariant_error("fpp oracle: queue exhausted before reaching target size");
    const entry e = queue.top();
    queue.pop();
    if (!queue.empty() && queue.top().time == e.time)
      throw tie_error("fpp oracle: equal passage times");
    infected.emplace(e.vertex, 1);
    out.emplace_back(e.vertex, e.time);
    for (const auto& w : g.neighbors(e.vertex)) {
      if (infected.find(w) != infected.end()) continue;
      if (scheduled.find(w) != scheduled.end()) continue;
      scheduled.emplace(w, 1);
      queue.push(entry{e.time + rng.exponential(1.0), seq++, w});
    }
  }
  return out;
}

} // namespace edenlab::testing
