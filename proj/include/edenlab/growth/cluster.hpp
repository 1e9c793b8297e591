#pragma once
// Growing cluster state: the infected set A and its exterior vertex boundary
// ∂A = { w ∉ A : w adjacent to A }, maintained incrementally.
//
// The boundary lives in an array with a position index so that uniform
// sampling is O(1) and removal is O(1) by swap-remove; the array order is a
// deterministic function of the step sequence, which keeps runs replayable.

#include <cstdint>
#include <string>
#include <vector>

#include "edenlab/core/error.hpp"
#include "edenlab/graph/concepts.hpp"

namespace edenlab {

template <graph_backend G>
class cluster_state {
public:
  using vertex_id = typename G::vertex_id;

  struct vertex_info {
    std::uint64_t step;  ///< 0 for the seed, k for the k-th infection
    double fpp_time;     ///< cumulative clock when this vertex was infected
  };

  cluster_state(const G& g, const vertex_id& seed) : g_(g) {
    infected_.emplace(seed, vertex_info{0, 0.0});
    order_.push_back(seed);
    for (const auto& w : g_.neighbors(seed)) push_boundary(w);
    if (boundary_.empty())
      throw invariant_error("cluster_state: seed vertex has no neighbors");
  }

  explicit cluster_state(const G& g) : cluster_state(g, g.origin()) {}

  const G& graph() const { return g_; }

  std::uint64_t size() const { return order_.size(); }
  std::uint64_t step_count() const { return order_.size() - 1; }
  double fpp_clock() const { return clock_; }

  bool contains(const vertex_id& v) const { return infected_.find(v) != infected_.end(); }

  /// Infection metadata, or nullptr if v is not infected.
  const vertex_info* info(const vertex_id& v) const {
    const auto it = infected_.find(v);
    return it == infected_.end() ? nullptr : &it->second;
  }

  /// Infected vertices in infection order; front() is the seed.
  const std::vector<vertex_id>& infected_order() const { return order_; }

  const std::vector<vertex_id>& boundary() const { return boundary_; }
  std::size_t boundary_size() const { return boundary_.size(); }

  bool in_boundary(const vertex_id& v) const {
    return boundary_pos_.find(v) != boundary_pos_.end();
  }

  /// Move boundary_[idx] into the cluster at clock value new_clock.
  /// The clock must strictly advance: simultaneous infection times are a
  /// tie and abort the trial rather than being silently ordered.
  vertex_id infect_boundary_at(std::size_t idx, double new_clock) {
    if (idx >= boundary_.size())
      throw invariant_error("infect_boundary_at: index out of range");
    if (!(new_clock > clock_))
      throw tie_error("fpp clock did not strictly advance (passage-time tie)");

    const vertex_id v = boundary_[idx];
    // Swap-remove from the boundary array.
    boundary_[idx] = boundary_.back();
    boundary_.pop_back();
    if (idx < boundary_.size()) boundary_pos_[boundary_[idx]] = idx;
    boundary_pos_.erase(v);

    infected_.emplace(v, vertex_info{order_.size(), new_clock});
    order_.push_back(v);
    clock_ = new_clock;
    for (const auto& w : g_.neighbors(v)) {
      if (!contains(w)) push_boundary(w);
    }
    return v;
  }

  /// Recompute everything from scratch and compare with the maintained
  /// structures; throws invariant_error on any mismatch. O(|A| * degree).
  void validate() const {
    // Exterior boundary from scratch.
    vertex_map<G, char> fresh;
    for (const auto& v : order_) {
      for (const auto& w : g_.neighbors(v)) {
        if (!contains(w)) fresh.emplace(w, 1);
      }
    }
    if (fresh.size() != boundary_.size())
      throw invariant_error("validate: boundary size mismatch (" +
                            std::to_string(boundary_.size()) + " maintained, " +
                            std::to_string(fresh.size()) + " recomputed)");
    for (const auto& v : boundary_) {
      if (fresh.find(v) == fresh.end())
        throw invariant_error("validate: maintained boundary has a non-boundary vertex");
    }
    // Position index consistency.
    if (boundary_pos_.size() != boundary_.size())
      throw invariant_error("validate: boundary position index size mismatch");
    for (std::size_t i = 0; i < boundary_.size(); ++i) {
      const auto it = boundary_pos_.find(boundary_[i]);
      if (it == boundary_pos_.end() || it->second != i)
        throw invariant_error("validate: boundary position index mismatch");
    }
    // 1 <= |∂A| <= d |A| on an infinite vertex-transitive graph.
    if (boundary_.empty() || boundary_.size() > static_cast<std::size_t>(g_.degree()) * size())
      throw invariant_error("validate: boundary size outside [1, d|A|]");
    // Step numbering, strict clock growth, membership.
    double prev = -1.0;
    for (std::size_t i = 0; i < order_.size(); ++i) {
      const auto* vi = info(order_[i]);
      if (vi == nullptr || vi->step != i)
        throw invariant_error("validate: infection order and step numbers disagree");
      if (!(vi->fpp_time > prev))
        throw invariant_error("validate: fpp times are not strictly increasing");
      prev = vi->fpp_time;
    }
    if (infected_.size() != order_.size())
      throw invariant_error("validate: infected map and order length disagree");
    // Connectivity: BFS from the seed inside A reaches everything.
    vertex_map<G, char> seen;
    std::vector<vertex_id> queue{order_.front()};
    seen.emplace(order_.front(), 1);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      for (const auto& w : g_.neighbors(queue[qi])) {
        if (contains(w) && seen.find(w) == seen.end()) {
          seen.emplace(w, 1);
          queue.push_back(w);
        }
      }
    }
    if (seen.size() != order_.size())
      throw invariant_error("validate: infected set is not connected");
  }

private:
  void push_boundary(const vertex_id& w) {
    if (boundary_pos_.find(w) != boundary_pos_.end()) return;
    boundary_pos_.emplace(w, boundary_.size());
    boundary_.push_back(w);
  }

  const G& g_;
  vertex_map<G, vertex_info> infected_;
  std::vector<vertex_id> order_;
  std::vector<vertex_id> boundary_;
  vertex_map<G, std::size_t> boundary_pos_;
  double clock_ = 0.0;
};

} // namespace edenlab
