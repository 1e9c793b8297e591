#pragma once
// Nerve complex of a finite tile union.
//
// Vertices are the tiles. Every corner of the tiling where s cluster tiles
// meet contributes the full (s-1)-simplex on those tiles (all nonempty tile
// intersections are corners or shared edges, and every such intersection is
// contractible, so the nerve carries the homology of the union). Edge
// adjacencies are inserted explicitly as well; in the supported tessellations
// they coincide with faces of corner simplices. Dimensions are truncated at
// k_max, which caps the top homology degree that can be trusted — betti()
// enforces that.
//
// Construction doubles as an audit of the corner data: each adjacent pair of
// cluster tiles must share exactly as many corner keys as the corresponding
// neighbor pair at the origin does (2 for edge-adjacent tiles, 1 for the
// corner-contact pairs of the king lattice), and each corner key must
// reproduce identically from all incident tiles; violations abort.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "edenlab/core/error.hpp"
#include "edenlab/graph/concepts.hpp"
#include "edenlab/nerve/gf2.hpp"

namespace edenlab {

/// Simplicial complex with GF(2) boundary operators. simplices[k] lists the
/// k-simplices as strictly increasing tile-index tuples, lexicographically
/// sorted; boundary(k) maps C_k -> C_{k-1}.
struct nerve_complex {
  int k_max = 0;
  std::vector<std::string> tile_ids;  ///< vertex index -> printed tile id
  std::vector<std::vector<std::vector<std::uint32_t>>> simplices;

  std::size_t count(int k) const {
    if (k < 0 || k > k_max) return 0;
    return simplices[static_cast<std::size_t>(k)].size();
  }

  /// Boundary operator C_k -> C_{k-1} as a column-sparse GF(2) matrix.
  gf2_matrix boundary(int k) const {
    if (k < 1 || k > k_max)
      throw usage_error("nerve boundary operator needs 1 <= k <= k_max");
    const auto& lower = simplices[static_cast<std::size_t>(k) - 1];
    const auto& upper = simplices[static_cast<std::size_t>(k)];
    std::map<std::vector<std::uint32_t>, std::uint32_t> index;
    for (std::uint32_t i = 0; i < lower.size(); ++i) index.emplace(lower[i], i);

    gf2_matrix m;
    m.n_rows = lower.size();
    m.cols.reserve(upper.size());
    for (const auto& s : upper) {
      std::vector<std::uint32_t> col;
      col.reserve(s.size());
      std::vector<std::uint32_t> face(s.size() - 1);
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        face.clear();
        for (std::size_t i = 0; i < s.size(); ++i)
          if (i != drop) face.push_back(s[i]);
        const auto it = index.find(face);
        if (it == index.end())
          throw invariant_error("nerve complex is not closed under faces");
        col.push_back(it->second);
      }
      std::sort(col.begin(), col.end());
      m.cols.push_back(std::move(col));
    }
    return m;
  }

  /// Alternating sum of simplex counts.
  std::int64_t euler_characteristic() const {
    std::int64_t chi = 0;
    for (int k = 0; k <= k_max; ++k) {
      const auto c = static_cast<std::int64_t>(count(k));
      chi += (k % 2 == 0) ? c : -c;
    }
    return chi;
  }

  /// Re-checks face closure and boundary-of-boundary == 0 from scratch.
  void validate() const {
    for (int k = 0; k <= k_max; ++k) {
      const auto& level = simplices[static_cast<std::size_t>(k)];
      for (std::size_t i = 0; i < level.size(); ++i) {
        const auto& s = level[i];
        if (static_cast<int>(s.size()) != k + 1)
          throw invariant_error("nerve simplex has the wrong arity for its dimension");
        for (std::size_t j = 0; j < s.size(); ++j) {
          if (s[j] >= tile_ids.size())
            throw invariant_error("nerve simplex references an unknown tile index");
          if (j && s[j] <= s[j - 1])
            throw invariant_error("nerve simplex tuple is not strictly increasing");
        }
        if (i && !(level[i - 1] < s))
          throw invariant_error("nerve simplex list is not sorted and duplicate-free");
      }
    }
    for (int k = 2; k <= k_max; ++k) {
      const auto dd = gf2_multiply(boundary(k - 1), boundary(k));
      for (const auto& col : dd.cols) {
        if (!col.empty())
          throw invariant_error("boundary of boundary is nonzero in dimension " +
                                std::to_string(k));
      }
    }
  }
};

/// Builds the nerve of `cluster` (tile ids of one finite union, duplicates
/// rejected) from the backend's corner structure, truncating simplices at
/// dimension k_max.
template <tiling_backend G>
nerve_complex build_nerve(const G& g,
                          const std::vector<typename G::vertex_id>& cluster,
                          int k_max = 2) {
  if (k_max < 1 || k_max > 8)
    throw usage_error("build_nerve: k_max must lie in 1..8");
  if (cluster.empty()) throw usage_error("build_nerve: empty tile set");

  vertex_map<G, std::uint32_t> index;
  for (const auto& v : cluster) {
    if (!index.emplace(v, static_cast<std::uint32_t>(index.size())).second)
      throw usage_error("build_nerve: duplicate tile in cluster");
  }

  nerve_complex cx;
  cx.k_max = k_max;
  cx.tile_ids.reserve(cluster.size());
  for (const auto& v : cluster) cx.tile_ids.push_back(g.print_id(v));
  cx.simplices.assign(static_cast<std::size_t>(k_max) + 1, {});

  std::vector<std::set<std::vector<std::uint32_t>>> found(
      static_cast<std::size_t>(k_max) + 1);
  for (std::uint32_t i = 0; i < cluster.size(); ++i) found[0].insert({i});

  // How many corners a tile shares with its k-th neighbor is the same
  // everywhere (transport-invariance, canonical neighbor order), so the
  // origin's corner fan fixes the expectation for the audit below.
  std::vector<int> slot_corners(static_cast<std::size_t>(g.degree()), 0);
  {
    const auto nbrs0 = g.neighbors(g.origin());
    const auto fans0 = g.corner_fan(g.origin());
    for (std::size_t k = 0; k < nbrs0.size(); ++k) {
      for (const auto& rec : fans0) {
        for (const auto& t : rec.tiles) {
          if (g.compare(t, nbrs0[k]) == 0) {
            ++slot_corners[k];
            break;
          }
        }
      }
    }
  }

  // Adjacencies as 1-simplices; also the reference list for the corner audit.
  std::map<std::pair<std::uint32_t, std::uint32_t>, int> expected_shared;
  for (std::uint32_t i = 0; i < cluster.size(); ++i) {
    const auto nbrs = g.neighbors(cluster[i]);
    for (std::size_t k = 0; k < nbrs.size(); ++k) {
      const auto it = index.find(nbrs[k]);
      if (it == index.end() || it->second == i) continue;
      const auto a = std::min(i, it->second), b = std::max(i, it->second);
      const auto ins = expected_shared.emplace(std::pair{a, b}, slot_corners[k]);
      if (!ins.second && ins.first->second != slot_corners[k])
        throw invariant_error("corner data inconsistent: tiles " + cx.tile_ids[a] +
                              " and " + cx.tile_ids[b] +
                              " disagree about their shared corner count");
      found[1].insert({a, b});
    }
  }

  // Corner simplices: each corner where s >= 2 cluster tiles meet inserts
  // every sub-tuple of size 2..min(s, k_max+1), so faces come closed by
  // construction.
  std::unordered_set<std::string> seen_corner;
  std::map<std::pair<std::uint32_t, std::uint32_t>, int> shared_corners;
  for (std::uint32_t i = 0; i < cluster.size(); ++i) {
    for (const auto& rec : g.corner_fan(cluster[i])) {
      if (!seen_corner.insert(rec.corner).second) continue;
      std::vector<std::uint32_t> members;
      for (const auto& t : rec.tiles) {
        const auto it = index.find(t);
        if (it != index.end()) members.push_back(it->second);
      }
      std::sort(members.begin(), members.end());
      if (std::adjacent_find(members.begin(), members.end()) != members.end())
        throw invariant_error("corner record lists a tile twice at corner " + rec.corner);
      if (members.size() < 2) continue;
      for (std::size_t a = 0; a < members.size(); ++a)
        for (std::size_t b = a + 1; b < members.size(); ++b)
          ++shared_corners[{members[a], members[b]}];

      const std::size_t top = std::min(members.size(),
                                       static_cast<std::size_t>(k_max) + 1);
      // Enumerate sub-tuples by bitmask; member lists are tiny (<= 2^d or q).
      const std::uint32_t full = (1u << members.size()) - 1u;
      for (std::uint32_t mask = 1; mask <= full; ++mask) {
        const auto bits = static_cast<std::size_t>(__builtin_popcount(mask));
        if (bits < 2 || bits > top) continue;
        std::vector<std::uint32_t> tuple;
        tuple.reserve(bits);
        for (std::size_t b = 0; b < members.size(); ++b)
          if (mask & (1u << b)) tuple.push_back(members[b]);
        found[bits - 1].insert(std::move(tuple));
      }
    }
  }

  // Corner-data audit. A shortfall means the oracle missed a corner; an
  // excess means a corner key failed to canonicalize (the same geometric
  // corner seen under two keys double-counts its pairs).
  for (const auto& [pair, expected] : expected_shared) {
    const auto it = shared_corners.find(pair);
    const int n = (it == shared_corners.end()) ? 0 : it->second;
    if (n != expected)
      throw invariant_error("corner data incomplete: adjacent tiles " +
                            cx.tile_ids[pair.first] + " and " + cx.tile_ids[pair.second] +
                            " share " + std::to_string(n) + " corner keys (expected " +
                            std::to_string(expected) + ")");
  }

  for (int k = 0; k <= k_max; ++k) {
    auto& out = cx.simplices[static_cast<std::size_t>(k)];
    out.assign(found[static_cast<std::size_t>(k)].begin(),
               found[static_cast<std::size_t>(k)].end());
  }
  return cx;
}

} // namespace edenlab
