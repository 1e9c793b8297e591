#pragma once
// Compile-time contract shared by all graph backends.
//
// A backend models one locally finite vertex-transitive graph with a
// distinguished origin. Everything downstream (growth engine, census,
// profiles, nerve) is generic over this concept; backends differ only in how
// vertex ids are represented and how neighborhoods are produced.
//
// Contract notes beyond the signatures:
//  - neighbors(v) returns the degree() adjacent vertices in a canonical order
//    that depends only on v (never on discovery history).
//  - transport(v, w) applies the fixed automorphism phi_v taking origin() to v;
//    it preserves distances and satisfies transport(v, origin()) == v.
//  - compare defines a canonical total order on vertex ids (used for
//    deterministic tie-breaking and sorted output), with compare(v,w) < 0,
//    == 0, > 0 like strcmp.
//  - print_id/parse_id round-trip; printed ids contain no commas, quotes or
//    whitespace other than single interior spaces, so they are CSV-safe.
//  - Backends may memoize internally (mutable state behind const methods).
//    Instances are single-threaded; concurrent experiments use one instance
//    per trial.

#include <concepts>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace edenlab {

template <class G>
concept graph_backend =
    requires(const G& g, const typename G::vertex_id& v, const typename G::vertex_id& w,
             const std::string& s) {
      typename G::vertex_id;
      typename G::id_hash;
      typename G::id_eq;
      { g.degree() } -> std::convertible_to<int>;
      { g.origin() } -> std::same_as<typename G::vertex_id>;
      { g.neighbors(v) } -> std::same_as<std::vector<typename G::vertex_id>>;
      { g.transport(v, w) } -> std::same_as<typename G::vertex_id>;
      { g.compare(v, w) } -> std::convertible_to<int>;
      { g.print_id(v) } -> std::same_as<std::string>;
      { g.parse_id(s) } -> std::same_as<typename G::vertex_id>;
      { g.descriptor() } -> std::same_as<std::string>;
    };

/// One corner of a tiling together with the tiles meeting there, in a
/// deterministic order. The corner key is canonical: every incident tile
/// reports the same key for the same geometric corner.
template <class V>
struct corner_record {
  std::string corner;
  std::vector<V> tiles;
};

/// A backend whose vertices are tiles of a tessellation with a corner
/// structure (lattices and {p,q} duals). corner_fan(v) lists every corner of
/// tile v; each record contains all tiles meeting at that corner (v included).
template <class G>
concept tiling_backend =
    graph_backend<G> && requires(const G& g, const typename G::vertex_id& v) {
      { g.corner_fan(v) } -> std::same_as<std::vector<corner_record<typename G::vertex_id>>>;
    };

/// A backend with a constant-time exact graph metric (lattices, trees).
template <class G>
concept metric_backend =
    graph_backend<G> && requires(const G& g, const typename G::vertex_id& v) {
      { g.distance(v, v) } -> std::convertible_to<std::int64_t>;
    };

/// Hash map / set keyed by a backend's vertex ids.
template <class G, class T>
using vertex_map =
    std::unordered_map<typename G::vertex_id, T, typename G::id_hash, typename G::id_eq>;

template <class G>
using vertex_set =
    std::unordered_set<typename G::vertex_id, typename G::id_hash, typename G::id_eq>;

} // namespace edenlab
