#pragma once
// Dual graph of the hyperbolic {p,q} tessellation (tile-adjacency graph).
//
// Vertices are tiles (faces) of the regular tessellation by p-gons meeting q
// per corner, with (p-2)(q-2) > 4. Two tiles are adjacent when they share an
// edge, so the graph is p-regular and vertex-transitive.
//
// Representation. The rotation subgroup G+ of the (2,p,q) triangle group acts
// simply transitively on (tile, edge) flags; tiles correspond to cosets
// g<a> where a is the order-p rotation about the base tile's center. All
// group elements are 3x3 matrices over the exact coefficient ring
// Z[y]/(Psi_L) from algebra.hpp, so tile identity is an integer comparison:
// the id of tile g<a> is the serialization of the center vector g*v0, which
// is a coset invariant. Per tile we also keep one *canonical* representative
// matrix — the minimum of {g a^j : j} under the coefficient-lexicographic
// order — so that neighbor order, corner order, and transport are functions
// of the tile alone, independent of how it was first reached.
//
// Lazy materialization. Tiles first seen as someone's neighbor store only
// (parent slot, edge index); their canonical matrix is computed on first use
// from the parent's. Frontier tiles that are never stepped on therefore cost
// a short record, not a matrix.
//
// Addressability. parse_id accepts exactly the ids this instance has already
// produced (via neighbors/corner_fan/transport enumeration); unknown ids
// raise usage_error. Callers that need ids from an external source (pattern
// files, snapshots) must enumerate the covering region first or register
// tiles explicitly via register_tile.

#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "edenlab/core/error.hpp"
#include "edenlab/graph/algebra.hpp"
#include "edenlab/graph/concepts.hpp"

namespace edenlab {

class hyperbolic_graph {
public:
  using vertex_id = std::string;
  struct id_hash {
    std::size_t operator()(const vertex_id& v) const {
      return std::hash<std::string>{}(v);
    }
  };
  using id_eq = std::equal_to<vertex_id>;

  hyperbolic_graph(int p, int q) : rep_(p, q), p_(p), q_(q) {
    const auto& R = rep_.ring;
    // Powers a^j and the per-edge step matrices a^j S.
    a_pow_.reserve(static_cast<std::size_t>(p_));
    step_.reserve(static_cast<std::size_t>(p_));
    ring_mat3 acc = mat_identity(R);
    for (int j = 0; j < p_; ++j) {
      a_pow_.push_back(acc);
      step_.push_back(mat_mul(R, acc, rep_.flip_s));
      acc = mat_mul(R, acc, rep_.rot_a);
    }
    if (!mat_equal(R, acc, mat_identity(R)))
      throw invariant_error("hyperbolic_graph: a^p != identity");

    // First columns of a^j must be pairwise distinct for the canonical-min
    // shortcut (they are, because the representation is faithful).
    for (int i = 0; i < p_; ++i)
      for (int j = i + 1; j < p_; ++j)
        if (compare_vec(R, column(a_pow_[static_cast<std::size_t>(i)], 0),
                        column(a_pow_[static_cast<std::size_t>(j)], 0)) == 0)
          throw invariant_error("hyperbolic_graph: rotation powers share a first column");

    // Neighbor center offsets u_k = a^k S v0, pairwise distinct and != v0.
    for (int k = 0; k < p_; ++k)
      nbr_off_.push_back(mat_vec(R, step_[static_cast<std::size_t>(k)], rep_.tile_center));
    for (int i = 0; i < p_; ++i) {
      if (compare_vec(R, nbr_off_[static_cast<std::size_t>(i)], rep_.tile_center) == 0)
        throw invariant_error("hyperbolic_graph: neighbor offset equals the center");
      for (int j = i + 1; j < p_; ++j)
        if (compare_vec(R, nbr_off_[static_cast<std::size_t>(i)],
                        nbr_off_[static_cast<std::size_t>(j)]) == 0)
          throw invariant_error("hyperbolic_graph: duplicate neighbor offsets");
    }

    // Corner directions w_j = a^j c0 and corner-fan matrices a^j b^t a^{-j}.
    std::vector<ring_mat3> b_pow;
    ring_mat3 bacc = mat_identity(R);
    for (int t = 0; t < q_; ++t) {
      b_pow.push_back(bacc);
      bacc = mat_mul(R, bacc, rep_.rot_b);
    }
    for (int j = 0; j < p_; ++j) {
      corner_off_.push_back(mat_vec(R, a_pow_[static_cast<std::size_t>(j)], rep_.corner_base));
      std::vector<ring_mat3> fans;
      const auto& ainv = a_pow_[static_cast<std::size_t>((p_ - j) % p_)];
      for (int t = 0; t < q_; ++t)
        fans.push_back(mat_mul(R, a_pow_[static_cast<std::size_t>(j)],
                               mat_mul(R, b_pow[static_cast<std::size_t>(t)], ainv)));
      fan_.push_back(std::move(fans));
    }

    const vertex_id origin_id = intern_with_matrix(canonicalize(mat_identity(R)));
    origin_ = index_.at(origin_id);
  }

  int degree() const { return p_; }
  int gonality() const { return p_; }
  int corner_valence() const { return q_; }

  vertex_id origin() const { return ids_[origin_]; }

  std::string descriptor() const {
    return "hyperbolic(p=" + std::to_string(p_) + ", q=" + std::to_string(q_) + ")";
  }

  std::vector<vertex_id> neighbors(const vertex_id& v) const {
    const std::uint32_t s = slot_of(v);
    const ring_mat3& g = matrix_of(s);
    const auto& R = rep_.ring;
    std::vector<vertex_id> out;
    out.reserve(static_cast<std::size_t>(p_));
    for (int k = 0; k < p_; ++k) {
      const ring_vec3 center = mat_vec(R, g, nbr_off_[static_cast<std::size_t>(k)]);
      out.push_back(intern_lazy(serialize_vec(R, center), s, static_cast<std::uint8_t>(k)));
    }
    return out;
  }

  /// Corner fans in canonical order: record j is the corner a^j c0 of this
  /// tile; its tiles are the q tiles around that corner starting with v.
  std::vector<corner_record<vertex_id>> corner_fan(const vertex_id& v) const {
    const std::uint32_t s = slot_of(v);
    const ring_mat3& g = matrix_of(s);
    const auto& R = rep_.ring;
    std::vector<corner_record<vertex_id>> out;
    out.reserve(static_cast<std::size_t>(p_));
    for (int j = 0; j < p_; ++j) {
      corner_record<vertex_id> rec;
      rec.corner = serialize_vec(R, mat_vec(R, g, corner_off_[static_cast<std::size_t>(j)]));
      for (int t = 0; t < q_; ++t) {
        const ring_mat3 cand =
            mat_mul(R, g, fan_[static_cast<std::size_t>(j)][static_cast<std::size_t>(t)]);
        rec.tiles.push_back(intern_candidate(cand));
      }
      out.push_back(std::move(rec));
    }
    return out;
  }

  /// The automorphism g_v (canonical representative of v's coset) applied to
  /// an arbitrary known vertex w; transport(v, origin()) == v.
  vertex_id transport(const vertex_id& v, const vertex_id& w) const {
    const ring_mat3& gv = matrix_of(slot_of(v));
    const ring_mat3& gw = matrix_of(slot_of(w));
    return intern_candidate(mat_mul(rep_.ring, gv, gw));
  }

  /// The order-p rotation about the origin tile's center applied k times:
  /// a^k fixes the origin and permutes its neighbors cyclically. Together
  /// with transport this realizes every orientation-preserving symmetry of
  /// the tiling that pins a chosen tile. Mirror images are not reachable:
  /// the coset representation carries only the rotation subgroup.
  vertex_id rotate_about_origin(const vertex_id& v, int k) const {
    const int r = ((k % p_) + p_) % p_;
    const ring_mat3& g = matrix_of(slot_of(v));
    return intern_candidate(
        mat_mul(rep_.ring, a_pow_[static_cast<std::size_t>(r)], g));
  }

  /// Canonical total order on ids (plain string order — ids are canonical).
  int compare(const vertex_id& a, const vertex_id& b) const {
    return a < b ? -1 : (a == b ? 0 : 1);
  }

  std::string print_id(const vertex_id& v) const { return v; }

  vertex_id parse_id(const std::string& s) const {
    if (index_.find(s) == index_.end())
      throw usage_error("unknown tile id '" + s +
                        "'; only tiles already enumerated by this instance are addressable");
    return s;
  }

  // ---- snapshot / rendering support -------------------------------------

  /// Serialized canonical matrix of v (9 ring entries joined with '|').
  std::string tile_matrix_text(const vertex_id& v) const {
    const ring_mat3& g = matrix_of(slot_of(v));
    const auto& R = rep_.ring;
    std::string s;
    for (std::size_t i = 0; i < 9; ++i) {
      if (i) s += '|';
      s += R.serialize(g[i]);
    }
    return s;
  }

  /// Re-register a tile from its serialized canonical matrix (snapshot load).
  /// Rejects matrices that are not canonical or whose id does not match.
  vertex_id register_tile(const std::string& id, const std::string& matrix_text) const {
    const auto& R = rep_.ring;
    const auto parts = split(matrix_text, '|');
    if (parts.size() != 9)
      throw usage_error("tile matrix must have 9 entries, got " +
                        std::to_string(parts.size()));
    ring_mat3 g;
    for (std::size_t i = 0; i < 9; ++i) g[i] = R.parse(parts[i]);
    const ring_mat3 canon = canonicalize(g);
    if (!mat_equal(R, canon, g))
      throw usage_error("tile matrix for '" + id + "' is not in canonical form");
    if (serialize_vec(R, mat_vec(R, g, rep_.tile_center)) != id)
      throw usage_error("tile matrix does not reproduce the id '" + id + "'");
    const vertex_id got = intern_with_matrix_copy(g);
    if (got != id)
      throw invariant_error("register_tile: canonical id mismatch");
    return got;
  }

  /// Center of v under the real embedding, in simple-root coordinates
  /// (pair with gram_real() to take inner products).
  std::array<double, 3> center_real(const vertex_id& v) const {
    const ring_mat3& g = matrix_of(slot_of(v));
    return eval_vec(rep_.ring, mat_vec(rep_.ring, g, rep_.tile_center));
  }

  std::array<double, 9> gram_real() const {
    std::array<double, 9> b;
    for (std::size_t i = 0; i < 9; ++i) b[i] = rep_.ring.eval(rep_.gram[i]);
    return b;
  }

  /// The p corners of v under the real embedding, in rotation order around
  /// the tile center (same coordinates as center_real).
  std::vector<std::array<double, 3>> corners_real(const vertex_id& v) const {
    const ring_mat3& g = matrix_of(slot_of(v));
    const auto& R = rep_.ring;
    std::vector<std::array<double, 3>> out;
    out.reserve(static_cast<std::size_t>(p_));
    for (int j = 0; j < p_; ++j) {
      const ring_vec3 corner = mat_vec(
          R, g,
          mat_vec(R, a_pow_[static_cast<std::size_t>(j)], rep_.corner_base));
      out.push_back(eval_vec(R, corner));
    }
    return out;
  }

  const coxeter_rep& representation() const { return rep_; }

  std::size_t interned_count() const { return ids_.size(); }

private:
  struct tile_rec {
    std::optional<ring_mat3> canon;
    std::uint32_t parent = 0;
    std::uint8_t edge = 0;
    bool has_parent = false;
  };

  static ring_vec3 column(const ring_mat3& m, int c) {
    return ring_vec3{m[static_cast<std::size_t>(c)], m[static_cast<std::size_t>(3 + c)],
                     m[static_cast<std::size_t>(6 + c)]};
  }

  std::uint32_t slot_of(const vertex_id& v) const {
    const auto it = index_.find(v);
    if (it == index_.end())
      throw usage_error("unknown tile id '" + v + "'");
    return it->second;
  }

  /// Canonical representative of the coset g<a>: the candidate g a^j with the
  /// lexicographically least first column (first columns are always pairwise
  /// distinct because the representation is faithful).
  ring_mat3 canonicalize(const ring_mat3& g) const {
    const auto& R = rep_.ring;
    int best = 0;
    ring_vec3 best_col = mat_vec(R, g, column(a_pow_[0], 0));
    for (int j = 1; j < p_; ++j) {
      ring_vec3 col = mat_vec(R, g, column(a_pow_[static_cast<std::size_t>(j)], 0));
      const int c = compare_vec(R, col, best_col);
      if (c == 0)
        throw invariant_error("hyperbolic_graph: canonical representative is ambiguous");
      if (c < 0) {
        best = j;
        best_col = std::move(col);
      }
    }
    return mat_mul(R, g, a_pow_[static_cast<std::size_t>(best)]);
  }

  const ring_mat3& matrix_of(std::uint32_t s) const {
    tile_rec& rec = recs_[s];
    if (!rec.canon) {
      if (!rec.has_parent)
        throw invariant_error("hyperbolic_graph: tile has neither matrix nor parent");
      const ring_mat3& gp = matrix_of(rec.parent);  // parents are older slots
      rec.canon = canonicalize(mat_mul(rep_.ring, gp, step_[rec.edge]));
    }
    return *rec.canon;
  }

  /// Intern a tile known only by id, recording provenance for lazy
  /// materialization. Returns the id.
  vertex_id intern_lazy(std::string id, std::uint32_t parent, std::uint8_t edge) const {
    const auto [it, inserted] = index_.emplace(std::move(id), static_cast<std::uint32_t>(ids_.size()));
    if (inserted) {
      ids_.push_back(it->first);
      tile_rec rec;
      rec.parent = parent;
      rec.edge = edge;
      rec.has_parent = true;
      recs_.push_back(std::move(rec));
    }
    return it->first;
  }

  /// Intern a tile from an arbitrary representative matrix, canonicalizing
  /// and storing the matrix immediately.
  vertex_id intern_candidate(const ring_mat3& g) const {
    const auto& R = rep_.ring;
    std::string id = serialize_vec(R, mat_vec(R, g, rep_.tile_center));
    const auto it = index_.find(id);
    if (it != index_.end()) return it->first;
    return intern_with_matrix(canonicalize(g));
  }

  vertex_id intern_with_matrix_copy(const ring_mat3& canon) const {
    return intern_with_matrix(ring_mat3(canon));
  }

  vertex_id intern_with_matrix(ring_mat3 canon) const {
    const auto& R = rep_.ring;
    std::string id = serialize_vec(R, mat_vec(R, canon, rep_.tile_center));
    const auto [it, inserted] = index_.emplace(std::move(id), static_cast<std::uint32_t>(ids_.size()));
    if (inserted) {
      ids_.push_back(it->first);
      tile_rec rec;
      rec.canon = std::move(canon);
      recs_.push_back(std::move(rec));
    } else if (!recs_[it->second].canon) {
      recs_[it->second].canon = std::move(canon);
    }
    return it->first;
  }

  coxeter_rep rep_;
  int p_, q_;
  std::vector<ring_mat3> a_pow_;               // a^j
  std::vector<ring_mat3> step_;                // a^j S (edge-k crossing)
  std::vector<ring_vec3> nbr_off_;             // a^j S v0
  std::vector<ring_vec3> corner_off_;          // a^j c0
  std::vector<std::vector<ring_mat3>> fan_;    // a^j b^t a^{-j}
  mutable std::unordered_map<std::string, std::uint32_t> index_;
  mutable std::vector<std::string> ids_;       // slot -> id
  // deque: matrix_of hands out references into records while enumeration
  // keeps appending new slots, so storage must not relocate on growth.
  mutable std::deque<tile_rec> recs_;          // slot -> record
  std::uint32_t origin_ = 0;
};

static_assert(tiling_backend<hyperbolic_graph>);

} // namespace edenlab
