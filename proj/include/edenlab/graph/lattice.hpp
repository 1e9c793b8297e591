#pragma once
// Euclidean lattice Z^d (d <= 4) under one of two generating sets:
//   standard — the 2d unit steps  (graph metric = L1)
//   king     — all 3^d - 1 nonzero {-1,0,1}^d steps  (graph metric = Linf)
//
// Vertex ids are integer coordinate tuples; transport is translation.

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "edenlab/core/error.hpp"
#include "edenlab/core/fmt.hpp"
#include "edenlab/core/rng.hpp"
#include "edenlab/graph/concepts.hpp"

namespace edenlab {

enum class lattice_generators { standard, king };

/// Coordinate tuple; coordinates beyond the graph's dimension stay zero, so
/// plain memberwise equality and hashing are dimension-agnostic.
struct lattice_vertex {
  std::array<std::int32_t, 4> c{};
  friend bool operator==(const lattice_vertex&, const lattice_vertex&) = default;
};

class lattice_graph {
public:
  using vertex_id = lattice_vertex;

  struct id_hash {
    std::size_t operator()(const lattice_vertex& v) const noexcept {
      std::uint64_t h = 0x243F6A8885A308D3ull;
      for (int i = 0; i < 4; ++i)
        h = splitmix64(h ^ static_cast<std::uint32_t>(v.c[i]));
      return static_cast<std::size_t>(h);
    }
  };
  struct id_eq {
    bool operator()(const lattice_vertex& a, const lattice_vertex& b) const noexcept {
      return a == b;
    }
  };

  lattice_graph(int dimension, lattice_generators gens)
      : dim_(dimension), gens_(gens) {
    if (dimension < 1 || dimension > 4)
      throw limit_error("lattice dimension must be between 1 and 4 (got " +
                        std::to_string(dimension) + ")");
    build_offsets();
  }

  int dimension() const { return dim_; }
  lattice_generators generator_set() const { return gens_; }

  int degree() const { return static_cast<int>(offsets_.size()); }

  vertex_id origin() const { return lattice_vertex{}; }

  std::vector<vertex_id> neighbors(const vertex_id& v) const {
    std::vector<vertex_id> out;
    out.reserve(offsets_.size());
    for (const auto& o : offsets_) out.push_back(add(v, o));
    return out;
  }

  /// Translation by v: the automorphism taking the origin to v.
  vertex_id transport(const vertex_id& v, const vertex_id& w) const { return add(v, w); }

  /// Exact graph distance: L1 for the standard generators, Linf for king.
  std::int64_t distance(const vertex_id& a, const vertex_id& b) const {
    std::int64_t l1 = 0, linf = 0;
    for (int i = 0; i < dim_; ++i) {
      const std::int64_t d = std::abs(static_cast<std::int64_t>(a.c[i]) - b.c[i]);
      l1 += d;
      if (d > linf) linf = d;
    }
    return gens_ == lattice_generators::standard ? l1 : linf;
  }

  /// Lexicographic order on coordinate tuples.
  int compare(const vertex_id& a, const vertex_id& b) const {
    for (int i = 0; i < dim_; ++i) {
      if (a.c[i] != b.c[i]) return a.c[i] < b.c[i] ? -1 : 1;
    }
    return 0;
  }

  std::string print_id(const vertex_id& v) const {
    std::string s;
    for (int i = 0; i < dim_; ++i) {
      if (i) s += ' ';
      s += std::to_string(v.c[i]);
    }
    return s;
  }

  vertex_id parse_id(const std::string& s) const {
    const auto parts = split(s, ' ');
    if (static_cast<int>(parts.size()) != dim_)
      throw usage_error("lattice vertex id '" + s + "' must have " +
                        std::to_string(dim_) + " coordinates");
    vertex_id v{};
    for (int i = 0; i < dim_; ++i) {
      const std::int64_t x = parse_i64(parts[i], "lattice coordinate");
      if (x < INT32_MIN || x > INT32_MAX)
        throw usage_error("lattice coordinate out of range in '" + s + "'");
      v.c[i] = static_cast<std::int32_t>(x);
    }
    return v;
  }

  std::string descriptor() const {
    return "lattice(d=" + std::to_string(dim_) + ", generators=" +
           (gens_ == lattice_generators::standard ? "standard" : "king") + ")";
  }

  /// Corners of the unit cube at v, each with the 2^d cells meeting there.
  /// Corner keys are the corner's own integer coordinates ("x y" form), which
  /// every incident cell reproduces identically.
  std::vector<corner_record<vertex_id>> corner_fan(const vertex_id& v) const {
    std::vector<corner_record<vertex_id>> out;
    const int corners = 1 << dim_;
    out.reserve(static_cast<std::size_t>(corners));
    for (int mask = 0; mask < corners; ++mask) {
      corner_record<vertex_id> rec;
      lattice_vertex corner = v;
      for (int i = 0; i < dim_; ++i)
        if (mask & (1 << i)) corner.c[i] += 1;
      rec.corner = print_id(corner);
      rec.tiles.reserve(static_cast<std::size_t>(corners));
      for (int tmask = 0; tmask < corners; ++tmask) {
        lattice_vertex cell = corner;
        for (int i = 0; i < dim_; ++i)
          if (tmask & (1 << i)) cell.c[i] -= 1;
        rec.tiles.push_back(cell);
      }
      out.push_back(std::move(rec));
    }
    return out;
  }

private:
  int dim_;
  lattice_generators gens_;
  std::vector<lattice_vertex> offsets_;

  static vertex_id add(const vertex_id& a, const vertex_id& b) {
    vertex_id r;
    for (int i = 0; i < 4; ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
  }

  void build_offsets() {
    if (gens_ == lattice_generators::standard) {
      for (int i = 0; i < dim_; ++i) {
        lattice_vertex plus{}, minus{};
        plus.c[i] = 1;
        minus.c[i] = -1;
        offsets_.push_back(minus);
        offsets_.push_back(plus);
      }
    } else {
      std::array<std::int32_t, 4> v{};
      build_king(0, v);
    }
    // Canonical neighbor order: lexicographic on the offset tuple.
    std::sort(offsets_.begin(), offsets_.end(),
              [this](const lattice_vertex& a, const lattice_vertex& b) {
                return compare(a, b) < 0;
              });
  }

  void build_king(int i, std::array<std::int32_t, 4>& v) {
    if (i == dim_) {
      bool nonzero = false;
      for (int j = 0; j < dim_; ++j) nonzero |= (v[j] != 0);
      if (nonzero) offsets_.push_back(lattice_vertex{v});
      return;
    }
    for (std::int32_t s : {-1, 0, 1}) {
      v[i] = s;
      build_king(i + 1, v);
    }
    v[i] = 0;
  }
};

static_assert(graph_backend<lattice_graph>);
static_assert(tiling_backend<lattice_graph>);
static_assert(metric_backend<lattice_graph>);

} // namespace edenlab
