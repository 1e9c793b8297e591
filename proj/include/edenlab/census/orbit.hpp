#pragma once
// Orbit-closure matching: accept a slice equal to ANY image of the pattern
// under the ambient symmetries fixing the match center, not only the
// transported copy itself.
//
// The stabilizer of a center v is the transport conjugate of the origin
// stabilizer, so the orbit is computed once at the origin; each image is
// then matched with the ordinary transported-equality test.
//
// Per backend:
//   * lattice (standard and king generators): the origin stabilizer is the
//     hyperoctahedral group of signed coordinate permutations (2^d * d!
//     elements); both generating sets are invariant under all of them, so
//     the enumerated orbit is complete.
//   * tree: every valid pattern IS the full ball — sphere containment plus
//     connectedness force every ancestor of a sphere vertex into S, the
//     root included — and the full ball is fixed by every root-fixing
//     automorphism, so the orbit is the pattern alone.
//   * hyperbolic dual: the p rotations about the origin tile, which are
//     the origin-fixing symmetries reachable in the coset representation.
//     Mirror images are not reachable, so orbit matching is complete up to
//     chirality: a reflected copy is found only when some rotation already
//     equals it.

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "edenlab/census/pattern.hpp"
#include "edenlab/core/error.hpp"
#include "edenlab/graph/hyperbolic.hpp"
#include "edenlab/graph/lattice.hpp"
#include "edenlab/graph/ops.hpp"
#include "edenlab/graph/tree.hpp"

namespace edenlab {

/// How a census accepts a slice: the transported pattern only, or any
/// stabilizer image of it.
enum class match_mode { transported, orbit };

inline const char* match_mode_name(match_mode m) {
  return m == match_mode::transported ? "transported" : "orbit";
}

inline match_mode parse_match_mode(const std::string& s) {
  if (s == "transported") return match_mode::transported;
  if (s == "orbit") return match_mode::orbit;
  throw usage_error("unknown match mode '" + s +
                    "' (expected transported|orbit)");
}

namespace detail {

/// Dedups raw image cell lists and re-validates each one: a stabilizer
/// image of a valid pattern must itself satisfy every pattern hypothesis,
/// so a validation failure here is a bug in the orbit enumeration.
template <graph_backend G>
std::vector<pattern_spec<G>> finalize_orbit(
    const G& g, int radius,
    std::vector<std::vector<typename G::vertex_id>> raw) {
  for (auto& cells : raw)
    std::sort(cells.begin(), cells.end(),
              [&](const auto& a, const auto& b) { return g.compare(a, b) < 0; });
  const auto cell_less = [&](const auto& a, const auto& b) {
    return std::lexicographical_compare(
        a.begin(), a.end(), b.begin(), b.end(),
        [&](const auto& x, const auto& y) { return g.compare(x, y) < 0; });
  };
  const auto cell_eq = [&](const auto& a, const auto& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (g.compare(a[i], b[i]) != 0) return false;
    return true;
  };
  std::sort(raw.begin(), raw.end(), cell_less);
  raw.erase(std::unique(raw.begin(), raw.end(), cell_eq), raw.end());

  std::vector<pattern_spec<G>> out;
  out.reserve(raw.size());
  for (const auto& cells : raw) {
    try {
      out.push_back(validate_pattern(g, cells, radius));
    } catch (const usage_error& e) {
      throw invariant_error(
          std::string("pattern orbit image violates the pattern hypotheses: ") +
          e.what());
    }
  }
  return out;
}

}  // namespace detail

/// Orbit of a lattice pattern under the full hyperoctahedral stabilizer.
inline std::vector<pattern_spec<lattice_graph>> pattern_orbit(
    const lattice_graph& g, const pattern_spec<lattice_graph>& spec) {
  const int d = g.dimension();
  std::vector<int> perm(static_cast<std::size_t>(d));
  std::iota(perm.begin(), perm.end(), 0);

  std::vector<std::vector<lattice_vertex>> raw;
  do {
    for (int signs = 0; signs < (1 << d); ++signs) {
      std::vector<lattice_vertex> cells;
      cells.reserve(spec.cells.size());
      for (const auto& v : spec.cells) {
        lattice_vertex w{};
        for (int i = 0; i < d; ++i) {
          const std::int32_t x = v.c[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
          w.c[static_cast<std::size_t>(i)] = ((signs >> i) & 1) ? -x : x;
        }
        cells.push_back(w);
      }
      raw.push_back(std::move(cells));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return detail::finalize_orbit(g, spec.radius, std::move(raw));
}

/// Orbit of a tree pattern: the pattern alone. A valid pattern contains
/// the whole sphere and is connected, which on a tree forces every
/// ancestor of every sphere vertex into S — so S is the full ball, fixed
/// by the entire root stabilizer.
inline std::vector<pattern_spec<tree_graph>> pattern_orbit(
    const tree_graph& g, const pattern_spec<tree_graph>& spec) {
  const auto full = ball(g, g.origin(), spec.radius);
  if (spec.cells.size() != full.verts.size())
    throw invariant_error(
        "pattern_orbit: a validated tree pattern must be the full ball");
  return {spec};
}

/// Orbit of a hyperbolic pattern under the p rotations about the origin
/// tile (the reachable part of the stabilizer; see the header comment).
inline std::vector<pattern_spec<hyperbolic_graph>> pattern_orbit(
    const hyperbolic_graph& g, const pattern_spec<hyperbolic_graph>& spec) {
  std::vector<std::vector<hyperbolic_graph::vertex_id>> raw;
  for (int k = 0; k < g.degree(); ++k) {
    std::vector<hyperbolic_graph::vertex_id> cells;
    cells.reserve(spec.cells.size());
    for (const auto& v : spec.cells)
      cells.push_back(g.rotate_about_origin(v, k));
    raw.push_back(std::move(cells));
  }
  return detail::finalize_orbit(g, spec.radius, std::move(raw));
}

/// The image list a census should match against under the given mode.
template <graph_backend G>
std::vector<pattern_spec<G>> pattern_images(const G& g,
                                            const pattern_spec<G>& spec,
                                            match_mode mode) {
  if (mode == match_mode::transported) return {spec};
  return pattern_orbit(g, spec);
}

}  // namespace edenlab
