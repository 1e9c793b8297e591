// Tests for pattern validation, slice matching, greedy packing, and the
// census scaling experiment.
//
// Fixture derivations (square lattice, L1 metric, standard generators):
//   * B_1 = origin plus the four unit vectors; its sphere is an
//     independent set, so a sphere-only pattern at R = 1 is disconnected.
//   * Punctured B_2 (the 12 cells of B_2 minus the origin) is connected —
//     the diagonal sphere cells attach to the axis cells — and contains
//     the full 8-cell sphere, so it validates with no center.
//   * Strip fixture: cells [-1, 7] x {-1, 0, 1}. A full-B_1 match at
//     (x, 0) needs all four neighbors infected, which holds exactly for
//     x in 0..6: seven collinear matches one apart. Packing blocks 2R = 2
//     around each pick, so the greedy order (distance from origin first)
//     selects x = 0, 3, 6 — three centers, which is also the maximum.
//   * Planted pair: two full B_1 copies centered at (0,0) and (4,0)
//     (distance 4 = 2R + 2) joined through (2,0); the connector is
//     outside both R-balls, so both centers match exactly and both get
//     picked.

#include <gtest/gtest.h>

#include <cmath>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "edenlab/census/census.hpp"
#include "edenlab/census/orbit.hpp"
#include "edenlab/census/pattern.hpp"
#include "edenlab/census/pattern_io.hpp"
#include "edenlab/census/scaling.hpp"
#include "edenlab/core/error.hpp"
#include "edenlab/core/rng.hpp"
#include "edenlab/graph/hyperbolic.hpp"
#include "edenlab/graph/lattice.hpp"
#include "edenlab/graph/ops.hpp"
#include "edenlab/graph/tree.hpp"
#include "edenlab/growth/cluster.hpp"
#include "edenlab/iso/enumerate.hpp"
#include "edenlab/iso/profile.hpp"

namespace edenlab {
namespace {

constexpr std::uint64_t kSeed = 20260822;

lattice_vertex cell(int x, int y) { return lattice_vertex{{x, y, 0, 0}}; }

std::vector<lattice_vertex> ball_cells(const lattice_graph& g, int x, int y,
                                       int r) {
  std::vector<lattice_vertex> out;
  for (const auto& v : ball(g, cell(x, y), r).verts) out.push_back(v);
  return out;
}

/// Builds a cluster_state holding exactly `cells` (must contain the origin
/// and induce a connected subgraph) by infecting along the boundary.
template <class G>
cluster_state<G> make_state(const G& g,
                            const std::vector<typename G::vertex_id>& cells) {
  cluster_state<G> st(g);
  vertex_set<G> want(cells.begin(), cells.end());
  EXPECT_TRUE(want.find(g.origin()) != want.end());
  double clock = 0.0;
  std::size_t remaining = want.size() - 1;
  while (remaining > 0) {
    bool progressed = false;
    const auto& b = st.boundary();
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (want.find(b[i]) != want.end() && !st.contains(b[i])) {
        st.infect_boundary_at(i, clock += 1.0);
        --remaining;
        progressed = true;
        break;  // the boundary array was reshuffled; rescan
      }
    }
    if (!progressed) {
      ADD_FAILURE() << "fixture cells are not connected to the origin";
      break;
    }
  }
  return st;
}

/// Exhaustive maximum packing over all matching centers (fixtures only).
template <class G>
std::uint64_t exhaustive_max_packing(const G& g, const cluster_state<G>& state,
                                     const pattern_spec<G>& spec) {
  std::vector<typename G::vertex_id> matches;
  for (const auto& v : candidate_centers(g, state, spec.radius))
    if (match_at(g, state, spec, v)) matches.push_back(v);
  const std::size_t n = matches.size();
  if (n > 20) {
    ADD_FAILURE() << "fixture too large for the exhaustive oracle: " << n;
    return 0;
  }

  std::vector<std::uint32_t> conflict(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    vertex_set<G> near;
    for (const auto& u : ball(g, matches[i], 2 * spec.radius).verts)
      near.insert(u);
    for (std::size_t j = 0; j < n; ++j)
      if (j != i && near.find(matches[j]) != near.end())
        conflict[i] |= 1u << j;
  }
  std::function<std::uint64_t(std::uint32_t)> best =
      [&](std::uint32_t avail) -> std::uint64_t {
    if (avail == 0) return 0;
    const int i = __builtin_ctz(avail);
    const std::uint32_t rest = avail & ~(1u << i);
    const std::uint64_t skip = best(rest);
    const std::uint64_t take = 1 + best(rest & ~conflict[i]);
    return skip > take ? skip : take;
  };
  return best(n == 0 ? 0u : (1u << n) - 1u);
}

TEST(Pattern, FullBallValidates) {
  const lattice_graph z2(2, lattice_generators::standard);
  const auto spec = validate_pattern(z2, ball_cells(z2, 0, 0, 1), 1);
  EXPECT_EQ(spec.radius, 1);
  EXPECT_EQ(spec.cells.size(), 5u);
  EXPECT_TRUE(spec.contains_center);
}

TEST(Pattern, SphereOnlyAtRadiusOneIsDisconnected) {
  // The L1 unit sphere {(+-1,0),(0,+-1)} is an independent set.
  const lattice_graph z2(2, lattice_generators::standard);
  const std::vector<lattice_vertex> sphere{cell(1, 0), cell(-1, 0), cell(0, 1),
                                           cell(0, -1)};
  try {
    validate_pattern(z2, sphere, 1);
    FAIL() << "expected usage_error";
  } catch (const usage_error& e) {
    EXPECT_NE(std::string(e.what()).find("not-connected"), std::string::npos);
  }
}

TEST(Pattern, PuncturedBallValidatesWithoutCenter) {
  const lattice_graph z2(2, lattice_generators::standard);
  std::vector<lattice_vertex> cells;
  for (const auto& v : ball_cells(z2, 0, 0, 2))
    if (!(v == cell(0, 0))) cells.push_back(v);
  const auto spec = validate_pattern(z2, cells, 2);
  EXPECT_EQ(spec.cells.size(), 12u);
  EXPECT_FALSE(spec.contains_center);
}

TEST(Pattern, NamesTheViolatedHypothesis) {
  const lattice_graph z2(2, lattice_generators::standard);
  try {  // a cell outside the ball
    validate_pattern(z2, {cell(0, 0), cell(3, 0)}, 2);
    FAIL() << "expected usage_error";
  } catch (const usage_error& e) {
    EXPECT_NE(std::string(e.what()).find("not-in-ball"), std::string::npos);
  }
  try {  // full ball minus one sphere vertex
    std::vector<lattice_vertex> cells;
    for (const auto& v : ball_cells(z2, 0, 0, 1))
      if (!(v == cell(1, 0))) cells.push_back(v);
    validate_pattern(z2, cells, 1);
    FAIL() << "expected usage_error";
  } catch (const usage_error& e) {
    EXPECT_NE(std::string(e.what()).find("missing-sphere"), std::string::npos);
  }
}

TEST(Pattern, RejectsDegenerateInput) {
  const lattice_graph z2(2, lattice_generators::standard);
  EXPECT_THROW(validate_pattern(z2, {}, 1), usage_error);
  EXPECT_THROW(validate_pattern(z2, {cell(0, 0), cell(0, 0)}, 1), usage_error);
  EXPECT_THROW(validate_pattern(z2, {cell(0, 0)}, -1), usage_error);
  EXPECT_THROW(validate_pattern(z2, {cell(0, 0)}, 9), limit_error);
  EXPECT_THROW(validate_pattern(z2, {cell(1, 0)}, 0), usage_error);  // not-in-ball
}

TEST(Pattern, RadiusZeroIsTheSingleton) {
  const lattice_graph z2(2, lattice_generators::standard);
  const auto spec = validate_pattern(z2, {cell(0, 0)}, 0);
  EXPECT_EQ(spec.cells.size(), 1u);
  EXPECT_TRUE(spec.contains_center);
}

TEST(Pattern, HeptagonRingValidates) {
  // On the {7,3} tiling the radius-1 sphere is a 7-cycle: connected, so
  // the punctured ball is a legal pattern there (unlike on the lattice).
  const hyperbolic_graph h73(7, 3);
  const auto ring = h73.neighbors(h73.origin());
  const auto spec = validate_pattern(h73, ring, 1);
  EXPECT_EQ(spec.cells.size(), 7u);
  EXPECT_FALSE(spec.contains_center);
}

TEST(Pattern, JsonRoundTripPreservesTheSpec) {
  const lattice_graph z2(2, lattice_generators::standard);
  std::vector<lattice_vertex> cells;
  for (const auto& v : ball_cells(z2, 0, 0, 2))
    if (!(v == cell(0, 0))) cells.push_back(v);
  const auto spec = validate_pattern(z2, cells, 2);
  const std::string text = pattern_to_json(z2, spec);
  const auto back = pattern_from_json(z2, text);
  EXPECT_EQ(back.radius, spec.radius);
  EXPECT_EQ(back.cells, spec.cells);
  EXPECT_EQ(back.contains_center, spec.contains_center);
}

TEST(Pattern, JsonRejectsMalformedAndMismatchedFiles) {
  const lattice_graph z2(2, lattice_generators::standard);
  EXPECT_THROW(pattern_from_json(z2, "not json"), usage_error);
  EXPECT_THROW(pattern_from_json(z2, "{\"radius\": 1}"), usage_error);
  EXPECT_THROW(pattern_from_json(z2, "{\"radius\": 1, \"cells\": []}"),
               usage_error);
  EXPECT_THROW(
      pattern_from_json(z2, "{\"radius\": 1, \"cells\": [17]}"), usage_error);
  EXPECT_THROW(
      pattern_from_json(
          z2, "{\"radius\": 0, \"cells\": [\"0 0\"], \"graph\": \"tree(degree=3)\"}"),
      usage_error);
  EXPECT_THROW(pattern_from_file(z2, "/nonexistent/pattern.json"), usage_error);
}

TEST(Match, FarFromClusterIsFalse) {
  const lattice_graph z2(2, lattice_generators::standard);
  const auto spec = validate_pattern(z2, ball_cells(z2, 0, 0, 1), 1);
  const auto st = make_state(z2, ball_cells(z2, 0, 0, 1));
  EXPECT_FALSE(match_at(z2, st, spec, cell(10, 10)));
}

TEST(Match, ExactSliceIsTrueAndNeighborsAreFalse) {
  const lattice_graph z2(2, lattice_generators::standard);
  const auto spec = validate_pattern(z2, ball_cells(z2, 0, 0, 1), 1);
  // Copy of B_1 planted at (3,0), tethered to the origin through the axis.
  std::vector<lattice_vertex> cells = ball_cells(z2, 3, 0, 1);
  cells.push_back(cell(1, 0));
  cells.push_back(cell(0, 0));
  const auto st = make_state(z2, cells);
  EXPECT_TRUE(match_at(z2, st, spec, cell(3, 0)));
  EXPECT_FALSE(match_at(z2, st, spec, cell(2, 0)));
  EXPECT_FALSE(match_at(z2, st, spec, cell(0, 0)));
}

TEST(Candidates, ShellCountsMatchBallVolumes) {
  const lattice_graph z2(2, lattice_generators::standard);
  const cluster_state<lattice_graph> single(z2);
  EXPECT_EQ(candidate_centers(z2, single, 1).size(), 5u);
  EXPECT_EQ(candidate_centers(z2, single, 0).size(), 1u);
  EXPECT_EQ(candidate_centers(z2, single, 0).front(), z2.origin());

  const tree_graph t3(3);
  const cluster_state<tree_graph> root(t3);
  EXPECT_EQ(candidate_centers(t3, root, 2).size(), 10u);  // 1 + 3 + 6
}

TEST(Candidates, CoverEveryVertexWithinRangeOfTheCluster) {
  const lattice_graph z2(2, lattice_generators::standard);
  std::vector<lattice_vertex> strip;
  for (int x = -1; x <= 7; ++x)
    for (int y = -1; y <= 1; ++y) strip.push_back(cell(x, y));
  const auto st = make_state(z2, strip);

  vertex_set<lattice_graph> expected;
  for (const auto& a : strip)
    for (const auto& v : ball(z2, a, 1).verts) expected.insert(v);

  const auto got = candidate_centers(z2, st, 1);
  EXPECT_EQ(got.size(), expected.size());
  for (const auto& v : got) EXPECT_TRUE(expected.find(v) != expected.end());
  // Deterministic order: nondecreasing distance from the origin.
  for (std::size_t i = 1; i < got.size(); ++i)
    EXPECT_LE(z2.distance(z2.origin(), got[i - 1]),
              z2.distance(z2.origin(), got[i]));
}

TEST(Census, EmptyMatchSetGivesZero) {
  const lattice_graph z2(2, lattice_generators::standard);
  const auto spec = validate_pattern(z2, ball_cells(z2, 0, 0, 1), 1);
  const cluster_state<lattice_graph> single(z2);  // lone origin, no full ball
  const auto result = greedy_census(z2, single, spec);
  EXPECT_EQ(result.count(), 0u);
  EXPECT_EQ(result.cluster_size, 1u);
}

TEST(Census, SingleExactCopyGivesOne) {
  const lattice_graph z2(2, lattice_generators::standard);
  const auto spec = validate_pattern(z2, ball_cells(z2, 0, 0, 1), 1);
  const auto st = make_state(z2, ball_cells(z2, 0, 0, 1));
  const auto result = greedy_census(z2, st, spec);
  ASSERT_EQ(result.count(), 1u);
  EXPECT_EQ(result.centers.front(), cell(0, 0));
}

TEST(Census, PlantedPairAtSeparationTwoRPlusTwoGivesTwo) {
  const lattice_graph z2(2, lattice_generators::standard);
  const auto spec = validate_pattern(z2, ball_cells(z2, 0, 0, 1), 1);
  std::vector<lattice_vertex> cells = ball_cells(z2, 0, 0, 1);
  for (const auto& v : ball_cells(z2, 4, 0, 1)) cells.push_back(v);
  cells.push_back(cell(2, 0));
  const auto st = make_state(z2, cells);
  const auto result = greedy_census(z2, st, spec);
  ASSERT_EQ(result.count(), 2u);
  EXPECT_EQ(result.centers[0], cell(0, 0));
  EXPECT_EQ(result.centers[1], cell(4, 0));
  EXPECT_EQ(exhaustive_max_packing(z2, st, spec), 2u);
}

TEST(Census, StripPackingMatchesTheExhaustiveOracle) {
  const lattice_graph z2(2, lattice_generators::standard);
  const auto spec = validate_pattern(z2, ball_cells(z2, 0, 0, 1), 1);
  std::vector<lattice_vertex> strip;
  for (int x = -1; x <= 7; ++x)
    for (int y = -1; y <= 1; ++y) strip.push_back(cell(x, y));
  const auto st = make_state(z2, strip);

  const auto result = greedy_census(z2, st, spec);
  // Seven matches at (0..6, 0); greedy picks 0, 3, 6.
  ASSERT_EQ(result.count(), 3u);
  EXPECT_EQ(result.centers[0], cell(0, 0));
  EXPECT_EQ(result.centers[1], cell(3, 0));
  EXPECT_EQ(result.centers[2], cell(6, 0));

  const std::uint64_t max_packing = exhaustive_max_packing(z2, st, spec);
  EXPECT_EQ(max_packing, 3u);
  // Pigeonhole dominance: greedy >= maximum / d^(2R+1).
  const double dominance = 1.0 / std::pow(static_cast<double>(z2.degree()),
                                          2.0 * spec.radius + 1.0);
  EXPECT_GE(static_cast<double>(result.count()),
            static_cast<double>(max_packing) * dominance);
}

TEST(Census, PuncturedPatternFindsAHole) {
  const lattice_graph z2(2, lattice_generators::standard);
  std::vector<lattice_vertex> pattern;
  for (const auto& v : ball_cells(z2, 0, 0, 2))
    if (!(v == cell(0, 0))) pattern.push_back(v);
  const auto spec = validate_pattern(z2, pattern, 2);

  // Ring of B_2 around (4,0) — the hole — tethered through (2,0), (1,0).
  std::vector<lattice_vertex> cells{cell(0, 0), cell(1, 0)};
  for (const auto& v : ball_cells(z2, 4, 0, 2))
    if (!(v == cell(4, 0))) cells.push_back(v);
  const auto st = make_state(z2, cells);
  EXPECT_FALSE(st.contains(cell(4, 0)));

  const auto result = greedy_census(z2, st, spec);
  ASSERT_EQ(result.count(), 1u);
  EXPECT_EQ(result.centers.front(), cell(4, 0));
}

TEST(Census, RepeatedRunsAreIdentical) {
  const lattice_graph z2(2, lattice_generators::standard);
  const auto spec = validate_pattern(z2, ball_cells(z2, 0, 0, 1), 1);
  std::vector<lattice_vertex> strip;
  for (int x = -1; x <= 7; ++x)
    for (int y = -1; y <= 1; ++y) strip.push_back(cell(x, y));
  const auto st = make_state(z2, strip);
  const auto a = greedy_census(z2, st, spec);
  const auto b = greedy_census(z2, st, spec);
  EXPECT_EQ(a.centers, b.centers);
}

TEST(CensusScaling, LatticeStructureAndDeterminism) {
  const lattice_graph z2(2, lattice_generators::standard);
  const auto spec = validate_pattern(z2, ball_cells(z2, 0, 0, 1), 1);
  const auto profile = exact_connected_profile(z2, 8);
  std::vector<std::uint64_t> fs;
  for (std::size_t n = 1; n <= 8; ++n) fs.push_back(profile.value(n));
  const auto proxy = fit_lattice_model(2, fs);

  const auto run = census_scaling_experiment(z2, spec, proxy, {60, 240}, 3, kSeed);
  ASSERT_EQ(run.rows.size(), 6u);
  ASSERT_EQ(run.per_size.size(), 2u);
  EXPECT_FALSE(run.proxy_flagged);
  EXPECT_GT(run.per_size[0].median_count, 0.0);
  EXPECT_GT(run.per_size[1].median_count, run.per_size[0].median_count);
  EXPECT_TRUE(run.has_exponent);
  EXPECT_GT(run.exponent, 0.0);
  for (const auto& row : run.rows) {
    EXPECT_GT(row.profile_value, 0.0);
    EXPECT_NEAR(row.ratio, row.count / row.profile_value, 1e-12);
  }

  const auto rerun = census_scaling_experiment(z2, spec, proxy, {60, 240}, 3, kSeed);
  ASSERT_EQ(rerun.rows.size(), run.rows.size());
  for (std::size_t i = 0; i < run.rows.size(); ++i) {
    EXPECT_EQ(rerun.rows[i].count, run.rows[i].count);
    EXPECT_EQ(rerun.rows[i].seed, run.rows[i].seed);
  }
}

TEST(CensusScaling, TreeCountsGrowWithSize) {
  const tree_graph t3(3);
  std::vector<tree_graph::vertex_id> b1{t3.origin()};
  for (const auto& v : t3.neighbors(t3.origin())) b1.push_back(v);
  const auto spec = validate_pattern(t3, b1, 1);
  const auto proxy = tree_model(3);
  const auto run = census_scaling_experiment(t3, spec, proxy, {80, 320}, 3, kSeed);
  EXPECT_FALSE(run.proxy_flagged);
  EXPECT_GT(run.per_size[0].median_count, 0.0);
  EXPECT_GT(run.per_size[1].median_count, run.per_size[0].median_count);
}

TEST(CensusScaling, NonamenableProxyIsFlagged) {
  const hyperbolic_graph h73(7, 3);
  const auto spec = validate_pattern(h73, h73.neighbors(h73.origin()), 1);
  const auto run = census_scaling_experiment(h73, spec, nonamenable_model(),
                                             {20, 40}, 2, kSeed);
  EXPECT_TRUE(run.proxy_flagged);
  ASSERT_EQ(run.rows.size(), 4u);
  for (const auto& row : run.rows)
    EXPECT_EQ(row.profile_value, static_cast<double>(row.target_size));
}

TEST(Orbit, SymmetricPatternsHaveSingletonOrbits) {
  const lattice_graph z2(2, lattice_generators::standard);
  const auto full = validate_pattern(z2, ball_cells(z2, 0, 0, 1), 1);
  EXPECT_EQ(pattern_orbit(z2, full).size(), 1u);

  std::vector<lattice_vertex> punctured;
  for (const auto& v : ball_cells(z2, 0, 0, 2))
    if (!(v == cell(0, 0))) punctured.push_back(v);
  const auto ring = validate_pattern(z2, punctured, 2);
  EXPECT_EQ(pattern_orbit(z2, ring).size(), 1u);
}

TEST(Orbit, OffAxisHoleHasFourImages) {
  // B_3 minus the interior cell (1,1): the hole position determines the
  // image, and the signed permutations carry (1,1) to the four cells
  // (+-1, +-1), so the orbit has exactly four members.
  const lattice_graph z2(2, lattice_generators::standard);
  std::vector<lattice_vertex> cells;
  for (const auto& v : ball_cells(z2, 0, 0, 3))
    if (!(v == cell(1, 1))) cells.push_back(v);
  const auto spec = validate_pattern(z2, cells, 3);
  const auto orbit = pattern_orbit(z2, spec);
  ASSERT_EQ(orbit.size(), 4u);
  bool has_original = false;
  for (const auto& image : orbit) {
    EXPECT_EQ(image.radius, 3);
    EXPECT_EQ(image.cells.size(), spec.cells.size());
    if (image.cells == spec.cells) has_original = true;
  }
  EXPECT_TRUE(has_original);
}

TEST(Orbit, TreePatternsAreRigid) {
  const tree_graph t3(3);
  std::vector<tree_graph::vertex_id> cells;
  for (const auto& v : ball(t3, t3.origin(), 2).verts) cells.push_back(v);
  const auto spec = validate_pattern(t3, cells, 2);
  EXPECT_EQ(pattern_orbit(t3, spec).size(), 1u);
}

TEST(Orbit, HeptagonRotationsActOnPatterns) {
  const hyperbolic_graph h73(7, 3);
  const auto nbrs = h73.neighbors(h73.origin());
  for (int k = 0; k < 7; ++k)
    EXPECT_EQ(h73.rotate_about_origin(h73.origin(), k), h73.origin());
  EXPECT_EQ(h73.rotate_about_origin(nbrs[0], 0), nbrs[0]);

  // The rotation acts simply transitively on the ring of neighbors.
  std::set<std::string> images;
  for (int k = 0; k < 7; ++k) images.insert(h73.rotate_about_origin(nbrs[0], k));
  EXPECT_EQ(images.size(), 7u);
  EXPECT_EQ(images, std::set<std::string>(nbrs.begin(), nbrs.end()));

  const auto ring = validate_pattern(h73, nbrs, 1);
  EXPECT_EQ(pattern_orbit(h73, ring).size(), 1u);

  // Puncture one ring tile out of B_2: seven rotated images, all distinct.
  const auto b2 = ball(h73, h73.origin(), 2);
  std::vector<hyperbolic_graph::vertex_id> cells;
  for (const auto& v : b2.verts)
    if (!(v == nbrs[0])) cells.push_back(v);
  const auto spec = validate_pattern(h73, cells, 2);
  EXPECT_EQ(spec.cells.size(), b2.verts.size() - 1);
  EXPECT_EQ(pattern_orbit(h73, spec).size(), 7u);
}

TEST(Orbit, RotatedLatticeCopyMatchesOnlyInOrbitMode) {
  const lattice_graph z2(2, lattice_generators::standard);
  std::vector<lattice_vertex> pattern;
  for (const auto& v : ball_cells(z2, 0, 0, 3))
    if (!(v == cell(1, 1))) pattern.push_back(v);
  const auto spec = validate_pattern(z2, pattern, 3);

  // The grown shape has its hole at (-1,1): a quarter turn of the pattern.
  std::vector<lattice_vertex> cells;
  for (const auto& v : ball_cells(z2, 0, 0, 3))
    if (!(v == cell(-1, 1))) cells.push_back(v);
  const auto st = make_state(z2, cells);

  EXPECT_EQ(greedy_census(z2, st, spec).count(), 0u);
  const auto orbit = pattern_orbit(z2, spec);
  const auto result = greedy_census(z2, st, orbit);
  ASSERT_EQ(result.count(), 1u);
  EXPECT_EQ(result.centers.front(), cell(0, 0));
}

TEST(Orbit, RotatedHeptagonCopyMatchesOnlyInOrbitMode) {
  const hyperbolic_graph h73(7, 3);
  const auto nbrs = h73.neighbors(h73.origin());
  const auto b2 = ball(h73, h73.origin(), 2);
  const auto w0 = nbrs[0];
  const auto w1 = h73.rotate_about_origin(w0, 2);
  ASSERT_NE(w0, w1);

  std::vector<hyperbolic_graph::vertex_id> pattern, cluster;
  for (const auto& v : b2.verts) {
    if (!(v == w0)) pattern.push_back(v);
    if (!(v == w1)) cluster.push_back(v);
  }
  const auto spec = validate_pattern(h73, pattern, 2);
  const auto st = make_state(h73, cluster);

  EXPECT_EQ(greedy_census(h73, st, spec).count(), 0u);
  const auto result = greedy_census(h73, st, pattern_orbit(h73, spec));
  ASSERT_EQ(result.count(), 1u);
  EXPECT_EQ(result.centers.front(), h73.origin());
}

TEST(Orbit, ScalingInOrbitModeMatchesTransportedOnSymmetricPatterns) {
  const lattice_graph z2(2, lattice_generators::standard);
  const auto spec = validate_pattern(z2, ball_cells(z2, 0, 0, 1), 1);
  const auto profile = exact_connected_profile(z2, 8);
  std::vector<std::uint64_t> fs;
  for (std::size_t n = 1; n <= 8; ++n) fs.push_back(profile.value(n));
  const auto proxy = fit_lattice_model(2, fs);
  const auto a = census_scaling_experiment(z2, spec, proxy, {60}, 2, kSeed,
                                           match_mode::transported);
  const auto b = census_scaling_experiment(z2, spec, proxy, {60}, 2, kSeed,
                                           match_mode::orbit);
  ASSERT_EQ(a.rows.size(), b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i)
    EXPECT_EQ(a.rows[i].count, b.rows[i].count);
}

TEST(CensusScaling, RejectsBadPlans) {
  const lattice_graph z2(2, lattice_generators::standard);
  const auto spec = validate_pattern(z2, ball_cells(z2, 0, 0, 1), 1);
  const auto proxy = tree_model(3);
  EXPECT_THROW(census_scaling_experiment(z2, spec, proxy, {}, 2, kSeed),
               usage_error);
  EXPECT_THROW(census_scaling_experiment(z2, spec, proxy, {10, 10}, 2, kSeed),
               usage_error);
  EXPECT_THROW(census_scaling_experiment(z2, spec, proxy, {0, 10}, 2, kSeed),
               usage_error);
  EXPECT_THROW(census_scaling_experiment(z2, spec, proxy, {10, 20}, 0, kSeed),
               usage_error);
}

}  // namespace
}  // namespace edenlab
