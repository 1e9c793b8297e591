// Isoperimetric profiles: exact enumeration against hand-derived values,
// the independent window validator, model fits, the consistency checks,
// and the quasi-isometry comparison.

#include <algorithm>
#include <cstdint>
#include <queue>
#include <vector>

#include <gtest/gtest.h>

#include "edenlab/graph/hyperbolic.hpp"
#include "edenlab/graph/lattice.hpp"
#include "edenlab/graph/ops.hpp"
#include "edenlab/graph/tree.hpp"
#include "edenlab/iso/enumerate.hpp"
#include "edenlab/iso/profile.hpp"
#include "edenlab/iso/qi.hpp"

namespace edenlab {
namespace {

/// A profile witness must have the recorded size, contain the origin, be
/// connected, and reproduce the recorded boundary when recomputed cold.
template <graph_backend G>
void expect_valid_witness(const G& g, const profile_entry<G>& entry, std::size_t n) {
  ASSERT_EQ(entry.witness.size(), n);
  vertex_set<G> members(entry.witness.begin(), entry.witness.end());
  ASSERT_EQ(members.size(), n) << "witness repeats a vertex";
  EXPECT_TRUE(members.contains(g.origin()));

  std::queue<typename G::vertex_id> bfs;
  vertex_set<G> seen;
  bfs.push(entry.witness.front());
  seen.insert(entry.witness.front());
  while (!bfs.empty()) {
    const auto v = bfs.front();
    bfs.pop();
    for (const auto& w : g.neighbors(v)) {
      if (members.contains(w) && seen.insert(w).second) bfs.push(w);
    }
  }
  EXPECT_EQ(seen.size(), n) << "witness is not connected";

  EXPECT_EQ(exterior_boundary(g, entry.witness).size(), entry.boundary);
}

// ---------------------------------------------------------------------------
// Exact profiles against hand-derived values
// ---------------------------------------------------------------------------

TEST(Profile, SquareLatticeExactValues) {
  const lattice_graph z2(2, lattice_generators::standard);
  const auto prof = exact_connected_profile(z2, 5);
  // F(1..5): single cell 4; domino 6; L-tromino 7; 2x2 square 8; plus-pentomino 8.
  const std::vector<std::uint64_t> expected{4, 6, 7, 8, 8};
  EXPECT_EQ(prof.values(), expected);
  for (std::size_t n = 1; n <= 5; ++n) expect_valid_witness(z2, prof.at_size[n - 1], n);
}

TEST(Profile, KingLatticeSmallValues) {
  const lattice_graph king(2, lattice_generators::king);
  const auto prof = exact_connected_profile(king, 3);
  // F(1) = degree 8; straight domino covers a 4x3 block minus itself -> 10;
  // any tromino's Chebyshev-1 neighborhood has at least 12 cells outside it.
  const std::vector<std::uint64_t> expected{8, 10, 12};
  EXPECT_EQ(prof.values(), expected);
  for (std::size_t n = 1; n <= 3; ++n) expect_valid_witness(king, prof.at_size[n - 1], n);
}

TEST(Profile, LineLatticeConstantTwo) {
  const lattice_graph z1(1, lattice_generators::standard);
  const auto prof = exact_connected_profile(z1, 6);
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(prof.value(n), 2u) << "n=" << n;
}

TEST(Profile, TreeMatchesLinearFormula) {
  const tree_graph t3(3);
  const auto prof3 = exact_connected_profile(t3, 10);
  for (std::size_t n = 1; n <= 10; ++n) {
    EXPECT_EQ(prof3.value(n), n + 2) << "n=" << n;  // (d-2)n + 2 with d=3
    expect_valid_witness(t3, prof3.at_size[n - 1], n);
  }

  const tree_graph t4(4);
  const auto prof4 = exact_connected_profile(t4, 6);
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(prof4.value(n), 2 * n + 2) << "n=" << n;
}

TEST(Profile, HeptagonalTilingSmallValues) {
  const hyperbolic_graph h73(7, 3);
  const auto prof = exact_connected_profile(h73, 3);
  // F(1) = 7. Two adjacent heptagons share one edge whose two endpoints each
  // carry one further tile, so |N(a) ∩ N(b)| = 2 and F(2) = 14 - 2 - 2 = 10.
  // Three tiles around a corner are pairwise adjacent with no common fourth
  // neighbor, so F(3) = 21 - 3*2 - 3 = 12.
  const std::vector<std::uint64_t> expected{7, 10, 12};
  EXPECT_EQ(prof.values(), expected);
  for (std::size_t n = 1; n <= 3; ++n) expect_valid_witness(h73, prof.at_size[n - 1], n);
}

// ---------------------------------------------------------------------------
// Enumeration mechanics
// ---------------------------------------------------------------------------

TEST(Profile, EnumerationVisitsEachSubsetExactlyOnce) {
  // Connected subsets of Z^2 containing the origin, by size: 1 singleton,
  // 2 dominoes x 2 translates = 4, 6 trominoes x 3 translates = 18.  With
  // n_max = 3 nothing is pruned, so the node count must be exactly 23.
  const lattice_graph z2(2, lattice_generators::standard);
  const auto prof = exact_connected_profile(z2, 3);
  EXPECT_EQ(prof.nodes_visited, 23u);
}

TEST(Profile, BudgetRefusal) {
  const tree_graph t3(3);
  // Size-20 subtrees number in the billions; a small explicit budget must
  // stop the walk with the budget error rather than attempting it.
  EXPECT_THROW(exact_connected_profile(t3, 20, 20000), limit_error);

  const lattice_graph z2(2, lattice_generators::standard);
  EXPECT_THROW(exact_connected_profile(z2, 0), usage_error);
}

TEST(Profile, WindowExhaustiveAgreesWithConnectedOptimum) {
  // Over all (also disconnected) subsets of a 4x4 window the minimum boundary
  // coincides with the connected optimum for n <= 5: splitting a set only
  // spreads boundary.  This certifies the connected restriction is harmless
  // at these sizes.
  const lattice_graph z2(2, lattice_generators::standard);
  const auto window = window_exhaustive_min_boundary(z2, 4, 5);
  const auto prof = exact_connected_profile(z2, 5);
  ASSERT_EQ(window.size(), 5u);
  for (std::size_t n = 1; n <= 5; ++n) EXPECT_EQ(window[n - 1], prof.value(n)) << "n=" << n;
}

TEST(Profile, WindowExhaustiveRefusals) {
  const lattice_graph z2(2, lattice_generators::standard);
  const lattice_graph z3(3, lattice_generators::standard);
  EXPECT_THROW(window_exhaustive_min_boundary(z3, 3, 2), usage_error);
  EXPECT_THROW(window_exhaustive_min_boundary(z2, 5, 2), limit_error);  // 25 cells
  EXPECT_THROW(window_exhaustive_min_boundary(z2, 4, 0), usage_error);
  EXPECT_THROW(window_exhaustive_min_boundary(z2, 4, 17), usage_error);
}

// ---------------------------------------------------------------------------
// Profile models
// ---------------------------------------------------------------------------

TEST(ProfileModel, LatticeFitRecoversScale) {
  const lattice_graph z2(2, lattice_generators::standard);
  const auto prof = exact_connected_profile(z2, 5);
  const auto m = fit_lattice_model(2, prof.values());
  EXPECT_TRUE(m.has_value);
  EXPECT_FALSE(m.exact);
  EXPECT_DOUBLE_EQ(m.exponent, 0.5);
  EXPECT_DOUBLE_EQ(m.offset, 0.0);
  EXPECT_GT(m.scale, 3.5);  // geometric mean of F(n)/sqrt(n) sits near 4
  EXPECT_LT(m.scale, 4.5);
  EXPECT_NEAR(m.value(4), m.scale * 2.0, 1e-12);
}

TEST(ProfileModel, TreeFormulaIsExact) {
  const auto m = tree_model(3);
  EXPECT_TRUE(m.has_value);
  EXPECT_TRUE(m.exact);
  for (std::uint64_t n = 1; n <= 10; ++n)
    EXPECT_DOUBLE_EQ(m.value(n), static_cast<double>(n + 2));
  EXPECT_THROW(tree_model(2), usage_error);
}

TEST(ProfileModel, NonAmenableHasNoNumericForm) {
  const auto m = nonamenable_model();
  EXPECT_FALSE(m.has_value);
  EXPECT_THROW(m.value(3), usage_error);
}

// ---------------------------------------------------------------------------
// Consistency checks
// ---------------------------------------------------------------------------

TEST(Subadditivity, AcceptsRealProfiles) {
  const lattice_graph z2(2, lattice_generators::standard);
  const auto rep = subadditivity_check(exact_connected_profile(z2, 5).values());
  // Pairs n <= m with n + m <= 5: (1,1)(1,2)(1,3)(1,4)(2,2)(2,3).
  EXPECT_EQ(rep.pairs_checked, 6u);
  // Scalings k >= 2 with k*n <= 5: n=1 k=2..5, n=2 k=2.
  EXPECT_EQ(rep.scalings_checked, 5u);

  const tree_graph t3(3);
  subadditivity_check(exact_connected_profile(t3, 10).values());
  const hyperbolic_graph h73(7, 3);
  subadditivity_check(exact_connected_profile(h73, 3).values());
}

TEST(Subadditivity, FlagsViolations) {
  EXPECT_THROW(subadditivity_check({4, 3}), invariant_error);        // decreasing
  EXPECT_THROW(subadditivity_check({4, 9}), invariant_error);        // F(2) > 2 F(1)
  EXPECT_THROW(subadditivity_check({}), usage_error);
  try {
    subadditivity_check({4, 9});
    FAIL() << "expected invariant_error";
  } catch (const invariant_error& e) {
    EXPECT_NE(std::string(e.what()).find("not subadditive"), std::string::npos);
  }
}

// ---------------------------------------------------------------------------
// Quasi-isometry comparison
// ---------------------------------------------------------------------------

TEST(Qi, StandardVersusKingWithinConstant) {
  const lattice_graph std2(2, lattice_generators::standard);
  const lattice_graph king(2, lattice_generators::king);
  const auto id = [](const lattice_vertex& v) { return v; };
  // The identity is a (2,0)-quasi-isometry: Linf <= L1 <= 2 Linf on Z^2.
  const auto rep = qi_compare(std2, king, id, 2.0, 0.0, 6);
  // With K = 0 both ball factors are 1 and the bound is deg^(C) = 4^2.
  EXPECT_DOUBLE_EQ(rep.bound, 16.0);
  EXPECT_TRUE(rep.within_bound);
  ASSERT_EQ(rep.rows.size(), 6u);
  EXPECT_EQ(rep.rows[0].f_t, 4u);
  EXPECT_EQ(rep.rows[0].f_w, 8u);
  // Empirically the two profiles stay within a factor 2 of each other.
  EXPECT_LE(rep.max_ratio_w_over_t, 2.0 + 1e-12);
  EXPECT_LE(rep.max_ratio_t_over_w, 1.0 + 1e-12);
}

TEST(Qi, RejectsFalseClaimAndBadConstants) {
  const lattice_graph std2(2, lattice_generators::standard);
  const lattice_graph king(2, lattice_generators::king);
  const auto id = [](const lattice_vertex& v) { return v; };
  // Claiming (1,0) asserts Linf = L1, which (1,1) vs the origin refutes.
  EXPECT_THROW(qi_compare(std2, king, id, 1.0, 0.0, 2), usage_error);
  EXPECT_THROW(qi_compare(std2, king, id, 0.5, 0.0, 2), usage_error);
  EXPECT_THROW(qi_compare(std2, king, id, 2.0, -1.0, 2), usage_error);
}

} // namespace
} // namespace edenlab
