// Lattice backend: neighborhood structure, metric, transport, corners, and
// the ball-volume bound.
//
// Closed-form oracles used here:
//   Z^1 standard: |B_r| = 2r+1
//   Z^2 standard: |B_r| = 2r^2 + 2r + 1   (L1 ball)
//   Z^2 king:     |B_r| = (2r+1)^2        (Linf ball)

#include <gtest/gtest.h>

#include "edenlab/graph/lattice.hpp"
#include "edenlab/graph/ops.hpp"

namespace el = edenlab;
using el::lattice_generators;

namespace {

el::lattice_vertex lv(std::int32_t x, std::int32_t y = 0, std::int32_t z = 0,
                      std::int32_t w = 0) {
  return el::lattice_vertex{{x, y, z, w}};
}

} // namespace

TEST(Lattice, DegreeAndNeighborsAreCanonical) {
  const el::lattice_graph z2(2, lattice_generators::standard);
  EXPECT_EQ(z2.degree(), 4);
  const auto nbrs = z2.neighbors(z2.origin());
  ASSERT_EQ(nbrs.size(), 4u);
  // Lexicographic offset order: (-1,0), (0,-1), (0,1), (1,0).
  EXPECT_EQ(nbrs[0], lv(-1, 0));
  EXPECT_EQ(nbrs[1], lv(0, -1));
  EXPECT_EQ(nbrs[2], lv(0, 1));
  EXPECT_EQ(nbrs[3], lv(1, 0));

  const el::lattice_graph king(2, lattice_generators::king);
  EXPECT_EQ(king.degree(), 8);
  const el::lattice_graph z3(3, lattice_generators::king);
  EXPECT_EQ(z3.degree(), 26);
}

TEST(Lattice, BallVolumesMatchClosedForms) {
  const el::lattice_graph z1(1, lattice_generators::standard);
  const el::lattice_graph z2(2, lattice_generators::standard);
  const el::lattice_graph king(2, lattice_generators::king);
  const auto g1 = el::growth_function(z1, 4);
  const auto g2 = el::growth_function(z2, 4);
  const auto gk = el::growth_function(king, 4);
  for (int r = 0; r <= 4; ++r) {
    EXPECT_EQ(g1[r], static_cast<std::uint64_t>(2 * r + 1));
    EXPECT_EQ(g2[r], static_cast<std::uint64_t>(2 * r * r + 2 * r + 1));
    EXPECT_EQ(gk[r], static_cast<std::uint64_t>((2 * r + 1) * (2 * r + 1)));
  }
  EXPECT_EQ(g2[1], 5u);  // B_1 in Z^2: origin + 4 neighbors
}

TEST(Lattice, SphereSizesAreBaseIndependent) {
  // Vertex-transitivity: layer sizes around any base vertex match those
  // around the origin (checked to distance 6).
  const el::lattice_graph z2(2, lattice_generators::standard);
  const auto b0 = el::ball(z2, z2.origin(), 6);
  const auto bv = el::ball(z2, lv(3, -2), 6);
  for (int r = 0; r <= 6; ++r) {
    EXPECT_EQ(b0.layer_start[r + 1] - b0.layer_start[r],
              bv.layer_start[r + 1] - bv.layer_start[r])
        << "r=" << r;
  }
}

TEST(Lattice, DistanceMatchesBfs) {
  const el::lattice_graph z2(2, lattice_generators::standard);
  const el::lattice_graph king(2, lattice_generators::king);
  for (const auto& g : {z2, king}) {
    for (std::int32_t x = -2; x <= 2; ++x) {
      for (std::int32_t y = -2; y <= 2; ++y) {
        const auto d = g.distance(g.origin(), lv(x, y));
        const auto bfs = el::distance_within(g, g.origin(), lv(x, y), 10);
        ASSERT_TRUE(bfs.has_value());
        EXPECT_EQ(d, *bfs) << g.descriptor() << " (" << x << "," << y << ")";
      }
    }
  }
}

TEST(Lattice, TransportIsDistancePreservingOnB3) {
  const el::lattice_graph z2(2, lattice_generators::standard);
  const auto b3 = el::ball(z2, z2.origin(), 3);
  const auto base = lv(5, -7);
  EXPECT_EQ(z2.transport(base, z2.origin()), base);
  for (std::size_t i = 0; i < b3.verts.size(); i += 3) {
    for (std::size_t j = i + 1; j < b3.verts.size(); j += 5) {
      const auto& a = b3.verts[i];
      const auto& b = b3.verts[j];
      EXPECT_EQ(z2.distance(a, b),
                z2.distance(z2.transport(base, a), z2.transport(base, b)));
    }
  }
}

TEST(Lattice, PrintParseRoundTrip) {
  const el::lattice_graph z3(3, lattice_generators::standard);
  const auto v = lv(12, -7, 3);
  EXPECT_EQ(z3.print_id(v), "12 -7 3");
  EXPECT_EQ(z3.parse_id("12 -7 3"), v);
  EXPECT_THROW(z3.parse_id("1 2"), el::usage_error);
  EXPECT_THROW(z3.parse_id("1 2 x"), el::usage_error);
}

TEST(Lattice, DimensionCap) {
  EXPECT_THROW(el::lattice_graph(0, lattice_generators::standard), el::limit_error);
  EXPECT_THROW(el::lattice_graph(5, lattice_generators::standard), el::limit_error);
}

TEST(Lattice, CornerFanStructure) {
  const el::lattice_graph z2(2, lattice_generators::standard);
  const auto fan = z2.corner_fan(z2.origin());
  ASSERT_EQ(fan.size(), 4u);  // 4 corners of the unit square
  for (const auto& rec : fan) {
    EXPECT_EQ(rec.tiles.size(), 4u);  // 2^d cells meet at each corner
    // The owning cell is among the corner's tiles.
    bool found = false;
    for (const auto& t : rec.tiles) found |= (t == z2.origin());
    EXPECT_TRUE(found);
  }
  // Horizontally adjacent cells share exactly two corner keys.
  const auto fan_right = z2.corner_fan(lv(1, 0));
  int shared = 0;
  for (const auto& a : fan)
    for (const auto& b : fan_right) shared += (a.corner == b.corner);
  EXPECT_EQ(shared, 2);
}

TEST(Lattice, BallVolumeBoundHoldsToRadius8) {
  for (auto gens : {lattice_generators::standard, lattice_generators::king}) {
    for (int d = 1; d <= 3; ++d) {
      const el::lattice_graph g(d, gens);
      for (const auto& row : el::ball_volume_bound_check(g, 8)) {
        EXPECT_TRUE(row.ok) << g.descriptor() << " radius " << row.radius;
      }
    }
  }
}
