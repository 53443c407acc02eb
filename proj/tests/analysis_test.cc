// Copyright 2026 The gngshape Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "gngshape/analysis.h"

#include <algorithm>
#include <numbers>
#include <numeric>
#include <sstream>

#include <gtest/gtest.h>

#include "gngshape/error.h"
#include "gngshape/random.h"
#include "gngshape/synth.h"
#include "test_util.h"
#include "walk_oracle.h"

namespace gngshape {
namespace {

using testing::AddEdge;
using testing::MakeGraph;

GngGraph Grid3x3() {
  std::vector<Point2> pos;
  for (int y = 0; y < 3; ++y) {
    for (int x = 0; x < 3; ++x) pos.push_back({static_cast<double>(x), static_cast<double>(y)});
  }
  GngGraph g = MakeGraph(pos, {});
  for (int y = 0; y < 3; ++y) {
    for (int x = 0; x < 3; ++x) {
      if (x < 2) AddEdge(g, y * 3 + x, y * 3 + x + 1);
      if (y < 2) AddEdge(g, y * 3 + x, (y + 1) * 3 + x);
    }
  }
  return g;
}

// Cycle 0..n-1 on a circle of radius r (clockwise on screen), plus extra
// vertices appended by the caller.
GngGraph Ring(int n, double r) {
  std::vector<Point2> pos;
  for (int i = 0; i < n; ++i) {
    const double a = 2.0 * std::numbers::pi * i / n;
    pos.push_back({r * std::cos(a), r * std::sin(a)});
  }
  GngGraph g = MakeGraph(pos, {});
  for (int i = 0; i < n; ++i) AddEdge(g, i, (i + 1) % n);
  return g;
}

// A point inside the region cut off by the chord between ring vertices 9
// and 0 of Ring(14, 10).
Point2 HubInsideArc() {
  const double a = 2.0 * std::numbers::pi * 11.5 / 14;
  return {8.0 * std::cos(a), 8.0 * std::sin(a)};
}

TEST(ExtractBoundary, GridOuterRing) {
  const BoundaryCycle c = ExtractBoundary(Grid3x3());
  EXPECT_EQ(c.order, (std::vector<int>{0, 1, 2, 5, 8, 7, 6, 3}));
  EXPECT_FALSE(c.used_largest_component);
  EXPECT_TRUE(c.b.get(0, 1));
  EXPECT_TRUE(c.b.get(3, 0));
  EXPECT_FALSE(c.b.get(1, 4));
  EXPECT_EQ(c.b.Count(), 16u);
}

TEST(ExtractBoundary, GraphsContainingTheirHullFollowTheHull) {
  Random rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 5 + static_cast<int>(rng.UniformIndex(25));
    std::vector<Point2> pos;
    for (int i = 0; i < n; ++i) pos.push_back({rng.Uniform(0, 100), rng.Uniform(0, 100)});
    GngGraph g = MakeGraph(pos, {});
    const Polygon hull = ConvexHull(pos);
    std::vector<int> hull_ids;
    for (Point2 p : hull.vertices) {
      hull_ids.push_back(static_cast<int>(std::find(pos.begin(), pos.end(), p) - pos.begin()));
    }
    for (std::size_t i = 0; i < hull_ids.size(); ++i) {
      AddEdge(g, hull_ids[i], hull_ids[(i + 1) % hull_ids.size()]);
    }
    for (int k = 0; k < 2 * n; ++k) {
      const int a = static_cast<int>(rng.UniformIndex(n));
      const int b = static_cast<int>(rng.UniformIndex(n));
      if (a != b) AddEdge(g, a, b);
    }
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end(),
                              [](const GngEdge& x, const GngEdge& y) {
                                return x.a == y.a && x.b == y.b;
                              }),
                  g.edges.end());
    // Hull order is counterclockwise in the mathematical sense, which is the
    // canonical orientation; rotate it to the leftmost-topmost vertex.
    auto first = std::min_element(hull_ids.begin(), hull_ids.end(), [&](int a, int b) {
      return pos[a].x < pos[b].x || (pos[a].x == pos[b].x && pos[a].y < pos[b].y);
    });
    std::rotate(hull_ids.begin(), first, hull_ids.end());
    EXPECT_EQ(ExtractBoundary(g).order, hull_ids);
  }
}

TEST(ExtractBoundary, DanglingSpikeIsFolded) {
  GngGraph g = MakeGraph({{0, 0}, {2, 0}, {2, 2}, {0, 2}, {4, -1}},
                         {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 4}});
  const BoundaryCycle c = ExtractBoundary(g);
  EXPECT_EQ(c.order, (std::vector<int>{0, 1, 2, 3}));
}

TEST(ExtractBoundary, SpikeAtStartVertexIsFolded) {
  // Vertex 4 is the leftmost vertex and hangs off the square.
  GngGraph g = MakeGraph({{0, 0}, {2, 0}, {2, 2}, {0, 2}, {-3, 1}},
                         {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}});
  const BoundaryCycle c = ExtractBoundary(g);
  EXPECT_EQ(c.length(), 4);
  EXPECT_EQ(std::count(c.order.begin(), c.order.end(), 4), 0);
}

TEST(ExtractBoundary, TreeHasNoCycle) {
  const GngGraph g = MakeGraph({{0, 0}, {1, 0}, {2, 0}, {1, 1}}, {{0, 1}, {1, 2}, {1, 3}});
  EXPECT_THROW(ExtractBoundary(g), Error);
}

TEST(ExtractBoundary, UsesLargestComponent) {
  GngGraph g = Grid3x3();
  g.positions.push_back({10, 10});
  g.positions.push_back({11, 10});
  g.errors.resize(g.positions.size());
  AddEdge(g, 9, 10);
  const BoundaryCycle c = ExtractBoundary(g);
  EXPECT_TRUE(c.used_largest_component);
  EXPECT_EQ(c.length(), 8);
}

TEST(CanonicalizeCycle, OrientationAndStartAreNormalized) {
  const GngGraph g = Grid3x3();
  const BoundaryCycle c = CanonicalizeCycle(g, {8, 5, 2, 1, 0, 3, 6, 7});
  EXPECT_EQ(c.order, (std::vector<int>{0, 1, 2, 5, 8, 7, 6, 3}));
}

TEST(CandidatePairs, HubChordOnFourteenCycle) {
  // Boundary cycle of 14 plus an interior hub joined to vertices 0 and 9,
  // which sit 5 apart along the boundary.
  GngGraph g = Ring(14, 10.0);
  g.positions.push_back(HubInsideArc());
  g.errors.push_back(0);
  AddEdge(g, 14, 0);
  AddEdge(g, 14, 9);
  const BoundaryCycle c = ExtractBoundary(g);
  const auto pairs = CandidatePairs(AdjacencyMatrix(g), c.b, BulgeKind::kFinger);
  EXPECT_EQ(pairs, (std::vector<std::pair<int, int>>{{0, 9}}));
}

TEST(CandidatePairs, BoundaryNeighborsWithinFourAreExcluded) {
  GngGraph g = Ring(14, 10.0);
  g.positions.push_back({0, 0});
  g.errors.push_back(0);
  AddEdge(g, 14, 0);
  AddEdge(g, 14, 4);  // only 4 apart on the ring
  const BoundaryCycle c = ExtractBoundary(g);
  EXPECT_TRUE(CandidatePairs(AdjacencyMatrix(g), c.b, BulgeKind::kFinger).empty());
}

TEST(CandidatePairs, MatchesWalkEnumerationOnRandomGraphs) {
  Random rng(32);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 4 + static_cast<int>(rng.UniformIndex(17));
    BoolMatrix a(n), b(n);
    // b: a random cycle through a subset of vertices; a: b plus sparse chords.
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    rng.Shuffle(perm.begin(), perm.end());
    const int len = 3 + static_cast<int>(rng.UniformIndex(n - 2));
    for (int i = 0; i < len; ++i) {
      const int u = perm[i], v = perm[(i + 1) % len];
      a.set(u, v);
      a.set(v, u);
      b.set(u, v);
      b.set(v, u);
    }
    for (int k = 0; k < n; ++k) {
      const int u = static_cast<int>(rng.UniformIndex(n));
      const int v = static_cast<int>(rng.UniformIndex(n));
      if (u == v) continue;
      a.set(u, v);
      a.set(v, u);
    }
    for (BulgeKind kind :
         {BulgeKind::kFinger, BulgeKind::kStickingFingers, BulgeKind::kWrist}) {
      EXPECT_EQ(CandidatePairs(a, b, kind), testing::BruteForcePairs(a, b, kind))
          << "trial " << trial << " kind " << BulgeKindName(kind);
    }
  }
}

TEST(CandidatePairs, DimensionMismatchThrows) {
  EXPECT_THROW(CandidatePairs(BoolMatrix(3), BoolMatrix(4), BulgeKind::kFinger), Error);
}

TEST(DetectBulges, HubChordIsOneFinger) {
  GngGraph g = Ring(14, 10.0);
  g.positions.push_back(HubInsideArc());
  g.errors.push_back(0);
  AddEdge(g, 14, 0);
  AddEdge(g, 14, 9);
  const BoundaryCycle c = ExtractBoundary(g);
  const std::vector<Bulge> bulges = DetectBulges(g, c);
  ASSERT_EQ(bulges.size(), 1u);
  EXPECT_EQ(bulges[0].kind, BulgeKind::kFinger);
  EXPECT_EQ(bulges[0].h_distance(), 5);
  EXPECT_EQ(bulges[0].boundary_span.size(), 6u);
  // The hub lies inside the region closed by the basic chord.
  EXPECT_EQ(bulges[0].interior, (std::vector<int>{14}));
  std::ostringstream out;
  WriteBulges(out, bulges);
  EXPECT_EQ(out.str().rfind("bulge finger ", 0), 0u);
}

TEST(DetectBulges, SpansAreDisjointWithAtMostOneWrist) {
  for (int seed = 0; seed < 6; ++seed) {
    GngParams p;
    p.seed = 100 + seed;
    p.settle_epochs = 100;
    const GngGraph g = TrainGng(SynthHand(seed % 6, 1.0, 0.0, seed), p);
    const BoundaryCycle c = ExtractBoundary(g);
    const std::vector<Bulge> bulges = DetectBulges(g, c);
    int wrists = 0;
    std::vector<int> covered(c.length(), 0);
    for (std::size_t i = 0; i < bulges.size(); ++i) {
      const Bulge& b = bulges[i];
      wrists += b.kind == BulgeKind::kWrist;
      EXPECT_EQ(static_cast<int>(b.boundary_span.size()), b.span_length + 1);
      EXPECT_LE(2 * b.span_length, c.length());
      EXPECT_EQ(b.boundary_span.front(), b.basic.first);
      EXPECT_EQ(b.boundary_span.back(), b.basic.second);
      if (i > 0) {
        EXPECT_LT(bulges[i - 1].span_start, b.span_start);
      }
      for (int k = 0; k <= b.span_length; ++k) {
        ++covered[(b.span_start + k) % c.length()];
      }
      for (int v : b.interior) {
        EXPECT_EQ(std::count(b.boundary_span.begin(), b.boundary_span.end(), v), 0);
      }
    }
    EXPECT_LE(wrists, 1);
    for (int x : covered) EXPECT_LE(x, 1);
  }
}

TEST(GraphDistance, GridHops) {
  const GngGraph g = Grid3x3();
  EXPECT_EQ(GraphDistance(g, 0, 8), 4);
  EXPECT_EQ(GraphDistance(g, 4, 4), 0);
  GngGraph h = MakeGraph({{0, 0}, {1, 0}}, {});
  EXPECT_EQ(GraphDistance(h, 0, 1), -1);
}

}  // namespace
}  // namespace gngshape
