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


#include "gngshape/mask.h"

#include <gtest/gtest.h>

#include "gngshape/random.h"

namespace gngshape {
namespace {

BinaryMask RandomMask(Random& rng, int w, int h, double density) {
  BinaryMask m(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) m.set(x, y, rng.UniformUnit() < density);
  }
  return m;
}

TEST(BinaryMask, ForegroundCentersRowMajor) {
  BinaryMask m(3, 2);
  m.set(2, 0, true);
  m.set(0, 1, true);
  const std::vector<Point2> c = m.ForegroundCenters();
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0], (Point2{2.5, 0.5}));
  EXPECT_EQ(c[1], (Point2{0.5, 1.5}));
  EXPECT_EQ(m.CountForeground(), 2u);
}

TEST(RotateQuarterTurns, OneTurnIsClockwiseOnScreen) {
  BinaryMask m(3, 2);
  m.set(0, 0, true);  // top-left goes to top-right
  const BinaryMask r = RotateQuarterTurns(m, 1);
  EXPECT_EQ(r.width(), 2);
  EXPECT_EQ(r.height(), 3);
  EXPECT_TRUE(r.at(1, 0));
  EXPECT_EQ(r.CountForeground(), 1u);
}

TEST(RotateQuarterTurns, FourTurnsIsIdentity) {
  Random rng(3);
  const BinaryMask m = RandomMask(rng, 7, 5, 0.4);
  EXPECT_EQ(RotateQuarterTurns(m, 4), m);
  EXPECT_EQ(RotateQuarterTurns(RotateQuarterTurns(m, 1), 3), m);
  EXPECT_EQ(RotateQuarterTurns(m, -1), RotateQuarterTurns(m, 3));
}

TEST(LargestComponent, KeepsBiggestEightConnectedBlob) {
  BinaryMask m(6, 4);
  // Diagonal chain of 3 (8-connected) and a separate pair.
  m.set(0, 0, true);
  m.set(1, 1, true);
  m.set(2, 2, true);
  m.set(5, 0, true);
  m.set(5, 1, true);
  EXPECT_EQ(CountComponents(m), 2);
  const BinaryMask l = LargestComponent(m);
  EXPECT_EQ(l.CountForeground(), 3u);
  EXPECT_TRUE(l.at(1, 1));
  EXPECT_FALSE(l.at(5, 0));
  EXPECT_EQ(CountComponents(l), 1);
}

TEST(LargestComponent, EmptyMaskStaysEmpty) {
  const BinaryMask m(4, 4);
  EXPECT_EQ(LargestComponent(m).CountForeground(), 0u);
  EXPECT_EQ(CountComponents(m), 0);
}

TEST(LargestComponent, ResultIsSingleComponentSubset) {
  Random rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const BinaryMask m = RandomMask(rng, 20, 15, 0.3);
    const BinaryMask l = LargestComponent(m);
    EXPECT_LE(CountComponents(l), 1);
    for (int y = 0; y < m.height(); ++y) {
      for (int x = 0; x < m.width(); ++x) {
        if (l.at(x, y)) {
          EXPECT_TRUE(m.at(x, y));
        }
      }
    }
  }
}

}  // namespace
}  // namespace gngshape
