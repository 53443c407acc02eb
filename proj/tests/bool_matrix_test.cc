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


#include "gngshape/bool_matrix.h"

#include <vector>

#include <gtest/gtest.h>

#include "gngshape/error.h"
#include "gngshape/random.h"

namespace gngshape {
namespace {

using Dense = std::vector<std::vector<int>>;

BoolMatrix FromDense(const Dense& d) {
  BoolMatrix m(static_cast<int>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (d[i][j]) m.set(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return m;
}

Dense RandomDense(Random& rng, int n, double p) {
  Dense d(n, std::vector<int>(n, 0));
  for (auto& row : d) {
    for (int& x : row) x = rng.UniformUnit() < p ? 1 : 0;
  }
  return d;
}

Dense NaiveProduct(const Dense& a, const Dense& b) {
  const std::size_t n = a.size();
  Dense c(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) c[i][j] |= a[i][k] & b[k][j];
    }
  }
  return c;
}

TEST(BoolMatrix, ProductMatchesNaiveTripleLoop) {
  Random rng(21);
  for (int n : {1, 5, 63, 64, 65, 130}) {
    const Dense a = RandomDense(rng, n, 0.05);
    const Dense b = RandomDense(rng, n, 0.05);
    EXPECT_EQ(FromDense(a) * FromDense(b), FromDense(NaiveProduct(a, b))) << n;
  }
}

TEST(BoolMatrix, SetOperations) {
  BoolMatrix a(3), b(3);
  a.set(0, 1);
  a.set(2, 2);
  b.set(2, 2);
  EXPECT_EQ(a.Count(), 2u);
  EXPECT_TRUE(b.IsSubsetOf(a));
  EXPECT_FALSE(a.IsSubsetOf(b));
  const BoolMatrix d = a.Minus(b);
  EXPECT_TRUE(d.get(0, 1));
  EXPECT_FALSE(d.get(2, 2));
  EXPECT_EQ((d | b), a);
  EXPECT_TRUE(BoolMatrix(4).IsZero());
  EXPECT_EQ(BoolMatrix::Identity(3) * a, a);
}

TEST(BoolMatrix, DimensionMismatchThrows) {
  EXPECT_THROW(BoolMatrix(2) * BoolMatrix(3), Error);
  EXPECT_THROW(BoolMatrix(2) | BoolMatrix(3), Error);
}

TEST(Powers, PathGraphReachability) {
  // Path 0-1-2-3: walks of length k connect vertices at distance k, k-2, ...
  BoolMatrix p(4);
  for (int i = 0; i < 3; ++i) {
    p.set(i, i + 1);
    p.set(i + 1, i);
  }
  const std::vector<BoolMatrix> pw = Powers(p, 3);
  ASSERT_EQ(pw.size(), 3u);
  EXPECT_EQ(pw[0], p);
  EXPECT_TRUE(pw[1].get(0, 2));
  EXPECT_TRUE(pw[1].get(0, 0));
  EXPECT_FALSE(pw[1].get(0, 1));
  EXPECT_TRUE(pw[2].get(0, 3));
  EXPECT_TRUE(pw[2].get(0, 1));
  EXPECT_FALSE(pw[2].get(0, 0));
}

}  // namespace
}  // namespace gngshape
