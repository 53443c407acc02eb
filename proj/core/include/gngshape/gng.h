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

// Growing Neural Gas (Fritzke) over the foreground of a binary mask.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "gngshape/geometry.h"
#include "gngshape/mask.h"
#include "gngshape/random.h"

namespace gngshape {

struct GngParams {
  int n_max = 300;       // vertex budget
  double eps_b = 0.05;   // winner move fraction
  double eps_n = 0.005;  // neighbor move fraction
  int lambda = 50;       // input signals per insertion epoch
  int age_max = 50;      // edges older than this are dropped
  double alpha = 0.5;    // error scaling of q and f on insertion
  double d = 0.995;      // global error decay per signal
  // Full epochs of adaptation without insertion once the graph holds n_max
  // vertices. A single epoch leaves the mesh visibly unconverged on thin
  // parts; bulge detection needs it to settle.
  int settle_epochs = 1000;
  std::uint64_t seed = 1;

  // Throws UsageError naming the first violated constraint.
  void Validate() const;
};

struct GngEdge {
  int a = 0;  // a < b
  int b = 0;
  int age = 0;

  friend bool operator==(const GngEdge&, const GngEdge&) = default;
};

// A trained graph. Edges are sorted by (a, b).
struct GngGraph {
  std::vector<Point2> positions;
  std::vector<double> errors;
  std::vector<GngEdge> edges;

  int size() const { return static_cast<int>(positions.size()); }

  // Sorted neighbor lists.
  std::vector<std::vector<int>> Neighbors() const;
};

// Center of a uniformly chosen foreground pixel.
// Throws DataError when the mask has no foreground.
Point2 SampleInput(const BinaryMask& mask, Random& rng);

// Incremental trainer. Input signals are drawn uniformly (by index) from a
// fixed list of points, which makes training a deterministic function of the
// seed and the list. Tests use the stepping interface to observe invariants
// after every signal.
class GngTrainer {
 public:
  GngTrainer(std::span<const Point2> inputs, const GngParams& params);

  // Processes one input signal. Returns false once training has finished.
  bool Step();
  // Processes a given signal (no sampling). Exposed for tests.
  void Adapt(Point2 x);

  bool finished() const { return finished_; }
  long signals() const { return signals_; }
  int size() const { return static_cast<int>(pos_.size()); }
  const std::vector<Point2>& positions() const { return pos_; }
  int MaxEdgeAge() const;

  GngGraph Snapshot() const;

 private:
  struct Link {
    int to;
    int age;
  };

  void Connect(int u, int v);
  void Disconnect(int u, int v);
  void RemoveVertex(int v);
  void InsertVertex();

  std::vector<Point2> inputs_;
  GngParams params_;
  Random rng_;
  std::vector<Point2> pos_;
  std::vector<double> err_;
  std::vector<std::vector<Link>> adj_;
  long signals_ = 0;
  int settled_ = 0;
  bool finished_ = false;
};

// Trains on the mask's foreground pixel centers until the graph holds
// n_max vertices and settle_epochs further full epochs have run.
GngGraph TrainGng(const BinaryMask& mask, const GngParams& params);
GngGraph TrainGng(std::span<const Point2> inputs, const GngParams& params);

// Plain-text dump:
//   gng <n_vertices> <n_edges>
//   v <id> <x> <y>
//   e <id1> <id2> <age>
void WriteGraph(std::ostream& out, const GngGraph& graph);
GngGraph ReadGraph(std::istream& in);

}  // namespace gngshape
