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

#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gngshape/analysis.h"
#include "gngshape/gng.h"

namespace gngshape {

inline constexpr int kClusterCount = 6;
inline constexpr int kWeightLength = 7;

using WeightVector = std::array<double, kWeightLength>;

// Unnormalized per-bulge measurements, in hops or vertex counts.
struct RawBulgeCounts {
  int gap = 0;       // H-path length from the previous bulge
  int span = 0;      // edges of the boundary span
  int width = 0;     // G-distance between the basic vertices
  int vertices = 0;  // interior plus span vertices, basic pair excluded
  int gap_hull = 0;  // vertices strictly inside the hull of the gap path
};

struct BulgeDescriptor {
  BulgeKind kind = BulgeKind::kFinger;
  double s1 = 0.0;
  double s2 = 0.0;
  double d = 0.0;   // gap / cycle length
  double rb = 0.0;  // span / cycle length
  double wb = 0.0;  // width / cycle length
  double nb = 0.0;  // vertices / vertex count
  double nd = 0.0;  // gap_hull / vertex count
  double ob = 1.0;  // aspect ratio of the bulge's bounding box
  double od = 1.0;  // aspect ratio of the gap path's bounding box
  RawBulgeCounts raw;
};

struct WristRatios {
  double s1 = 0.0;  // first finger after the wrist
  double s2 = 0.0;  // last finger before the wrist
  bool valid = false;  // false without a wrist or without fingers
};

// Counterclockwise / clockwise H-path ratios between the fingers and the
// wrist. Spans of the bulges passed over count as their base width.
WristRatios ComputeWristRatios(const GngGraph& g, const BoundaryCycle& cycle,
                               const std::vector<Bulge>& bulges);

// Reorders bulges into signature order: clockwise starting right after the
// wrist, wrist last. Without a wrist, the sequence starts after the widest
// gap between consecutive bulges.
std::vector<Bulge> SignatureOrder(const BoundaryCycle& cycle,
                                  std::vector<Bulge> bulges);

// Descriptors for bulges already in signature order.
std::vector<BulgeDescriptor> DescribeBulges(const GngGraph& g,
                                            const BoundaryCycle& cycle,
                                            const std::vector<Bulge>& ordered);

struct Signature {
  std::array<WeightVector, kClusterCount> clusters{};
  int real_count = 0;
  std::optional<int> label;
  std::optional<int> subject;
  // More than six bulges were found and the shortest were dropped.
  bool truncated = false;

  friend bool operator==(const Signature& x, const Signature& y) {
    return x.clusters == y.clusters && x.real_count == y.real_count &&
           x.label == y.label && x.subject == y.subject;
  }
};

// Weight vectors: wrist [S2, 0, ...], first bulge [S1, Rb, Wb, Nb, Nd, Ob,
// Od], others [D, Rb, Wb, Nb, Nd, Ob, Od]; zero vectors pad to six clusters.
Signature BuildSignature(const std::vector<BulgeDescriptor>& ordered);

// Full analysis of one trained graph.
struct ShapeAnalysis {
  BoundaryCycle cycle;
  std::vector<Bulge> bulges;  // signature order
  std::vector<BulgeDescriptor> descriptors;
  Signature signature;
};

ShapeAnalysis AnalyzeGraph(const GngGraph& g);

// One signature per line:
//   <label> <subject> <real_count> w11 ... w17 w21 ... w67
// Missing label or subject is written as '-'.
void WriteSignature(std::ostream& out, const Signature& s);
std::string FormatSignature(const Signature& s);
// Throws DataError mentioning line_no on malformed input.
Signature ParseSignature(const std::string& line, int line_no);
std::vector<Signature> ReadSignatures(std::istream& in);

}  // namespace gngshape
