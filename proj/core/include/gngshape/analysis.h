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

// Outer boundary extraction and bulge detection on a GNG graph.
//
// With A the adjacency matrix of the graph G and B the adjacency matrix of
// the boundary subgraph H, a bulge is a pair of boundary ("basic") vertices
// joined by a short walk that avoids H while being far apart along H:
//
//   finger           ((A-B)^2 > 0)                 - ((B^3 + B^4) > 0)
//   sticking fingers ((A-B)^4 > 0 + (A-B)^5 > 0)   - ((B^6 + B^7 + B^8) > 0)
//   wrist            ((A-B)^6 > 0 + (A-B)^7 > 0)   - ((B^8 + ... + B^11) > 0)
//
// over the boolean semiring, where "-" is set difference.

#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "gngshape/bool_matrix.h"
#include "gngshape/gng.h"

namespace gngshape {

struct BoundaryCycle {
  // Closed walk of boundary vertex ids, clockwise on screen, starting at the
  // leftmost (then topmost) boundary vertex. The closing edge back to
  // order.front() is implicit.
  std::vector<int> order;
  // Adjacency of H: every graph vertex, boundary edges only.
  BoolMatrix b;
  // Set when the graph was disconnected and only its largest component was
  // traced.
  bool used_largest_component = false;

  int length() const { return static_cast<int>(order.size()); }
};

BoolMatrix AdjacencyMatrix(const GngGraph& g);

// Gift-wrapping walk around the outer face. Dangling edges traversed back
// and forth are folded away so that order is a closed walk without spikes.
// Throws DataError("no boundary cycle") when nothing encloses area.
BoundaryCycle ExtractBoundary(const GngGraph& g);

// Rebuilds a cycle given in either orientation into canonical form
// (clockwise on screen, rotated to start at the leftmost-topmost vertex).
BoundaryCycle CanonicalizeCycle(const GngGraph& g, std::vector<int> order);

enum class BulgeKind { kFinger, kStickingFingers, kWrist };

const char* BulgeKindName(BulgeKind kind);

// Raw formula output: unordered pairs (i < j) whose entry is set.
std::vector<std::pair<int, int>> CandidatePairs(const BoolMatrix& a,
                                                const BoolMatrix& b,
                                                BulgeKind kind);

struct Bulge {
  BulgeKind kind = BulgeKind::kFinger;
  // Basic vertices; the span runs clockwise from first to second.
  std::pair<int, int> basic{-1, -1};
  // Index into cycle.order where the span starts, and its edge count.
  int span_start = 0;
  int span_length = 0;
  // Cycle vertices from basic.first to basic.second, clockwise.
  std::vector<int> boundary_span;
  // Non-span vertices strictly inside the span closed by the basic chord.
  std::vector<int> interior;

  int h_distance() const { return span_length; }
};

// Detects fingers, sticking fingers and at most one wrist. Within each kind
// candidates are taken by decreasing H-distance; a candidate whose span meets
// an already claimed span is discarded. Fingers claim first, then the wrist,
// then sticking fingers. Result is sorted by span_start.
std::vector<Bulge> DetectBulges(const GngGraph& g, const BoundaryCycle& cycle);

// Breadth-first hop distance in G; -1 when unreachable.
int GraphDistance(const GngGraph& g, int from, int to);

// Debug dump: "bulge <kind> <u> <v> <H-distance> <interior-count>".
void WriteBulges(std::ostream& out, const std::vector<Bulge>& bulges);

}  // namespace gngshape
