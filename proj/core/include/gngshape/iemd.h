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


// Improved Earth Mover's Distance between two shape signatures.
//
// Every cluster, real or virtual, carries unit mass, so the transportation
// problem is balanced at total mass kClusterCount and its optimum is a
// permutation. Cluster weight vectors only enter through the ground cost,
// which penalizes matching clusters at different positions by i*j (1-based).

#pragma once

#include <array>

#include "gngshape/features.h"

namespace gngshape {

using CostMatrix = std::array<std::array<double, kClusterCount>, kClusterCount>;
using FlowMatrix = CostMatrix;
using ClusterMass = std::array<double, kClusterCount>;

CostMatrix IemdCost(const Signature& p, const Signature& q);

// Mass of each cluster of s.
ClusterMass ClusterMassOf(const Signature& s);

struct FlowSolution {
  FlowMatrix flow{};
  double objective = 0.0;  // sum of cost * flow
  double total_flow = 0.0;
};

// Exact minimum-cost transportation by successive shortest paths. Throws
// DataError on negative or non-finite masses and on unequal totals.
FlowSolution SolveFlow(const CostMatrix& cost, const ClusterMass& supply,
                       const ClusterMass& demand);

double Iemd(const Signature& p, const Signature& q);

// Minimum over all 720 cluster permutations; the reference for Iemd.
double BruteForceIemd(const Signature& p, const Signature& q);

}  // namespace gngshape
