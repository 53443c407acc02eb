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


#include "gngshape/iemd.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "gngshape/error.h"

namespace gngshape {
namespace {

double WeightDistance(const WeightVector& a, const WeightVector& b) {
  double s = 0.0;
  for (int k = 0; k < kWeightLength; ++k) {
    const double d = a[k] - b[k];
    s += d * d;
  }
  return std::sqrt(s);
}

// Residual network: source 0, supply nodes 1..6, demand nodes 7..12, sink 13.
class FlowNetwork {
 public:
  struct Arc {
    int to;
    double cap;
    double cost;
    int reverse;
  };

  explicit FlowNetwork(int nodes) : arcs_(nodes) {}

  int AddArc(int from, int to, double cap, double cost) {
    arcs_[from].push_back({to, cap, cost, static_cast<int>(arcs_[to].size())});
    arcs_[to].push_back({from, 0.0, -cost, static_cast<int>(arcs_[from].size()) - 1});
    return static_cast<int>(arcs_[from].size()) - 1;
  }

  const Arc& arc(int node, int index) const { return arcs_[node][index]; }

  // Sends up to `limit` units from s to t along successive cheapest paths.
  double MinCostFlow(int s, int t, double limit, double tolerance) {
    const int n = static_cast<int>(arcs_.size());
    double sent = 0.0;
    std::vector<double> dist(n);
    std::vector<int> prev_node(n), prev_arc(n);
    while (limit - sent > tolerance) {
      std::fill(dist.begin(), dist.end(), std::numeric_limits<double>::infinity());
      std::fill(prev_node.begin(), prev_node.end(), -1);
      dist[s] = 0.0;
      // Bellman-Ford: residual costs may be negative after augmentation.
      for (int round = 0; round < n - 1; ++round) {
        bool changed = false;
        for (int u = 0; u < n; ++u) {
          if (dist[u] == std::numeric_limits<double>::infinity()) continue;
          for (int i = 0; i < static_cast<int>(arcs_[u].size()); ++i) {
            const Arc& a = arcs_[u][i];
            if (a.cap <= tolerance) continue;
            const double nd = dist[u] + a.cost;
            if (nd < dist[a.to] - kImprovement) {
              dist[a.to] = nd;
              prev_node[a.to] = u;
              prev_arc[a.to] = i;
              changed = true;
            }
          }
        }
        if (!changed) break;
      }
      if (prev_node[t] < 0) break;

      double push = limit - sent;
      for (int v = t; v != s; v = prev_node[v]) {
        push = std::min(push, arcs_[prev_node[v]][prev_arc[v]].cap);
      }
      for (int v = t; v != s; v = prev_node[v]) {
        Arc& a = arcs_[prev_node[v]][prev_arc[v]];
        a.cap -= push;
        arcs_[v][a.reverse].cap += push;
      }
      sent += push;
    }
    return sent;
  }

 private:
  static constexpr double kImprovement = 1e-13;
  std::vector<std::vector<Arc>> arcs_;
};

void CheckMass(const ClusterMass& m, const char* what) {
  for (double x : m) {
    if (!std::isfinite(x) || x < 0.0) {
      throw DataError(std::string("solve_flow: ") + what +
                      " masses must be finite and non-negative");
    }
  }
}

}  // namespace

CostMatrix IemdCost(const Signature& p, const Signature& q) {
  CostMatrix c{};
  for (int i = 0; i < kClusterCount; ++i) {
    for (int j = 0; j < kClusterCount; ++j) {
      const double d = WeightDistance(p.clusters[i], q.clusters[j]);
      c[i][j] = i == j ? d : static_cast<double>((i + 1) * (j + 1)) * d;
    }
  }
  return c;
}

ClusterMass ClusterMassOf(const Signature&) {
  ClusterMass m;
  m.fill(1.0);
  return m;
}

FlowSolution SolveFlow(const CostMatrix& cost, const ClusterMass& supply,
                       const ClusterMass& demand) {
  CheckMass(supply, "supply");
  CheckMass(demand, "demand");
  for (const auto& row : cost) {
    for (double c : row) {
      if (!std::isfinite(c)) throw DataError("solve_flow: costs must be finite");
    }
  }
  const double total = std::accumulate(supply.begin(), supply.end(), 0.0);
  const double total_demand = std::accumulate(demand.begin(), demand.end(), 0.0);
  const double tolerance = 1e-12 * std::max(1.0, total);
  if (std::abs(total - total_demand) > tolerance) {
    throw DataError("solve_flow: supply and demand totals differ");
  }

  constexpr int kSource = 0;
  constexpr int kSink = 2 * kClusterCount + 1;
  FlowNetwork net(kSink + 1);
  std::array<std::array<int, kClusterCount>, kClusterCount> handle{};
  for (int i = 0; i < kClusterCount; ++i) {
    net.AddArc(kSource, 1 + i, supply[i], 0.0);
    net.AddArc(1 + kClusterCount + i, kSink, demand[i], 0.0);
  }
  for (int i = 0; i < kClusterCount; ++i) {
    for (int j = 0; j < kClusterCount; ++j) {
      handle[i][j] = net.AddArc(1 + i, 1 + kClusterCount + j, total, cost[i][j]);
    }
  }
  const double sent = net.MinCostFlow(kSource, kSink, total, tolerance);
  if (total - sent > tolerance) {
    throw InvariantError("solve_flow: balanced problem left mass unrouted");
  }

  FlowSolution sol;
  for (int i = 0; i < kClusterCount; ++i) {
    for (int j = 0; j < kClusterCount; ++j) {
      const double f = total - net.arc(1 + i, handle[i][j]).cap;
      sol.flow[i][j] = f;
      sol.objective += cost[i][j] * f;
      sol.total_flow += f;
    }
  }
  return sol;
}

double Iemd(const Signature& p, const Signature& q) {
  const FlowSolution sol =
      SolveFlow(IemdCost(p, q), ClusterMassOf(p), ClusterMassOf(q));
  return sol.total_flow > 0.0 ? sol.objective / sol.total_flow : 0.0;
}

double BruteForceIemd(const Signature& p, const Signature& q) {
  const CostMatrix c = IemdCost(p, q);
  std::array<int, kClusterCount> perm;
  std::iota(perm.begin(), perm.end(), 0);
  double best = std::numeric_limits<double>::infinity();
  do {
    double s = 0.0;
    for (int i = 0; i < kClusterCount; ++i) s += c[i][perm[i]];
    best = std::min(best, s);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best / kClusterCount;
}

}  // namespace gngshape
