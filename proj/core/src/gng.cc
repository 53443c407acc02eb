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

#include "gngshape/gng.h"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

#include "gngshape/error.h"

namespace gngshape {

void GngParams::Validate() const {
  if (n_max < 2) throw UsageError("gng: n_max must be >= 2");
  if (!(eps_n > 0.0 && eps_n <= eps_b && eps_b < 1.0)) {
    throw UsageError("gng: need 0 < eps_n <= eps_b < 1");
  }
  if (lambda < 1) throw UsageError("gng: lambda must be >= 1");
  if (age_max < 1) throw UsageError("gng: age_max must be >= 1");
  if (settle_epochs < 1) throw UsageError("gng: settle_epochs must be >= 1");
  if (!(alpha > 0.0 && alpha < 1.0)) throw UsageError("gng: need 0 < alpha < 1");
  if (!(d > 0.0 && d <= 1.0)) throw UsageError("gng: need 0 < d <= 1");
}

std::vector<std::vector<int>> GngGraph::Neighbors() const {
  std::vector<std::vector<int>> nb(positions.size());
  for (const GngEdge& e : edges) {
    nb[e.a].push_back(e.b);
    nb[e.b].push_back(e.a);
  }
  for (auto& list : nb) std::sort(list.begin(), list.end());
  return nb;
}

Point2 SampleInput(const BinaryMask& mask, Random& rng) {
  const std::size_t total = mask.CountForeground();
  if (total == 0) throw DataError("sample_input: mask has no foreground");
  std::uint64_t k = rng.UniformIndex(total);
  for (int y = 0; y < mask.height(); ++y) {
    for (int x = 0; x < mask.width(); ++x) {
      if (mask.at(x, y) && k-- == 0) return {x + 0.5, y + 0.5};
    }
  }
  throw InvariantError("sample_input: index out of range");
}

GngTrainer::GngTrainer(std::span<const Point2> inputs, const GngParams& params)
    : inputs_(inputs.begin(), inputs.end()), params_(params), rng_(params.seed) {
  params_.Validate();
  if (inputs_.size() < 2) {
    throw DataError("gng: need at least 2 foreground pixels");
  }
  const std::uint64_t first = rng_.UniformIndex(inputs_.size());
  std::uint64_t second = first;
  while (second == first) second = rng_.UniformIndex(inputs_.size());
  pos_ = {inputs_[first], inputs_[second]};
  err_ = {0.0, 0.0};
  adj_.resize(2);
}

void GngTrainer::Connect(int u, int v) {
  for (Link& l : adj_[u]) {
    if (l.to == v) {
      l.age = 0;
      for (Link& r : adj_[v]) {
        if (r.to == u) r.age = 0;
      }
      return;
    }
  }
  adj_[u].push_back({v, 0});
  adj_[v].push_back({u, 0});
}

void GngTrainer::Disconnect(int u, int v) {
  std::erase_if(adj_[u], [v](const Link& l) { return l.to == v; });
  std::erase_if(adj_[v], [u](const Link& l) { return l.to == u; });
}

void GngTrainer::RemoveVertex(int v) {
  pos_.erase(pos_.begin() + v);
  err_.erase(err_.begin() + v);
  adj_.erase(adj_.begin() + v);
  for (auto& links : adj_) {
    for (Link& l : links) {
      if (l.to > v) --l.to;
    }
  }
}

void GngTrainer::InsertVertex() {
  int q = 0;
  for (int i = 1; i < size(); ++i) {
    if (err_[i] > err_[q]) q = i;
  }
  int f = -1;
  for (const Link& l : adj_[q]) {
    if (f < 0 || err_[l.to] > err_[f] || (err_[l.to] == err_[f] && l.to < f)) {
      f = l.to;
    }
  }
  if (f < 0) return;  // q is isolated only before the first signal

  const int r = size();
  pos_.push_back(0.5 * (pos_[q] + pos_[f]));
  err_[q] *= params_.alpha;
  err_[f] *= params_.alpha;
  err_.push_back(err_[q]);
  adj_.emplace_back();
  Disconnect(q, f);
  Connect(q, r);
  Connect(r, f);
}

void GngTrainer::Adapt(Point2 x) {
  // Nearest and second-nearest vertex; ties go to the lower id.
  int s1 = -1, s2 = -1;
  double d1 = std::numeric_limits<double>::infinity();
  double d2 = d1;
  for (int i = 0; i < size(); ++i) {
    const double dist = SquaredDistance(x, pos_[i]);
    if (dist < d1) {
      s2 = s1;
      d2 = d1;
      s1 = i;
      d1 = dist;
    } else if (dist < d2) {
      s2 = i;
      d2 = dist;
    }
  }

  for (Link& l : adj_[s1]) {
    ++l.age;
    for (Link& r : adj_[l.to]) {
      if (r.to == s1) ++r.age;
    }
  }
  err_[s1] += d1;

  pos_[s1] = pos_[s1] + params_.eps_b * (x - pos_[s1]);
  for (const Link& l : adj_[s1]) {
    pos_[l.to] = pos_[l.to] + params_.eps_n * (x - pos_[l.to]);
  }

  Connect(s1, s2);

  std::vector<int> touched;
  for (const Link& l : adj_[s1]) {
    if (l.age > params_.age_max) touched.push_back(l.to);
  }
  for (int v : touched) Disconnect(s1, v);
  touched.push_back(s1);
  std::sort(touched.begin(), touched.end(), std::greater<>());
  for (int v : touched) {
    if (adj_[v].empty()) RemoveVertex(v);
  }
}

bool GngTrainer::Step() {
  if (finished_) return false;
  Adapt(inputs_[rng_.UniformIndex(inputs_.size())]);
  ++signals_;

  if (signals_ % params_.lambda == 0) {
    if (size() < params_.n_max) {
      InsertVertex();
      settled_ = 0;
    } else if (++settled_ >= params_.settle_epochs) {
      finished_ = true;
    }
  }
  for (double& e : err_) e *= params_.d;

  // Isolated-vertex deletion could in principle stall growth; bound the run.
  const long limit =
      (1000L * params_.n_max + params_.settle_epochs) * params_.lambda;
  if (signals_ >= limit && !finished_) {
    throw InvariantError("gng: training did not reach n_max");
  }
  return !finished_;
}

int GngTrainer::MaxEdgeAge() const {
  int m = 0;
  for (const auto& links : adj_) {
    for (const Link& l : links) m = std::max(m, l.age);
  }
  return m;
}

GngGraph GngTrainer::Snapshot() const {
  GngGraph g;
  g.positions = pos_;
  g.errors = err_;
  for (int u = 0; u < size(); ++u) {
    for (const Link& l : adj_[u]) {
      if (u < l.to) g.edges.push_back({u, l.to, l.age});
    }
  }
  std::sort(g.edges.begin(), g.edges.end(), [](const GngEdge& x, const GngEdge& y) {
    return x.a < y.a || (x.a == y.a && x.b < y.b);
  });
  return g;
}

GngGraph TrainGng(std::span<const Point2> inputs, const GngParams& params) {
  GngTrainer trainer(inputs, params);
  while (trainer.Step()) {
  }
  return trainer.Snapshot();
}

GngGraph TrainGng(const BinaryMask& mask, const GngParams& params) {
  params.Validate();
  if (mask.CountForeground() == 0) throw DataError("gng: mask is empty");
  const std::vector<Point2> inputs = mask.ForegroundCenters();
  return TrainGng(inputs, params);
}

void WriteGraph(std::ostream& out, const GngGraph& graph) {
  char buf[128];
  out << "gng " << graph.size() << ' ' << graph.edges.size() << '\n';
  for (int i = 0; i < graph.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "v %d %.17g %.17g\n", i,
                  graph.positions[i].x, graph.positions[i].y);
    out << buf;
  }
  for (const GngEdge& e : graph.edges) {
    out << "e " << e.a << ' ' << e.b << ' ' << e.age << '\n';
  }
}

GngGraph ReadGraph(std::istream& in) {
  std::string line;
  int line_no = 0;
  auto fail = [&line_no](const std::string& why) {
    return DataError("graph dump line " + std::to_string(line_no) + ": " + why);
  };

  GngGraph g;
  std::size_t n_vertices = 0, n_edges = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (!header) {
      if (tag != "gng" || !(ls >> n_vertices >> n_edges)) {
        throw fail("expected header 'gng <n_vertices> <n_edges>'");
      }
      header = true;
      g.positions.resize(n_vertices);
      g.errors.assign(n_vertices, 0.0);
      continue;
    }
    if (tag == "v") {
      std::size_t id;
      Point2 p;
      if (!(ls >> id >> p.x >> p.y) || id >= n_vertices) throw fail("bad vertex");
      g.positions[id] = p;
    } else if (tag == "e") {
      GngEdge e;
      if (!(ls >> e.a >> e.b >> e.age) || e.a < 0 || e.b < 0 ||
          static_cast<std::size_t>(std::max(e.a, e.b)) >= n_vertices ||
          e.a == e.b) {
        throw fail("bad edge");
      }
      if (e.a > e.b) std::swap(e.a, e.b);
      g.edges.push_back(e);
    } else {
      throw fail("unknown record '" + tag + "'");
    }
  }
  if (!header) throw DataError("graph dump: missing header");
  if (g.edges.size() != n_edges) throw DataError("graph dump: edge count mismatch");
  std::sort(g.edges.begin(), g.edges.end(), [](const GngEdge& x, const GngEdge& y) {
    return x.a < y.a || (x.a == y.a && x.b < y.b);
  });
  return g;
}

}  // namespace gngshape
