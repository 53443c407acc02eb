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
#include <deque>
#include <ostream>

#include "gngshape/error.h"
#include "gngshape/geometry.h"

namespace gngshape {
namespace {

// Position of direction w in the clockwise (on screen) sweep that starts just
// past the reference direction. Half 0 covers angles in (0, pi), half 1 covers
// [pi, 2 pi), half 2 is the reference direction itself (or a zero vector).
int SweepHalf(Point2 ref, Point2 w) {
  const double c = Cross(ref, w);
  if (c > 0.0) return 0;
  if (c < 0.0) return 1;
  const double d = Dot(ref, w);
  if (d < 0.0) return 1;
  return 2;
}

// Neighbor of `cur` reached by the smallest clockwise turn away from `back`,
// the direction pointing to where the walk came from.
int NextOnBoundary(const GngGraph& g, const std::vector<int>& neighbors, int cur,
                   Point2 back) {
  int best = -1;
  int best_half = 0;
  Point2 best_dir;
  for (int w : neighbors) {
    const Point2 dir = g.positions[w] - g.positions[cur];
    const int half = SweepHalf(back, dir);
    bool better = false;
    if (best < 0 || half < best_half) {
      better = true;
    } else if (half == best_half) {
      const double c = half == 2 ? 0.0 : Cross(best_dir, dir);
      if (c < 0.0) {
        better = true;
      } else if (c == 0.0) {
        const double dn = SquaredNorm(dir);
        const double bn = SquaredNorm(best_dir);
        better = dn < bn || (dn == bn && w < best);
      }
    }
    if (better) {
      best = w;
      best_half = half;
      best_dir = dir;
    }
  }
  return best;
}

// Removes back-and-forth excursions (x, y, x -> x), cyclically.
std::vector<int> FoldSpikes(const std::vector<int>& walk) {
  std::vector<int> st;
  for (int v : walk) {
    if (st.size() >= 2 && st[st.size() - 2] == v) {
      st.pop_back();
    } else {
      st.push_back(v);
    }
  }
  bool changed = true;
  while (changed && st.size() >= 3) {
    changed = false;
    const std::size_t n = st.size();
    if (st[n - 1] == st[1]) {
      // st[0] is the tip of a spike entered from st[n-1].
      st.erase(st.begin(), st.begin() + 2);
      changed = true;
    } else if (st[n - 2] == st[0]) {
      st.erase(st.end() - 2, st.end());
      changed = true;
    } else if (st.front() == st.back()) {
      st.pop_back();
      changed = true;
    }
  }
  return st;
}

std::vector<int> LargestComponentVertices(const std::vector<std::vector<int>>& nb,
                                          bool* partial) {
  const int n = static_cast<int>(nb.size());
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> members;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(members.size());
    members.emplace_back();
    std::deque<int> queue{s};
    comp[s] = id;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      members[id].push_back(v);
      for (int w : nb[v]) {
        if (comp[w] < 0) {
          comp[w] = id;
          queue.push_back(w);
        }
      }
    }
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < members.size(); ++i) {
    if (members[i].size() > members[best].size()) best = i;
  }
  *partial = members.size() > 1;
  return members.empty() ? std::vector<int>{} : members[best];
}

bool LeftTopOf(const GngGraph& g, int a, int b) {
  const Point2 pa = g.positions[a];
  const Point2 pb = g.positions[b];
  if (pa.x != pb.x) return pa.x < pb.x;
  if (pa.y != pb.y) return pa.y < pb.y;
  return a < b;
}

BoolMatrix CycleAdjacency(int n, const std::vector<int>& order) {
  BoolMatrix b(n);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int u = order[i];
    const int v = order[(i + 1) % order.size()];
    if (u == v) continue;
    b.set(u, v);
    b.set(v, u);
  }
  return b;
}

struct PowerTable {
  std::vector<BoolMatrix> interior;  // (A-B)^k, k = 1..7
  std::vector<BoolMatrix> boundary;  // B^k, k = 1..11
};

PowerTable MakePowers(const BoolMatrix& a, const BoolMatrix& b) {
  if (a.size() != b.size()) {
    throw DataError("candidate_pairs: adjacency dimension mismatch");
  }
  return {Powers(a.Minus(b), 7), Powers(b, 11)};
}

BoolMatrix AnyOf(const std::vector<BoolMatrix>& powers, int lo, int hi) {
  BoolMatrix m = powers[lo - 1];
  for (int k = lo + 1; k <= hi; ++k) m = m | powers[k - 1];
  return m;
}

BoolMatrix FormulaMatrix(const PowerTable& t, BulgeKind kind) {
  switch (kind) {
    case BulgeKind::kFinger:
      return AnyOf(t.interior, 2, 2).Minus(AnyOf(t.boundary, 3, 4));
    case BulgeKind::kStickingFingers:
      return AnyOf(t.interior, 4, 5).Minus(AnyOf(t.boundary, 6, 8));
    case BulgeKind::kWrist:
      return AnyOf(t.interior, 6, 7).Minus(AnyOf(t.boundary, 8, 11));
  }
  throw InvariantError("unknown bulge kind");
}

std::vector<std::pair<int, int>> UpperPairs(const BoolMatrix& m) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < m.size(); ++i) {
    for (int j = i + 1; j < m.size(); ++j) {
      if (m.get(i, j)) pairs.emplace_back(i, j);
    }
  }
  return pairs;
}

struct Span {
  int start = 0;
  int length = 0;
  int u = 0;
  int v = 0;
};

class SpanSet {
 public:
  explicit SpanSet(int cycle_length) : n_(cycle_length) {}

  bool Meets(const Span& s) const {
    for (const Span& t : spans_) {
      if (Intersects(s, t)) return true;
    }
    return false;
  }
  void Add(const Span& s) { spans_.push_back(s); }

 private:
  bool Intersects(const Span& a, const Span& b) const {
    const int ab = ((b.start - a.start) % n_ + n_) % n_;
    const int ba = ((a.start - b.start) % n_ + n_) % n_;
    return ab <= a.length || ba <= b.length;
  }

  int n_;
  std::vector<Span> spans_;
};

// Converts formula pairs into boundary spans, largest H-distance first.
std::vector<Span> SpansFor(const std::vector<std::pair<int, int>>& pairs,
                           const std::vector<int>& index_of, int n) {
  std::vector<Span> spans;
  for (auto [a, b] : pairs) {
    const int ia = index_of[a];
    const int ib = index_of[b];
    if (ia < 0 || ib < 0) continue;
    const int fwd = ((ib - ia) % n + n) % n;
    if (fwd == 0) continue;
    const int bwd = n - fwd;
    Span s;
    if (fwd <= bwd) {
      s = {ia, fwd, a, b};
    } else {
      s = {ib, bwd, b, a};
    }
    spans.push_back(s);
  }
  std::stable_sort(spans.begin(), spans.end(), [](const Span& x, const Span& y) {
    if (x.length != y.length) return x.length > y.length;
    const int xl = std::min(x.u, x.v), yl = std::min(y.u, y.v);
    if (xl != yl) return xl < yl;
    return std::max(x.u, x.v) < std::max(y.u, y.v);
  });
  return spans;
}

Bulge MakeBulge(const GngGraph& g, const BoundaryCycle& cycle, const Span& s,
                BulgeKind kind) {
  const int n = cycle.length();
  Bulge bulge;
  bulge.kind = kind;
  bulge.basic = {s.u, s.v};
  bulge.span_start = s.start;
  bulge.span_length = s.length;

  std::vector<char> on_span(g.size(), 0);
  Polygon region;
  for (int k = 0; k <= s.length; ++k) {
    const int v = cycle.order[(s.start + k) % n];
    bulge.boundary_span.push_back(v);
    on_span[v] = 1;
    region.vertices.push_back(g.positions[v]);
  }
  if (region.vertices.size() >= 3 && SignedArea2(region.vertices) != 0.0) {
    for (int v = 0; v < g.size(); ++v) {
      if (on_span[v]) continue;
      if (PointInPolygon(g.positions[v], region) == Containment::kInside) {
        bulge.interior.push_back(v);
      }
    }
  }
  return bulge;
}

}  // namespace

BoolMatrix AdjacencyMatrix(const GngGraph& g) {
  BoolMatrix a(g.size());
  for (const GngEdge& e : g.edges) {
    a.set(e.a, e.b);
    a.set(e.b, e.a);
  }
  return a;
}

BoundaryCycle CanonicalizeCycle(const GngGraph& g, std::vector<int> order) {
  if (order.size() < 3) throw DataError("no boundary cycle");
  std::vector<Point2> ring;
  ring.reserve(order.size());
  for (int v : order) ring.push_back(g.positions[v]);
  // Clockwise on screen has a positive shoelace sum in y-down coordinates.
  if (SignedArea2(ring) < 0.0) {
    std::reverse(order.begin(), order.end());
  }
  auto first = std::min_element(order.begin(), order.end(), [&g](int a, int b) {
    return LeftTopOf(g, a, b);
  });
  std::rotate(order.begin(), first, order.end());

  BoundaryCycle cycle;
  cycle.b = CycleAdjacency(g.size(), order);
  cycle.order = std::move(order);
  return cycle;
}

BoundaryCycle ExtractBoundary(const GngGraph& g) {
  const std::vector<std::vector<int>> nb = g.Neighbors();
  bool partial = false;
  const std::vector<int> comp = LargestComponentVertices(nb, &partial);
  if (comp.size() < 3) throw DataError("no boundary cycle");

  const int start = *std::min_element(comp.begin(), comp.end(),
                                      [&g](int a, int b) { return LeftTopOf(g, a, b); });
  // Pretend the walk arrived at the start moving straight up.
  const int first = NextOnBoundary(g, nb[start], start, Point2{0.0, 1.0});
  if (first < 0) throw DataError("no boundary cycle");

  std::vector<int> walk{start};
  const std::size_t limit = 2 * g.edges.size() + 4;
  int prev = start;
  int cur = first;
  for (std::size_t steps = 0;; ++steps) {
    if (steps > limit) throw DataError("no boundary cycle");
    const int next =
        NextOnBoundary(g, nb[cur], cur, g.positions[prev] - g.positions[cur]);
    if (cur == start && next == first) break;
    walk.push_back(cur);
    prev = cur;
    cur = next;
  }

  std::vector<int> order = FoldSpikes(walk);
  if (order.size() < 3) throw DataError("no boundary cycle");
  BoundaryCycle cycle = CanonicalizeCycle(g, std::move(order));
  cycle.used_largest_component = partial;
  return cycle;
}

const char* BulgeKindName(BulgeKind kind) {
  switch (kind) {
    case BulgeKind::kFinger:
      return "finger";
    case BulgeKind::kStickingFingers:
      return "sticking-fingers";
    case BulgeKind::kWrist:
      return "wrist";
  }
  return "unknown";
}

std::vector<std::pair<int, int>> CandidatePairs(const BoolMatrix& a,
                                                const BoolMatrix& b,
                                                BulgeKind kind) {
  return UpperPairs(FormulaMatrix(MakePowers(a, b), kind));
}

std::vector<Bulge> DetectBulges(const GngGraph& g, const BoundaryCycle& cycle) {
  const int n = cycle.length();
  if (n < 3) throw DataError("no boundary cycle");
  std::vector<int> index_of(g.size(), -1);
  for (int i = 0; i < n; ++i) {
    if (index_of[cycle.order[i]] < 0) index_of[cycle.order[i]] = i;
  }

  const PowerTable table = MakePowers(AdjacencyMatrix(g), cycle.b);
  auto spans_of = [&](BulgeKind kind) {
    return SpansFor(UpperPairs(FormulaMatrix(table, kind)), index_of, n);
  };

  // Fingers claim spans first, then the single wrist, then sticking
  // fingers. Walks may backtrack, so every finger or sticking candidate that
  // is far enough apart on H is also a wrist candidate.
  SpanSet claimed(n);
  std::vector<Bulge> bulges;
  auto claim = [&](const Span& s, BulgeKind kind) {
    claimed.Add(s);
    bulges.push_back(MakeBulge(g, cycle, s, kind));
  };
  for (const Span& s : spans_of(BulgeKind::kFinger)) {
    if (!claimed.Meets(s)) claim(s, BulgeKind::kFinger);
  }
  for (const Span& s : spans_of(BulgeKind::kWrist)) {
    if (!claimed.Meets(s)) {
      claim(s, BulgeKind::kWrist);
      break;
    }
  }
  for (const Span& s : spans_of(BulgeKind::kStickingFingers)) {
    if (!claimed.Meets(s)) claim(s, BulgeKind::kStickingFingers);
  }

  std::sort(bulges.begin(), bulges.end(), [](const Bulge& x, const Bulge& y) {
    return x.span_start < y.span_start;
  });
  return bulges;
}

int GraphDistance(const GngGraph& g, int from, int to) {
  const std::vector<std::vector<int>> nb = g.Neighbors();
  std::vector<int> dist(g.size(), -1);
  std::deque<int> queue{from};
  dist[from] = 0;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    if (v == to) return dist[v];
    for (int w : nb[v]) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return -1;
}

void WriteBulges(std::ostream& out, const std::vector<Bulge>& bulges) {
  for (const Bulge& b : bulges) {
    out << "bulge " << BulgeKindName(b.kind) << ' ' << b.basic.first << ' '
        << b.basic.second << ' ' << b.h_distance() << ' ' << b.interior.size()
        << '\n';
  }
}

}  // namespace gngshape
