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

#include "gngshape/features.h"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "gngshape/error.h"
#include "gngshape/geometry.h"

namespace gngshape {
namespace {

int Mod(int a, int n) { return ((a % n) + n) % n; }

int SpanEnd(const Bulge& b, int n) { return (b.span_start + b.span_length) % n; }

// Clockwise hop count from one cycle index to another.
int ClockwiseGap(int from, int to, int n) { return Mod(to - from, n); }

std::vector<Point2> PositionsOf(const GngGraph& g, const std::vector<int>& ids) {
  std::vector<Point2> pts;
  pts.reserve(ids.size());
  for (int v : ids) pts.push_back(g.positions[v]);
  return pts;
}

// Mean edge length of the graph: the spacing unit for collinear boxes.
double MeanEdgeLength(const GngGraph& g) {
  if (g.edges.empty()) return 1.0;
  double sum = 0.0;
  for (const GngEdge& e : g.edges) sum += Norm(g.positions[e.b] - g.positions[e.a]);
  return sum / static_cast<double>(g.edges.size());
}

}  // namespace

std::vector<Bulge> SignatureOrder(const BoundaryCycle& cycle,
                                  std::vector<Bulge> bulges) {
  const int n = cycle.length();
  const int m = static_cast<int>(bulges.size());
  if (m == 0) return bulges;
  std::sort(bulges.begin(), bulges.end(), [](const Bulge& x, const Bulge& y) {
    return x.span_start < y.span_start;
  });

  int first = 0;
  auto wrist = std::find_if(bulges.begin(), bulges.end(), [](const Bulge& b) {
    return b.kind == BulgeKind::kWrist;
  });
  if (wrist != bulges.end()) {
    first = static_cast<int>(wrist - bulges.begin() + 1) % m;
  } else {
    int widest = -1;
    for (int i = 0; i < m; ++i) {
      const Bulge& prev = bulges[Mod(i - 1, m)];
      const int gap = ClockwiseGap(SpanEnd(prev, n), bulges[i].span_start, n);
      if (gap > widest) {
        widest = gap;
        first = i;
      }
    }
  }
  std::rotate(bulges.begin(), bulges.begin() + first, bulges.end());
  return bulges;
}

WristRatios ComputeWristRatios(const GngGraph& g, const BoundaryCycle& cycle,
                               const std::vector<Bulge>& bulges) {
  WristRatios ratios;
  const std::vector<Bulge> ordered = SignatureOrder(cycle, bulges);
  if (ordered.size() < 2 || ordered.back().kind != BulgeKind::kWrist) {
    return ratios;
  }
  const int n = cycle.length();
  const Bulge& wrist = ordered.back();
  const int fingers = static_cast<int>(ordered.size()) - 1;

  // Hops saved by replacing a finger's span with its base.
  std::vector<int> shortcut(fingers);
  for (int k = 0; k < fingers; ++k) {
    const Bulge& b = ordered[k];
    shortcut[k] = b.span_length - GraphDistance(g, b.basic.first, b.basic.second);
  }

  auto ratio_paths = [&](int i, int* ccw, int* cw) {
    const Bulge& b = ordered[i];
    *ccw = ClockwiseGap(SpanEnd(wrist, n), b.span_start, n);
    for (int k = 0; k < i; ++k) *ccw -= shortcut[k];
    *cw = ClockwiseGap(SpanEnd(b, n), wrist.span_start, n);
    for (int k = i + 1; k < fingers; ++k) *cw -= shortcut[k];
  };

  int l1 = 0, l2 = 0;
  ratio_paths(0, &l1, &l2);
  ratios.s1 = (l1 + l2) > 0 ? static_cast<double>(l1) / (l1 + l2) : 0.0;
  ratio_paths(fingers - 1, &l1, &l2);
  ratios.s2 = (l1 + l2) > 0 ? static_cast<double>(l2) / (l1 + l2) : 0.0;
  ratios.valid = true;
  return ratios;
}

std::vector<BulgeDescriptor> DescribeBulges(const GngGraph& g,
                                            const BoundaryCycle& cycle,
                                            const std::vector<Bulge>& ordered) {
  const int n = cycle.length();
  const int m = static_cast<int>(ordered.size());
  const double cycle_len = n;
  const double vertex_count = g.size();
  const WristRatios ratios = ComputeWristRatios(g, cycle, ordered);
  const double spacing = MeanEdgeLength(g);

  std::vector<BulgeDescriptor> out;
  out.reserve(m);
  for (int i = 0; i < m; ++i) {
    const Bulge& b = ordered[i];
    const Bulge& prev = ordered[Mod(i - 1, m)];
    BulgeDescriptor desc;
    desc.kind = b.kind;
    desc.s1 = ratios.s1;
    desc.s2 = ratios.s2;

    RawBulgeCounts& raw = desc.raw;
    const int gap_start = SpanEnd(prev, n);
    raw.gap = ClockwiseGap(gap_start, b.span_start, n);
    raw.span = b.span_length;
    raw.width = GraphDistance(g, b.basic.first, b.basic.second);
    raw.vertices = static_cast<int>(b.interior.size() + b.boundary_span.size()) - 2;

    std::vector<int> gap_path;
    for (int k = 0; k <= raw.gap; ++k) gap_path.push_back(cycle.order[(gap_start + k) % n]);
    const std::vector<Point2> gap_pts = PositionsOf(g, gap_path);
    const Polygon hull = ConvexHull(gap_pts);
    if (!hull.degenerate) {
      std::vector<char> on_path(g.size(), 0);
      for (int v : gap_path) on_path[v] = 1;
      for (int v = 0; v < g.size(); ++v) {
        if (!on_path[v] &&
            PointInPolygon(g.positions[v], hull) == Containment::kInside) {
          ++raw.gap_hull;
        }
      }
    }
    desc.od = AspectRatio(MinimumBoundingBox(gap_pts), spacing);

    std::vector<int> body = b.boundary_span;
    body.insert(body.end(), b.interior.begin(), b.interior.end());
    desc.ob = AspectRatio(MinimumBoundingBox(PositionsOf(g, body)), spacing);

    desc.d = raw.gap / cycle_len;
    desc.rb = raw.span / cycle_len;
    desc.wb = raw.width / cycle_len;
    desc.nb = raw.vertices / vertex_count;
    desc.nd = raw.gap_hull / vertex_count;
    out.push_back(desc);
  }
  return out;
}

Signature BuildSignature(const std::vector<BulgeDescriptor>& ordered) {
  Signature sig;
  std::vector<BulgeDescriptor> kept = ordered;
  if (kept.size() > kClusterCount) {
    // Keep the wrist and the bulges with the longest spans, in order.
    std::vector<int> idx(kept.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    std::stable_sort(idx.begin(), idx.end(), [&kept](int x, int y) {
      const bool wx = kept[x].kind == BulgeKind::kWrist;
      const bool wy = kept[y].kind == BulgeKind::kWrist;
      if (wx != wy) return wx;
      return kept[x].rb > kept[y].rb;
    });
    idx.resize(kClusterCount);
    std::sort(idx.begin(), idx.end());
    std::vector<BulgeDescriptor> trimmed;
    for (int i : idx) trimmed.push_back(kept[i]);
    kept = std::move(trimmed);
    sig.truncated = true;
  }

  sig.real_count = static_cast<int>(kept.size());
  for (int i = 0; i < sig.real_count; ++i) {
    const BulgeDescriptor& d = kept[i];
    WeightVector& w = sig.clusters[i];
    if (d.kind == BulgeKind::kWrist) {
      w = {d.s2, 0, 0, 0, 0, 0, 0};
    } else {
      w = {i == 0 ? d.s1 : d.d, d.rb, d.wb, d.nb, d.nd, d.ob, d.od};
    }
  }
  return sig;
}

ShapeAnalysis AnalyzeGraph(const GngGraph& g) {
  ShapeAnalysis a;
  a.cycle = ExtractBoundary(g);
  a.bulges = SignatureOrder(a.cycle, DetectBulges(g, a.cycle));
  a.descriptors = DescribeBulges(g, a.cycle, a.bulges);
  a.signature = BuildSignature(a.descriptors);
  return a;
}

std::string FormatSignature(const Signature& s) {
  std::string line;
  line += s.label ? std::to_string(*s.label) : "-";
  line += ' ';
  line += s.subject ? std::to_string(*s.subject) : "-";
  line += ' ';
  line += std::to_string(s.real_count);
  char buf[32];
  for (const WeightVector& w : s.clusters) {
    for (double x : w) {
      std::snprintf(buf, sizeof(buf), " %.17g", x);
      line += buf;
    }
  }
  return line;
}

void WriteSignature(std::ostream& out, const Signature& s) {
  out << FormatSignature(s) << '\n';
}

Signature ParseSignature(const std::string& line, int line_no) {
  auto fail = [line_no](const std::string& why) {
    return DataError("signature line " + std::to_string(line_no) + ": " + why);
  };
  std::istringstream in(line);
  std::string label, subject;
  Signature s;
  if (!(in >> label >> subject >> s.real_count)) throw fail("missing header fields");
  auto tag = [&fail](const std::string& text) -> std::optional<int> {
    if (text == "-") return std::nullopt;
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(text, &used);
    } catch (const std::exception&) {
      throw fail("bad tag '" + text + "'");
    }
    if (used != text.size()) throw fail("bad tag '" + text + "'");
    return value;
  };
  s.label = tag(label);
  s.subject = tag(subject);
  if (s.real_count < 0 || s.real_count > kClusterCount) throw fail("bad real_count");
  for (WeightVector& w : s.clusters) {
    for (double& x : w) {
      if (!(in >> x)) throw fail("expected 42 weights");
    }
  }
  std::string extra;
  if (in >> extra) throw fail("trailing data");
  for (int i = s.real_count; i < kClusterCount; ++i) {
    for (double x : s.clusters[i]) {
      if (x != 0.0) throw fail("virtual cluster with nonzero weight");
    }
  }
  return s;
}

std::vector<Signature> ReadSignatures(std::istream& in) {
  std::vector<Signature> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    out.push_back(ParseSignature(line, line_no));
  }
  return out;
}

}  // namespace gngshape
