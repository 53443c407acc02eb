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

#include "gngshape/geometry.h"

#include <algorithm>
#include <cstddef>

#include "gngshape/error.h"

namespace gngshape {
namespace {

double Orient(Point2 o, Point2 a, Point2 b) { return Cross(a - o, b - o); }

double SegmentDistance(Point2 p, Point2 a, Point2 b) {
  const Point2 ab = b - a;
  const double len2 = SquaredNorm(ab);
  if (len2 == 0.0) return Distance(p, a);
  const double t = std::clamp(Dot(p - a, ab) / len2, 0.0, 1.0);
  return Distance(p, a + t * ab);
}

}  // namespace

double SignedArea2(std::span<const Point2> ring) {
  double sum = 0.0;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    sum += Cross(ring[i], ring[(i + 1) % ring.size()]);
  }
  return sum;
}

Polygon ConvexHull(std::span<const Point2> points) {
  if (points.empty()) throw DataError("empty point set");

  std::vector<Point2> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), [](Point2 a, Point2 b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  Polygon hull;
  if (pts.size() == 1) {
    hull.vertices = pts;
    hull.degenerate = true;
    return hull;
  }

  std::vector<Point2> chain(2 * pts.size());
  std::size_t k = 0;
  for (const Point2& p : pts) {
    while (k >= 2 && Orient(chain[k - 2], chain[k - 1], p) <= 0.0) --k;
    chain[k++] = p;
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = pts.size() - 1; i-- > 0;) {
    while (k >= lower && Orient(chain[k - 2], chain[k - 1], pts[i]) <= 0.0) --k;
    chain[k++] = pts[i];
  }
  chain.resize(k - 1);

  hull.vertices = std::move(chain);
  hull.degenerate = hull.vertices.size() < 3;
  return hull;
}

OrientedBox MinimumBoundingBox(std::span<const Point2> points) {
  const Polygon hull = ConvexHull(points);
  const std::vector<Point2>& p = hull.vertices;
  const std::size_t n = p.size();

  OrientedBox box;
  if (n == 1) {
    box.center = p[0];
    return box;
  }
  if (n == 2) {
    const Point2 d = p[1] - p[0];
    box.length = Norm(d);
    box.axis = (1.0 / box.length) * d;
    box.center = 0.5 * (p[0] + p[1]);
    return box;
  }

  auto next = [n](std::size_t i) { return (i + 1) % n; };

  // Caliper indices: far end along the edge, farthest from the edge, and
  // near end along the edge. All three advance monotonically as the edge
  // rotates, so the sweep is linear in the hull size.
  std::size_t far = 0, top = 0, near = 0;
  {
    const Point2 u = p[1] - p[0];
    const Point2 nrm{-u.y, u.x};
    for (std::size_t i = 1; i < n; ++i) {
      if (Dot(p[i] - p[far], u) > 0.0) far = i;
      if (Dot(p[i] - p[top], nrm) > 0.0) top = i;
      if (Dot(p[i] - p[near], u) < 0.0) near = i;
    }
  }

  double best_area = -1.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 edge = p[next(i)] - p[i];
    const Point2 u = (1.0 / Norm(edge)) * edge;
    const Point2 nrm{-u.y, u.x};

    for (std::size_t guard = 0; guard < n && Dot(p[next(far)] - p[far], u) > 0.0;
         ++guard) {
      far = next(far);
    }
    for (std::size_t guard = 0;
         guard < n && Dot(p[next(top)] - p[top], nrm) > 0.0; ++guard) {
      top = next(top);
    }
    for (std::size_t guard = 0;
         guard < n && Dot(p[next(near)] - p[near], u) < 0.0; ++guard) {
      near = next(near);
    }

    const double hi = Dot(p[far] - p[i], u);
    const double lo = Dot(p[near] - p[i], u);
    const double height = Dot(p[top] - p[i], nrm);
    const double extent = hi - lo;
    const double area = extent * height;
    if (best_area < 0.0 || area < best_area) {
      best_area = area;
      box.center = p[i] + (0.5 * (hi + lo)) * u + (0.5 * height) * nrm;
      if (extent >= height) {
        box.axis = u;
        box.length = extent;
        box.width = height;
      } else {
        box.axis = nrm;
        box.length = height;
        box.width = extent;
      }
    }
  }
  return box;
}

double AspectRatio(const OrientedBox& box, double min_width) {
  if (box.length <= 0.0) return 1.0;
  const double width = box.width > 0.0 ? box.width : min_width;
  return std::min(1.0, width / box.length);
}

Containment PointInPolygon(Point2 p, const Polygon& polygon) {
  const std::vector<Point2>& v = polygon.vertices;
  if (polygon.degenerate || v.size() < 3 || SignedArea2(v) == 0.0) {
    throw DataError("point-in-polygon on a degenerate polygon");
  }
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (SegmentDistance(p, v[i], v[(i + 1) % n]) <= kBoundaryTolerance) {
      return Containment::kOnBoundary;
    }
  }
  bool inside = false;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point2 a = v[i];
    const Point2 b = v[j];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x_cross = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x_cross) inside = !inside;
    }
  }
  return inside ? Containment::kInside : Containment::kOutside;
}

}  // namespace gngshape
