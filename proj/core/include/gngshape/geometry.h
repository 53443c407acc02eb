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

// Planar primitives shared by the pipeline.
//
// All coordinates are image coordinates: x grows to the right, y grows
// downward. "Clockwise" elsewhere in the library always means clockwise as
// seen on screen. Note that a polygon whose shoelace sum is positive
// (counterclockwise in the usual mathematical sense) therefore appears
// clockwise on screen; the geometry routines below only rely on the sign
// convention, not on the visual one.

#pragma once

#include <cmath>
#include <span>
#include <vector>

namespace gngshape {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
  friend bool operator==(Point2 a, Point2 b) = default;
};

inline double Dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double Cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double SquaredNorm(Point2 a) { return Dot(a, a); }
inline double Norm(Point2 a) { return std::sqrt(SquaredNorm(a)); }
inline double SquaredDistance(Point2 a, Point2 b) { return SquaredNorm(a - b); }
inline double Distance(Point2 a, Point2 b) { return Norm(a - b); }

// Twice the signed area (shoelace sum). Positive for mathematically
// counterclockwise vertex order.
double SignedArea2(std::span<const Point2> ring);

struct Polygon {
  // Mathematically counterclockwise (positive shoelace sum) when produced by
  // ConvexHull.
  std::vector<Point2> vertices;
  // Set when the input collapsed to a point or a segment.
  bool degenerate = false;
};

struct OrientedBox {
  Point2 center;
  Point2 axis{1.0, 0.0};  // unit direction of the long side
  double length = 0.0;    // extent along axis
  double width = 0.0;     // extent across axis, width <= length

  double area() const { return length * width; }
};

enum class Containment { kInside, kOnBoundary, kOutside };

// Andrew's monotone chain. Collinear points on hull edges are dropped.
// Throws DataError("empty point set") on empty input.
Polygon ConvexHull(std::span<const Point2> points);

// Minimum-area enclosing rectangle by rotating calipers over the hull edges.
OrientedBox MinimumBoundingBox(std::span<const Point2> points);

// width / length in (0, 1]. A box of zero length (coincident points) has
// ratio 1. A box of zero width (collinear points) uses `min_width` instead,
// so callers that need scale invariance pass a length that scales with the
// points.
double AspectRatio(const OrientedBox& box, double min_width = 1.0);

// Points within kBoundaryTolerance of an edge report kOnBoundary; otherwise
// even-odd ray casting. Throws DataError for a degenerate polygon.
inline constexpr double kBoundaryTolerance = 1e-9;
Containment PointInPolygon(Point2 p, const Polygon& polygon);

}  // namespace gngshape
