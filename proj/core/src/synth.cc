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

#include "gngshape/synth.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "gngshape/error.h"
#include "gngshape/random.h"

namespace gngshape {
namespace {

constexpr double kDegree = std::numbers::pi / 180.0;

struct Finger {
  Point2 dir;  // unit, pointing out of the palm
  double half_width;
  double length;
};

// Exact sine and cosine for right angles, so that quarter-turn renders are
// pixel permutations of each other.
void SinCos(double angle, double* s, double* c) {
  const double quarter = angle / (std::numbers::pi / 2.0);
  const double k = std::round(quarter);
  if (std::abs(quarter - k) < 1e-12) {
    const int turns = ((static_cast<int>(k) % 4) + 4) % 4;
    constexpr double kSin[] = {0.0, 1.0, 0.0, -1.0};
    constexpr double kCos[] = {1.0, 0.0, -1.0, 0.0};
    *s = kSin[turns];
    *c = kCos[turns];
    return;
  }
  *s = std::sin(angle);
  *c = std::cos(angle);
}

// Rectangle hanging below the palm centre with rounded far corners.
bool InWrist(Point2 q, const HandShape& shape) {
  const double half = 0.5 * shape.wrist_width;
  const double end = shape.palm_radius + shape.wrist_length;
  const double r = std::clamp(shape.wrist_corner_radius, 0.0, half);
  const double ax = std::abs(q.x);
  if (ax > half || q.y < 0.0 || q.y > end) return false;
  if (ax <= half - r || q.y <= end - r) return true;
  return SquaredNorm(Point2{ax - (half - r), q.y - (end - r)}) <= r * r;
}

}  // namespace

HandShape RandomHandShape(std::uint64_t subject_seed) {
  Random rng(MixSeed(subject_seed, 0x5ab1ec7));
  HandShape h;
  h.palm_radius *= rng.Uniform(0.95, 1.05);
  h.finger_width *= rng.Uniform(0.95, 1.05);
  h.finger_length_ratio = rng.Uniform(5.7, 6.3);
  h.wrist_width *= rng.Uniform(0.95, 1.05);
  h.wrist_length *= rng.Uniform(0.9, 1.1);
  for (double& a : h.slot_angles) a += rng.Uniform(-3.0, 3.0);
  return h;
}

BinaryMask SynthHand(int fingers, const HandShape& shape, double scale,
                     double rotation, std::uint64_t seed) {
  if (fingers < 0 || fingers > 5) throw UsageError("synth: fingers must be in 0..5");
  if (!(scale > 0.0)) throw UsageError("synth: scale must be positive");
  if (shape.finger_length_ratio < 5.5) {
    throw UsageError("synth: finger length must be at least 5.5 widths");
  }

  Random rng(MixSeed(seed, 0xf1a9e5));
  std::vector<Finger> parts;
  double reach = shape.palm_radius + shape.wrist_length;
  for (int i = 0; i < fingers; ++i) {
    const double angle = (shape.slot_angles[i] + rng.Uniform(-3.0, 3.0)) * kDegree;
    const double ratio = shape.finger_length_ratio * rng.Uniform(0.95, 1.08);
    Finger f;
    f.dir = {std::sin(angle), -std::cos(angle)};
    f.half_width = 0.5 * shape.finger_width;
    f.length = std::max(5.5, ratio) * shape.finger_width;
    parts.push_back(f);
    reach = std::max(reach, shape.palm_radius + f.length);
  }

  const int half = static_cast<int>(std::ceil((reach + 4.0) * scale));
  const int side = 2 * half;
  BinaryMask mask(side, side);

  double s = 0.0, c = 1.0;
  SinCos(rotation, &s, &c);
  const double r2 = shape.palm_radius * shape.palm_radius;
  const double finger_root = 0.6 * shape.palm_radius;

  for (int y = 0; y < side; ++y) {
    for (int x = 0; x < side; ++x) {
      const double ox = (x + 0.5 - half) / scale;
      const double oy = (y + 0.5 - half) / scale;
      // Undo the clockwise rotation.
      const Point2 q{c * ox + s * oy, -s * ox + c * oy};
      bool inside = SquaredNorm(q) <= r2 || InWrist(q, shape);
      for (std::size_t k = 0; !inside && k < parts.size(); ++k) {
        const Finger& f = parts[k];
        const double along = Dot(q, f.dir);
        const double across = Cross(f.dir, q);
        inside = along >= finger_root && along <= shape.palm_radius + f.length &&
                 std::abs(across) <= f.half_width;
      }
      if (inside) mask.set(x, y, true);
    }
  }
  return mask;
}

BinaryMask SynthHand(int fingers, double scale, double rotation,
                     std::uint64_t seed) {
  return SynthHand(fingers, RandomHandShape(seed), scale, rotation, seed);
}

BinaryMask SynthCorpusMask(int fingers, int subject, int index,
                           std::uint64_t seed, double scale, double rotation) {
  const std::uint64_t subject_seed = MixSeed(seed, static_cast<std::uint64_t>(subject));
  const std::uint64_t sample_seed = MixSeed(
      subject_seed, static_cast<std::uint64_t>(fingers) * 1000003u + index);
  return SynthHand(fingers, RandomHandShape(subject_seed), scale, rotation,
                   sample_seed);
}

}  // namespace gngshape
