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

// Synthetic hand masks for desk-scale experiments: a palm disc, up to five
// rectangular fingers and a rectangular wrist stub.

#pragma once

#include <array>
#include <cstdint>

#include "gngshape/mask.h"

namespace gngshape {

// Proportions in pixels at scale 1. Angles are in degrees, measured
// clockwise on screen from straight up; the wrist points straight down.
struct HandShape {
  double palm_radius = 44.0;
  double finger_width = 17.0;
  double finger_length_ratio = 6.0;  // finger length / width, >= 5.5
  double wrist_width = 40.0;
  double wrist_length = 48.0;  // below the palm disc
  double wrist_corner_radius = 10.0;
  // Slots in the order fingers are raised: index, middle, ring, little,
  // thumb.
  std::array<double, 5> slot_angles{66.0, 24.0, -18.0, -60.0, 119.0};
};

// Per-subject proportions drawn around the defaults.
HandShape RandomHandShape(std::uint64_t subject_seed);

// Renders `fingers` (0..5) raised fingers. `seed` jitters finger angles and
// lengths. `rotation` is in radians, clockwise on screen; multiples of pi/2
// reproduce RotateQuarterTurns of the unrotated raster exactly.
BinaryMask SynthHand(int fingers, const HandShape& shape, double scale,
                     double rotation, std::uint64_t seed);

// Same with per-seed proportions: SynthHand(f, RandomHandShape(seed), ...).
BinaryMask SynthHand(int fingers, double scale, double rotation,
                     std::uint64_t seed);

// Sample `index` of `subject` in a synthetic finger-count corpus. Subjects
// have their own proportions; samples jitter finger angles and lengths.
BinaryMask SynthCorpusMask(int fingers, int subject, int index,
                           std::uint64_t seed, double scale = 1.0,
                           double rotation = 0.0);

}  // namespace gngshape
