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

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gngshape/geometry.h"

namespace gngshape {

// Row-major foreground grid. Pixel (x, y) covers [x, x+1) x [y, y+1); its
// center is (x + 0.5, y + 0.5).
class BinaryMask {
 public:
  BinaryMask() = default;
  BinaryMask(int width, int height);

  int width() const { return width_; }
  int height() const { return height_; }

  bool at(int x, int y) const {
    return bits_[static_cast<std::size_t>(y) * width_ + x] != 0;
  }
  void set(int x, int y, bool value) {
    bits_[static_cast<std::size_t>(y) * width_ + x] = value ? 1 : 0;
  }
  bool contains(int x, int y) const {
    return x >= 0 && y >= 0 && x < width_ && y < height_;
  }

  std::size_t CountForeground() const;

  // Pixel centers of all foreground pixels in row-major order.
  std::vector<Point2> ForegroundCenters() const;

  friend bool operator==(const BinaryMask&, const BinaryMask&) = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> bits_;
};

// Rotates the raster by quarter_turns * 90 degrees clockwise on screen.
BinaryMask RotateQuarterTurns(const BinaryMask& mask, int quarter_turns);

// Keeps only the largest 8-connected foreground component. Ties go to the
// component whose first pixel comes first in row-major order.
BinaryMask LargestComponent(const BinaryMask& mask);

// Number of 8-connected foreground components.
int CountComponents(const BinaryMask& mask);

}  // namespace gngshape
