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

#include "gngshape/mask.h"

#include <algorithm>

#include "gngshape/error.h"

namespace gngshape {
namespace {

// Labels 8-connected components; returns per-pixel labels (-1 background)
// and the component sizes.
std::vector<int> LabelComponents(const BinaryMask& mask,
                                 std::vector<std::size_t>* sizes) {
  const int w = mask.width();
  const int h = mask.height();
  std::vector<int> label(static_cast<std::size_t>(w) * h, -1);
  std::vector<int> stack;
  sizes->clear();
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const int start = y * w + x;
      if (!mask.at(x, y) || label[start] >= 0) continue;
      const int id = static_cast<int>(sizes->size());
      std::size_t count = 0;
      label[start] = id;
      stack.push_back(start);
      while (!stack.empty()) {
        const int cur = stack.back();
        stack.pop_back();
        ++count;
        const int cx = cur % w;
        const int cy = cur / w;
        for (int dy = -1; dy <= 1; ++dy) {
          for (int dx = -1; dx <= 1; ++dx) {
            const int nx = cx + dx;
            const int ny = cy + dy;
            if (!mask.contains(nx, ny) || !mask.at(nx, ny)) continue;
            const int idx = ny * w + nx;
            if (label[idx] >= 0) continue;
            label[idx] = id;
            stack.push_back(idx);
          }
        }
      }
      sizes->push_back(count);
    }
  }
  return label;
}

}  // namespace

BinaryMask::BinaryMask(int width, int height)
    : width_(width), height_(height) {
  if (width < 0 || height < 0) throw DataError("negative mask dimensions");
  bits_.assign(static_cast<std::size_t>(width) * height, 0);
}

std::size_t BinaryMask::CountForeground() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

std::vector<Point2> BinaryMask::ForegroundCenters() const {
  std::vector<Point2> centers;
  for (int y = 0; y < height_; ++y) {
    for (int x = 0; x < width_; ++x) {
      if (at(x, y)) centers.push_back({x + 0.5, y + 0.5});
    }
  }
  return centers;
}

BinaryMask RotateQuarterTurns(const BinaryMask& mask, int quarter_turns) {
  const int turns = ((quarter_turns % 4) + 4) % 4;
  const int w = mask.width();
  const int h = mask.height();
  BinaryMask out = (turns % 2 == 0) ? BinaryMask(w, h) : BinaryMask(h, w);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (!mask.at(x, y)) continue;
      switch (turns) {
        case 0:
          out.set(x, y, true);
          break;
        case 1:  // (x, y) -> (h-1-y, x)
          out.set(h - 1 - y, x, true);
          break;
        case 2:
          out.set(w - 1 - x, h - 1 - y, true);
          break;
        case 3:
          out.set(y, w - 1 - x, true);
          break;
      }
    }
  }
  return out;
}

BinaryMask LargestComponent(const BinaryMask& mask) {
  std::vector<std::size_t> sizes;
  const std::vector<int> label = LabelComponents(mask, &sizes);
  BinaryMask out(mask.width(), mask.height());
  if (sizes.empty()) return out;
  const int best = static_cast<int>(
      std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
  for (int y = 0; y < mask.height(); ++y) {
    for (int x = 0; x < mask.width(); ++x) {
      if (label[static_cast<std::size_t>(y) * mask.width() + x] == best) {
        out.set(x, y, true);
      }
    }
  }
  return out;
}

int CountComponents(const BinaryMask& mask) {
  std::vector<std::size_t> sizes;
  LabelComponents(mask, &sizes);
  return static_cast<int>(sizes.size());
}

}  // namespace gngshape
