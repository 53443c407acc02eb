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


// Depth segmentation and dataset loading.
//
// Directory layouts (paths relative to the dataset root; <s> subject id,
// <g> gesture label, both decimal integers used as written):
//
//   ntu             P<s>/G<g>/<name>.png             16-bit depth
//   hku             S<s>/G<g>/<name>.png             16-bit depth
//   hku-multiangle  S<s>/G<g>/<view>/<name>.png      16-bit depth
//   uestc           S<s>/G<g>/<name>.png             16-bit depth
//   generic-mask    <dirs>/c<g>_s<s>_<name>.png      8-bit mask, nonzero = hand
//
// An index.csv at the root ("path,label,subject", optional header row)
// replaces the naming rule for any layout. Files that match no rule are
// skipped. Records come back sorted by relative path.

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gngshape/mask.h"

namespace gngshape {

struct DepthMap {
  int width = 0;
  int height = 0;
  std::vector<std::uint16_t> depth;  // row-major; 0 = no reading

  DepthMap() = default;
  DepthMap(int w, int h, std::uint16_t fill = 0);

  std::uint16_t at(int x, int y) const {
    return depth[static_cast<std::size_t>(y) * width + x];
  }
  void set(int x, int y, std::uint16_t z) {
    depth[static_cast<std::size_t>(y) * width + x] = z;
  }
};

inline constexpr int kDefaultDepthBand = 150;

// Valid pixels within [z0, z0 + band] of the nearest valid depth z0.
BinaryMask ThresholdDepth(const DepthMap& d, int band = kDefaultDepthBand);

// ThresholdDepth followed by the largest 8-connected component. Throws
// DataError when no pixel holds a reading.
BinaryMask SegmentDepth(const DepthMap& d, int band = kDefaultDepthBand);

enum class Layout { kNtu, kHku, kHkuMultiAngle, kUestc, kGenericMask };

Layout ParseLayout(const std::string& name);
const char* LayoutName(Layout layout);

struct DatasetRecord {
  BinaryMask mask;
  int label = 0;
  int subject = 0;
  std::string source;  // path relative to the root
};

// Expected counts read from "<dir>/<layout>.manifest" (key=value lines).
struct Manifest {
  std::optional<long> total;
  std::optional<long> per_class;
};

std::optional<Manifest> ReadManifest(const std::filesystem::path& dir,
                                     Layout layout);

struct LoadOptions {
  int depth_band = kDefaultDepthBand;
  int jobs = 1;
  std::filesystem::path manifest_dir;  // empty: skip count checks
};

struct LoadResult {
  std::vector<DatasetRecord> records;
  std::vector<std::string> warnings;
};

// Throws DataError when the root is missing or a file cannot be decoded.
LoadResult LoadDataset(const std::filesystem::path& root, Layout layout,
                       const LoadOptions& options = {});

// Image I/O. Depth files are single-channel 16-bit (8-bit is widened);
// masks are single-channel 8-bit.
DepthMap ReadDepthImage(const std::filesystem::path& path);
BinaryMask ReadMaskImage(const std::filesystem::path& path);
void WriteMaskImage(const std::filesystem::path& path, const BinaryMask& mask);
void WriteDepthImage(const std::filesystem::path& path, const DepthMap& depth);

}  // namespace gngshape
