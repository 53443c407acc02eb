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


// Shared fixtures for the unit tests.

#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <initializer_list>
#include <utility>
#include <vector>

#include "gngshape/error.h"
#include "gngshape/features.h"
#include "gngshape/geometry.h"
#include "gngshape/gng.h"
#include "gngshape/random.h"

namespace gngshape::testing {

inline GngGraph MakeGraph(std::vector<Point2> positions,
                          std::initializer_list<std::pair<int, int>> edges) {
  GngGraph g;
  g.positions = std::move(positions);
  g.errors.assign(g.positions.size(), 0.0);
  for (auto [a, b] : edges) g.edges.push_back({std::min(a, b), std::max(a, b), 0});
  std::sort(g.edges.begin(), g.edges.end(), [](const GngEdge& x, const GngEdge& y) {
    return x.a < y.a || (x.a == y.a && x.b < y.b);
  });
  return g;
}

inline void AddEdge(GngGraph& g, int a, int b) {
  g.edges.push_back({std::min(a, b), std::max(a, b), 0});
  std::sort(g.edges.begin(), g.edges.end(), [](const GngEdge& x, const GngEdge& y) {
    return x.a < y.a || (x.a == y.a && x.b < y.b);
  });
}

// Signature with `real` random clusters and zero padding.
inline Signature RandomSignature(Random& rng, int real) {
  Signature s;
  s.real_count = real;
  for (int i = 0; i < real; ++i) {
    for (double& x : s.clusters[i]) x = rng.UniformUnit();
  }
  return s;
}

inline Signature RandomSignature(Random& rng) {
  return RandomSignature(rng, static_cast<int>(rng.UniformIndex(kClusterCount + 1)));
}

// Code of the gngshape::Error thrown by f, or nullopt when nothing is thrown.
template <typename F>
std::optional<ErrorCode> ErrorCodeOf(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

// Fresh directory under the system temp dir, removed on destruction.
class ScratchDir {
 public:
  explicit ScratchDir(const std::string& tag) {
    Random rng(reinterpret_cast<std::uintptr_t>(this) ^
               static_cast<std::uint64_t>(
                   std::filesystem::file_time_type::clock::now()
                       .time_since_epoch()
                       .count()));
    path_ = std::filesystem::temp_directory_path() /
            ("gngshape_" + tag + "_" + std::to_string(rng.NextU64()));
    std::filesystem::create_directories(path_);
  }
  ~ScratchDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  ScratchDir(const ScratchDir&) = delete;
  ScratchDir& operator=(const ScratchDir&) = delete;

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace gngshape::testing
