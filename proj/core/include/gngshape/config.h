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


// Run configuration shared by the command-line stages.
//
// Plain-text form, one "key = value" per line, '#' starts a comment:
//
//   seed = 1
//   jobs = 4
//   gng.n_max = 300
//   gng.settle_epochs = 1000
//   depth_band = 150
//   k = 3
//   protocol = l-o-o
//   layout = generic-mask
//   root = data/masks
//   out = results
//   dump_graphs = false
//   manifest_dir = data/manifests

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>

#include "gngshape/gng.h"
#include "gngshape/ingest.h"

namespace gngshape {

struct RunConfig {
  GngParams gng;
  int depth_band = kDefaultDepthBand;
  int k = 3;
  std::string protocol = "h-h";
  std::string layout = "generic-mask";
  std::filesystem::path root;
  std::filesystem::path out = ".";
  std::uint64_t seed = 1;
  int jobs = 1;
  bool dump_graphs = false;
  std::filesystem::path manifest_dir;

  // Throws UsageError naming the offending key.
  void Set(const std::string& key, const std::string& value);
  // Cross-field checks, including GngParams::Validate and the protocol and
  // layout names.
  void Validate() const;
};

// Applies every assignment in `in` on top of `config`. `source` names the
// input in error messages.
void ApplyConfig(std::istream& in, const std::string& source, RunConfig& config);
void ApplyConfigFile(const std::filesystem::path& path, RunConfig& config);

// Every key with its current value, readable by ApplyConfig.
void WriteConfig(std::ostream& out, const RunConfig& config);

}  // namespace gngshape
