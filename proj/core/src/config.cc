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


#include "gngshape/config.h"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>

#include "gngshape/classify.h"
#include "gngshape/error.h"

namespace gngshape {
namespace {

std::string Trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <typename T>
T ParseNumber(const std::string& key, const std::string& value) {
  T v{};
  const char* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw UsageError("config: bad value '" + value + "' for " + key);
  }
  return v;
}

bool ParseBool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw UsageError("config: bad boolean '" + value + "' for " + key);
}

std::string Real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

void RunConfig::Set(const std::string& key, const std::string& value) {
  if (key == "seed") {
    seed = ParseNumber<std::uint64_t>(key, value);
  } else if (key == "jobs") {
    jobs = ParseNumber<int>(key, value);
  } else if (key == "depth_band") {
    depth_band = ParseNumber<int>(key, value);
  } else if (key == "k") {
    k = ParseNumber<int>(key, value);
  } else if (key == "protocol") {
    protocol = value;
  } else if (key == "layout") {
    layout = value;
  } else if (key == "root") {
    root = value;
  } else if (key == "out") {
    out = value;
  } else if (key == "dump_graphs") {
    dump_graphs = ParseBool(key, value);
  } else if (key == "manifest_dir") {
    manifest_dir = value;
  } else if (key == "gng.n_max") {
    gng.n_max = ParseNumber<int>(key, value);
  } else if (key == "gng.eps_b") {
    gng.eps_b = ParseNumber<double>(key, value);
  } else if (key == "gng.eps_n") {
    gng.eps_n = ParseNumber<double>(key, value);
  } else if (key == "gng.lambda") {
    gng.lambda = ParseNumber<int>(key, value);
  } else if (key == "gng.age_max") {
    gng.age_max = ParseNumber<int>(key, value);
  } else if (key == "gng.alpha") {
    gng.alpha = ParseNumber<double>(key, value);
  } else if (key == "gng.d") {
    gng.d = ParseNumber<double>(key, value);
  } else if (key == "gng.settle_epochs") {
    gng.settle_epochs = ParseNumber<int>(key, value);
  } else {
    throw UsageError("config: unknown key '" + key + "'");
  }
}

void RunConfig::Validate() const {
  gng.Validate();
  if (depth_band < 0) throw UsageError("config: depth_band must be >= 0");
  if (k < 1) throw UsageError("config: k must be >= 1");
  if (jobs < 0) throw UsageError("config: jobs must be >= 0");
  ParseProtocol(protocol);
  ParseLayout(layout);
}

void ApplyConfig(std::istream& in, const std::string& source, RunConfig& config) {
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    line = Trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError(source + ":" + std::to_string(line_no) +
                       ": expected key = value");
    }
    try {
      config.Set(Trim(line.substr(0, eq)), Trim(line.substr(eq + 1)));
    } catch (const Error& e) {
      throw UsageError(source + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
}

void ApplyConfigFile(const std::filesystem::path& path, RunConfig& config) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path.string());
  ApplyConfig(in, path.string(), config);
}

void WriteConfig(std::ostream& out, const RunConfig& c) {
  out << "seed = " << c.seed << '\n'
      << "jobs = " << c.jobs << '\n'
      << "gng.n_max = " << c.gng.n_max << '\n'
      << "gng.eps_b = " << Real(c.gng.eps_b) << '\n'
      << "gng.eps_n = " << Real(c.gng.eps_n) << '\n'
      << "gng.lambda = " << c.gng.lambda << '\n'
      << "gng.age_max = " << c.gng.age_max << '\n'
      << "gng.alpha = " << Real(c.gng.alpha) << '\n'
      << "gng.d = " << Real(c.gng.d) << '\n'
      << "gng.settle_epochs = " << c.gng.settle_epochs << '\n'
      << "depth_band = " << c.depth_band << '\n'
      << "k = " << c.k << '\n'
      << "protocol = " << c.protocol << '\n'
      << "layout = " << c.layout << '\n'
      << "root = " << c.root.string() << '\n'
      << "out = " << c.out.string() << '\n'
      << "dump_graphs = " << (c.dump_graphs ? "true" : "false") << '\n'
      << "manifest_dir = " << c.manifest_dir.string() << '\n';
}

}  // namespace gngshape
