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


#include "gngshape/ingest.h"

#include <algorithm>
#include <fstream>
#include <limits>
#include <regex>
#include <sstream>
#include <utility>

#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>

#include "gngshape/error.h"
#include "gngshape/parallel.h"

namespace gngshape {
namespace fs = std::filesystem;
namespace {

struct LayoutRule {
  Layout layout;
  const char* name;
  const char* pattern;  // groups: subject, label
  bool subject_first;
  bool depth;
};

constexpr LayoutRule kRules[] = {
    {Layout::kNtu, "ntu", R"(^P(\d+)/G(\d+)/[^/]+\.png$)", true, true},
    {Layout::kHku, "hku", R"(^S(\d+)/G(\d+)/[^/]+\.png$)", true, true},
    {Layout::kHkuMultiAngle, "hku-multiangle", R"(^S(\d+)/G(\d+)/[^/]+/[^/]+\.png$)",
     true, true},
    {Layout::kUestc, "uestc", R"(^S(\d+)/G(\d+)/[^/]+\.png$)", true, true},
    {Layout::kGenericMask, "generic-mask", R"((?:^|/)c(\d+)_s(\d+)_[^/]*\.png$)",
     false, false},
};

const LayoutRule& RuleFor(Layout layout) {
  for (const LayoutRule& r : kRules) {
    if (r.layout == layout) return r;
  }
  throw InvariantError("unknown layout");
}

int ParseId(const std::string& text, const std::string& what,
            const std::string& where) {
  try {
    std::size_t used = 0;
    const long v = std::stol(text, &used);
    if (used == text.size() && v >= 0 && v <= std::numeric_limits<int>::max()) {
      return static_cast<int>(v);
    }
  } catch (const std::exception&) {
  }
  throw DataError(where + ": bad " + what + " '" + text + "'");
}

std::string Trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

struct Entry {
  std::string rel;
  int label;
  int subject;
};

std::vector<Entry> EntriesFromIndex(const fs::path& index) {
  std::ifstream in(index);
  if (!in) throw DataError("cannot read " + index.string());
  std::vector<Entry> entries;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = Trim(line);
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::stringstream ls(line);
    for (std::string f; std::getline(ls, f, ',');) fields.push_back(Trim(f));
    const std::string where = index.string() + ":" + std::to_string(line_no);
    if (fields.size() != 3) throw DataError(where + ": expected path,label,subject");
    if (line_no == 1 && fields[0] == "path") continue;
    entries.push_back({fields[0], ParseId(fields[1], "label", where),
                       ParseId(fields[2], "subject", where)});
  }
  return entries;
}

std::vector<Entry> EntriesFromNames(const fs::path& root, const LayoutRule& rule) {
  const std::regex re(rule.pattern);
  std::vector<Entry> entries;
  for (const fs::directory_entry& e : fs::recursive_directory_iterator(root)) {
    if (!e.is_regular_file()) continue;
    const std::string rel = fs::relative(e.path(), root).generic_string();
    std::smatch m;
    if (!std::regex_search(rel, m, re)) continue;
    const int a = ParseId(m[1].str(), "id", rel);
    const int b = ParseId(m[2].str(), "id", rel);
    entries.push_back(rule.subject_first ? Entry{rel, b, a} : Entry{rel, a, b});
  }
  return entries;
}

std::string Tallies(const std::vector<DatasetRecord>& records) {
  std::map<int, long> per_label;
  for (const DatasetRecord& r : records) ++per_label[r.label];
  std::string s;
  for (const auto& [label, n] : per_label) {
    if (!s.empty()) s += ", ";
    s += std::to_string(label) + ":" + std::to_string(n);
  }
  return s.empty() ? "none" : s;
}

}  // namespace

DepthMap::DepthMap(int w, int h, std::uint16_t fill)
    : width(w), height(h), depth(static_cast<std::size_t>(w) * h, fill) {
  if (w <= 0 || h <= 0) throw DataError("depth map dimensions must be positive");
}

BinaryMask ThresholdDepth(const DepthMap& d, int band) {
  if (band < 0) throw UsageError("depth band must be non-negative");
  std::uint16_t z0 = std::numeric_limits<std::uint16_t>::max();
  bool any = false;
  for (std::uint16_t z : d.depth) {
    if (z != 0) {
      z0 = std::min(z0, z);
      any = true;
    }
  }
  if (!any) throw DataError("depth map has no valid pixels");
  const long hi = static_cast<long>(z0) + band;
  BinaryMask mask(d.width, d.height);
  for (int y = 0; y < d.height; ++y) {
    for (int x = 0; x < d.width; ++x) {
      const std::uint16_t z = d.at(x, y);
      if (z != 0 && z <= hi) mask.set(x, y, true);
    }
  }
  return mask;
}

BinaryMask SegmentDepth(const DepthMap& d, int band) {
  return LargestComponent(ThresholdDepth(d, band));
}

Layout ParseLayout(const std::string& name) {
  for (const LayoutRule& r : kRules) {
    if (name == r.name) return r.layout;
  }
  throw UsageError("unknown layout '" + name +
                   "' (expected ntu, hku, hku-multiangle, uestc or generic-mask)");
}

const char* LayoutName(Layout layout) { return RuleFor(layout).name; }

std::optional<Manifest> ReadManifest(const fs::path& dir, Layout layout) {
  const fs::path path = dir / (std::string(LayoutName(layout)) + ".manifest");
  std::ifstream in(path);
  if (!in) return std::nullopt;
  Manifest m;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = Trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    const std::string where = path.string() + ":" + std::to_string(line_no);
    if (eq == std::string::npos) throw DataError(where + ": expected key=value");
    const std::string key = Trim(line.substr(0, eq));
    const std::string value = Trim(line.substr(eq + 1));
    if (key == "total") {
      m.total = ParseId(value, "total", where);
    } else if (key == "per_class") {
      m.per_class = ParseId(value, "per_class", where);
    } else if (key != "layout" && key != "source") {
      throw DataError(where + ": unknown key '" + key + "'");
    }
  }
  return m;
}

LoadResult LoadDataset(const fs::path& root, Layout layout,
                       const LoadOptions& options) {
  if (!fs::is_directory(root)) {
    throw DataError("dataset root is not a directory: " + root.string());
  }
  const LayoutRule& rule = RuleFor(layout);
  const fs::path index = root / "index.csv";
  std::vector<Entry> entries = fs::exists(index) ? EntriesFromIndex(index)
                                                 : EntriesFromNames(root, rule);
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.rel < b.rel; });

  LoadResult result;
  result.records.resize(entries.size());
  ParallelFor(entries.size(), options.jobs, [&](std::size_t i) {
    const Entry& e = entries[i];
    const fs::path path = root / e.rel;
    DatasetRecord& r = result.records[i];
    r.mask = rule.depth ? SegmentDepth(ReadDepthImage(path), options.depth_band)
                        : ReadMaskImage(path);
    r.label = e.label;
    r.subject = e.subject;
    r.source = e.rel;
  });

  if (result.records.empty()) {
    result.warnings.push_back("no " + std::string(rule.name) + " records under " +
                              root.string());
  }
  if (!options.manifest_dir.empty()) {
    if (const auto m = ReadManifest(options.manifest_dir, layout)) {
      const long n = static_cast<long>(result.records.size());
      bool off = m->total && *m->total != n;
      if (m->per_class) {
        std::map<int, long> per_label;
        for (const DatasetRecord& r : result.records) ++per_label[r.label];
        for (const auto& [label, count] : per_label) off |= count != *m->per_class;
      }
      if (off) {
        result.warnings.push_back(
            std::string(rule.name) + ": found " + std::to_string(n) +
            " records, manifest expects " +
            (m->total ? std::to_string(*m->total) : std::string("?")) +
            " (per label " + Tallies(result.records) + ")");
      }
    }
  }
  return result;
}

DepthMap ReadDepthImage(const fs::path& path) {
  const cv::Mat img = cv::imread(path.string(), cv::IMREAD_ANYDEPTH);
  if (img.empty()) throw DataError("cannot read depth image " + path.string());
  if (img.channels() != 1 || (img.depth() != CV_16U && img.depth() != CV_8U)) {
    throw DataError("depth image must be single-channel 8 or 16 bit: " +
                    path.string());
  }
  DepthMap d(img.cols, img.rows);
  for (int y = 0; y < img.rows; ++y) {
    for (int x = 0; x < img.cols; ++x) {
      d.set(x, y, img.depth() == CV_16U ? img.at<std::uint16_t>(y, x)
                                        : img.at<std::uint8_t>(y, x));
    }
  }
  return d;
}

BinaryMask ReadMaskImage(const fs::path& path) {
  const cv::Mat img = cv::imread(path.string(), cv::IMREAD_GRAYSCALE);
  if (img.empty()) throw DataError("cannot read mask image " + path.string());
  BinaryMask m(img.cols, img.rows);
  for (int y = 0; y < img.rows; ++y) {
    for (int x = 0; x < img.cols; ++x) m.set(x, y, img.at<std::uint8_t>(y, x) != 0);
  }
  return m;
}

void WriteMaskImage(const fs::path& path, const BinaryMask& mask) {
  cv::Mat img(mask.height(), mask.width(), CV_8UC1, cv::Scalar(0));
  for (int y = 0; y < mask.height(); ++y) {
    for (int x = 0; x < mask.width(); ++x) {
      if (mask.at(x, y)) img.at<std::uint8_t>(y, x) = 255;
    }
  }
  if (!cv::imwrite(path.string(), img)) {
    throw DataError("cannot write " + path.string());
  }
}

void WriteDepthImage(const fs::path& path, const DepthMap& depth) {
  cv::Mat img(depth.height, depth.width, CV_16UC1);
  for (int y = 0; y < depth.height; ++y) {
    for (int x = 0; x < depth.width; ++x) img.at<std::uint16_t>(y, x) = depth.at(x, y);
  }
  if (!cv::imwrite(path.string(), img)) {
    throw DataError("cannot write " + path.string());
  }
}

}  // namespace gngshape
