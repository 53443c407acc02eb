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

#include <fstream>
#include <string>

#include <gtest/gtest.h>

#include "gngshape/error.h"
#include "gngshape/synth.h"
#include "test_util.h"

namespace gngshape {
namespace {

namespace fs = std::filesystem;
using testing::ScratchDir;

void FillRect(DepthMap& d, int x0, int y0, int x1, int y1, std::uint16_t z) {
  for (int y = y0; y < y1; ++y) {
    for (int x = x0; x < x1; ++x) d.set(x, y, z);
  }
}

BinaryMask RectMask(int w, int h, int x0, int y0, int x1, int y1) {
  BinaryMask m(w, h);
  for (int y = y0; y < y1; ++y) {
    for (int x = x0; x < x1; ++x) m.set(x, y, true);
  }
  return m;
}

void WriteText(const fs::path& path, const std::string& text) {
  fs::create_directories(path.parent_path());
  std::ofstream(path) << text;
}

TEST(SegmentDepth, ConstantDepthKeepsWholeFrame) {
  const DepthMap d(12, 8, 700);
  EXPECT_EQ(SegmentDepth(d).CountForeground(), 96u);
}

TEST(SegmentDepth, KeepsNearestBandOnly) {
  DepthMap d(40, 20);
  FillRect(d, 2, 2, 12, 12, 500);
  FillRect(d, 20, 2, 35, 18, 900);
  EXPECT_EQ(SegmentDepth(d, 150), RectMask(40, 20, 2, 2, 12, 12));
  // A band reaching the far blob keeps the larger component.
  EXPECT_EQ(SegmentDepth(d, 400), RectMask(40, 20, 20, 2, 35, 18));
}

TEST(SegmentDepth, BandEdgeIsInclusive) {
  DepthMap d(4, 1);
  d.set(0, 0, 500);
  d.set(1, 0, 650);
  d.set(2, 0, 651);
  const BinaryMask m = ThresholdDepth(d, 150);
  EXPECT_TRUE(m.at(0, 0));
  EXPECT_TRUE(m.at(1, 0));
  EXPECT_FALSE(m.at(2, 0));
  EXPECT_FALSE(m.at(3, 0));  // no reading
}

TEST(SegmentDepth, DropsSpeckles) {
  DepthMap d(30, 30);
  FillRect(d, 5, 5, 20, 20, 600);
  d.set(25, 25, 610);
  d.set(27, 3, 600);
  EXPECT_EQ(SegmentDepth(d), RectMask(30, 30, 5, 5, 20, 20));
}

TEST(SegmentDepth, ForegroundGrowsWithBand) {
  Random rng(8);
  DepthMap d(32, 32);
  for (auto& z : d.depth) z = static_cast<std::uint16_t>(rng.UniformIndex(1000));
  std::size_t last = 0;
  for (int band : {0, 50, 150, 400, 1000}) {
    const std::size_t n = ThresholdDepth(d, band).CountForeground();
    EXPECT_GE(n, last);
    last = n;
  }
}

TEST(SegmentDepth, Errors) {
  EXPECT_EQ(testing::ErrorCodeOf([&] { SegmentDepth(DepthMap(5, 5)); }), ErrorCode::kData);
  EXPECT_EQ(testing::ErrorCodeOf([&] { ThresholdDepth(DepthMap(5, 5, 1), -1); }), ErrorCode::kUsage);
  EXPECT_EQ(testing::ErrorCodeOf([&] { DepthMap(0, 5); }), ErrorCode::kData);
}

TEST(Layout, Names) {
  for (const char* name : {"ntu", "hku", "hku-multiangle", "uestc", "generic-mask"}) {
    EXPECT_EQ(LayoutName(ParseLayout(name)), std::string(name));
  }
  EXPECT_EQ(testing::ErrorCodeOf([&] { ParseLayout("NTU"); }), ErrorCode::kUsage);
}

TEST(ImageIo, MaskAndDepthRoundTrip) {
  ScratchDir dir("io");
  const BinaryMask m = SynthHand(3, 1.0, 0.0, 4);
  WriteMaskImage(dir.path() / "m.png", m);
  EXPECT_EQ(ReadMaskImage(dir.path() / "m.png"), m);

  DepthMap d(7, 5);
  for (int i = 0; i < 35; ++i) d.depth[i] = static_cast<std::uint16_t>(i * 1871);
  WriteDepthImage(dir.path() / "d.png", d);
  EXPECT_EQ(ReadDepthImage(dir.path() / "d.png").depth, d.depth);

  EXPECT_EQ(testing::ErrorCodeOf([&] { ReadMaskImage(dir.path() / "missing.png"); }), ErrorCode::kData);
}

TEST(LoadDataset, GenericMasksByName) {
  ScratchDir dir("generic");
  for (int label = 0; label < 3; ++label) {
    for (int subject = 0; subject < 2; ++subject) {
      for (int i = 0; i < 2; ++i) {
        const std::string name = "c" + std::to_string(label) + "_s" +
                                 std::to_string(subject) + "_" + std::to_string(i) +
                                 ".png";
        WriteMaskImage(dir.path() / name, RectMask(6, 6, 1, 1, 2 + label, 5));
      }
    }
  }
  WriteText(dir.path() / "notes.txt", "ignored");
  LoadOptions o;
  o.jobs = 2;
  const LoadResult r = LoadDataset(dir.path(), Layout::kGenericMask, o);
  ASSERT_EQ(r.records.size(), 12u);
  EXPECT_TRUE(r.warnings.empty());
  for (std::size_t i = 1; i < r.records.size(); ++i) {
    EXPECT_LT(r.records[i - 1].source, r.records[i].source);
  }
  EXPECT_EQ(r.records[0].source, "c0_s0_0.png");
  EXPECT_EQ(r.records.back().label, 2);
  EXPECT_EQ(r.records.back().subject, 1);
  EXPECT_EQ(r.records.back().mask.CountForeground(), 12u);
}

TEST(LoadDataset, IndexFileOverridesNames) {
  ScratchDir dir("index");
  WriteMaskImage(dir.path() / "a.png", RectMask(4, 4, 0, 0, 2, 2));
  fs::create_directories(dir.path() / "sub");
  WriteMaskImage(dir.path() / "sub" / "b.png", RectMask(4, 4, 0, 0, 1, 1));
  WriteText(dir.path() / "index.csv", "path,label,subject\nsub/b.png,4,7\na.png,1,2\n");
  const LoadResult r = LoadDataset(dir.path(), Layout::kGenericMask);
  ASSERT_EQ(r.records.size(), 2u);
  EXPECT_EQ(r.records[0].source, "a.png");
  EXPECT_EQ(r.records[0].label, 1);
  EXPECT_EQ(r.records[1].subject, 7);

  WriteText(dir.path() / "index.csv", "a.png,x,2\n");
  EXPECT_EQ(testing::ErrorCodeOf([&] { LoadDataset(dir.path(), Layout::kGenericMask); }), ErrorCode::kData);
}

TEST(LoadDataset, EmptyDirectoryWarns) {
  ScratchDir dir("empty");
  const LoadResult r = LoadDataset(dir.path(), Layout::kNtu);
  EXPECT_TRUE(r.records.empty());
  ASSERT_EQ(r.warnings.size(), 1u);
  EXPECT_EQ(testing::ErrorCodeOf([&] { LoadDataset(dir.path() / "nope", Layout::kNtu); }), ErrorCode::kData);
}

TEST(LoadDataset, UnreadableImageFails) {
  ScratchDir dir("bad");
  WriteText(dir.path() / "c1_s1_0.png", "not an image");
  EXPECT_EQ(testing::ErrorCodeOf([&] { LoadDataset(dir.path(), Layout::kGenericMask); }), ErrorCode::kData);
}

TEST(LoadDataset, DepthLayoutSegmentsAndChecksManifest) {
  ScratchDir dir("ntu");
  ScratchDir manifests("manifests");
  for (int p = 1; p <= 2; ++p) {
    for (int g = 1; g <= 3; ++g) {
      DepthMap d(20, 20);
      FillRect(d, 3, 3, 10 + g, 12, 800);
      FillRect(d, 15, 15, 19, 19, 1500);  // background
      const fs::path path = dir.path() / ("P" + std::to_string(p)) /
                            ("G" + std::to_string(g)) / "frame.png";
      fs::create_directories(path.parent_path());
      WriteDepthImage(path, d);
    }
  }
  WriteText(dir.path() / "P1" / "readme.png.txt", "");
  WriteText(manifests.path() / "ntu.manifest", "layout=ntu\ntotal=6\nper_class=2\n");

  LoadOptions o;
  o.manifest_dir = manifests.path();
  LoadResult r = LoadDataset(dir.path(), Layout::kNtu, o);
  ASSERT_EQ(r.records.size(), 6u);
  EXPECT_TRUE(r.warnings.empty());
  EXPECT_EQ(r.records[0].source, "P1/G1/frame.png");
  EXPECT_EQ(r.records[0].subject, 1);
  EXPECT_EQ(r.records[0].label, 1);
  EXPECT_EQ(r.records[5].label, 3);
  EXPECT_EQ(r.records[5].mask, RectMask(20, 20, 3, 3, 13, 12));

  WriteText(manifests.path() / "ntu.manifest", "total=1000\nper_class=100\n");
  r = LoadDataset(dir.path(), Layout::kNtu, o);
  EXPECT_EQ(r.records.size(), 6u);
  ASSERT_EQ(r.warnings.size(), 1u);
  EXPECT_NE(r.warnings[0].find("1000"), std::string::npos);
  EXPECT_NE(r.warnings[0].find("1:2"), std::string::npos);

  WriteText(manifests.path() / "ntu.manifest", "colour=blue\n");
  EXPECT_EQ(testing::ErrorCodeOf([&] { ReadManifest(manifests.path(), Layout::kNtu); }), ErrorCode::kData);
  EXPECT_FALSE(ReadManifest(manifests.path(), Layout::kHku).has_value());
}

TEST(LoadDataset, ShippedManifestsParse) {
  const fs::path shipped = fs::path(GNGSHAPE_SOURCE_DIR) / "data" / "manifests";
  for (Layout l : {Layout::kNtu, Layout::kHku, Layout::kHkuMultiAngle, Layout::kUestc}) {
    const auto m = ReadManifest(shipped, l);
    ASSERT_TRUE(m.has_value()) << LayoutName(l);
    EXPECT_TRUE(m->total.has_value());
  }
}

TEST(LoadDataset, MultiAngleNeedsViewDirectory) {
  ScratchDir dir("multi");
  DepthMap d(8, 8, 900);
  for (const char* rel : {"S1/G2/front/0.png", "S1/G2/1.png"}) {
    fs::create_directories((dir.path() / rel).parent_path());
    WriteDepthImage(dir.path() / rel, d);
  }
  const LoadResult multi = LoadDataset(dir.path(), Layout::kHkuMultiAngle);
  ASSERT_EQ(multi.records.size(), 1u);
  EXPECT_EQ(multi.records[0].source, "S1/G2/front/0.png");
  EXPECT_EQ(LoadDataset(dir.path(), Layout::kHku).records.size(), 1u);
}

}  // namespace
}  // namespace gngshape
