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


// gngshape: hand-shape recognition pipeline.
//
//   gngshape synth      --out DIR [--subjects N --samples N --seed S]
//   gngshape featurize  --layout L --root DIR --out DIR [--dump-graphs]
//   gngshape evaluate   SIGNATURES --protocol P [--k K] --out DIR
//   gngshape distance   A B [--out FILE]
//   gngshape dump-graph IMAGE [--depth] [--out FILE] [--bulges FILE]
//
// Every command exits 0 on success, 1 on usage errors, 2 on data errors and
// 3 on internal invariant violations, printing one "error[<code>]: ..."
// line to stderr.

#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gngshape/classify.h"
#include "gngshape/config.h"
#include "gngshape/error.h"
#include "gngshape/features.h"
#include "gngshape/iemd.h"
#include "gngshape/ingest.h"
#include "gngshape/parallel.h"
#include "gngshape/pipeline.h"
#include "gngshape/random.h"
#include "gngshape/synth.h"

namespace fs = std::filesystem;
using namespace gngshape;

namespace {

// Flags shared by the pipeline commands. Values are strings so that only
// flags actually given override the config file.
struct CommonFlags {
  std::string config;
  std::string seed;
  std::string jobs;
  std::string protocol;
  std::string k;
  std::string layout;
  std::string root;
  std::string out;
  bool dump_graphs = false;
};

void AddCommonFlags(CLI::App* cmd, CommonFlags* f) {
  cmd->add_option("--config", f->config, "key = value config file");
  cmd->add_option("--seed", f->seed, "master random seed");
  cmd->add_option("--jobs", f->jobs, "worker threads (0 = all cores)");
}

RunConfig ResolveConfig(const CommonFlags& f) {
  RunConfig c;
  const fs::path installed = GNGSHAPE_INSTALLED_MANIFEST_DIR;
  c.manifest_dir = fs::is_directory(installed) ? installed
                                               : fs::path(GNGSHAPE_SOURCE_MANIFEST_DIR);
  if (!f.config.empty()) ApplyConfigFile(f.config, c);
  auto flag = [&c](const char* key, const std::string& value) {
    if (!value.empty()) c.Set(key, value);
  };
  flag("seed", f.seed);
  flag("jobs", f.jobs);
  flag("protocol", f.protocol);
  flag("k", f.k);
  flag("layout", f.layout);
  flag("root", f.root);
  flag("out", f.out);
  if (f.dump_graphs) c.dump_graphs = true;
  c.Validate();
  return c;
}

std::ofstream OpenOutput(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path.string());
  return out;
}

std::vector<Signature> LoadSignatureFile(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot read " + path.string());
  try {
    return ReadSignatures(in);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

// "S1/G2/x.png" -> "S1__G2__x.gng"
std::string GraphFileName(const std::string& source) {
  std::string name = fs::path(source).replace_extension().generic_string();
  for (std::size_t pos; (pos = name.find('/')) != std::string::npos;) {
    name.replace(pos, 1, "__");
  }
  return name + ".gng";
}

int RunSynth(const CommonFlags& flags, int subjects, int samples,
             double scale, double rotation_deg) {
  const RunConfig c = ResolveConfig(flags);
  if (subjects < 1 || samples < 1) throw UsageError("synth: need subjects, samples >= 1");
  if (!(scale > 0.0)) throw UsageError("synth: scale must be positive");
  fs::create_directories(c.out);
  const double rotation = rotation_deg * std::numbers::pi / 180.0;
  struct Item {
    int fingers, subject, index;
  };
  std::vector<Item> items;
  for (int s = 1; s <= subjects; ++s) {
    for (int f = 0; f <= 5; ++f) {
      for (int i = 0; i < samples; ++i) items.push_back({f, s, i});
    }
  }
  ParallelFor(items.size(), c.jobs, [&](std::size_t n) {
    const Item& it = items[n];
    char name[64];
    std::snprintf(name, sizeof(name), "c%d_s%d_%03d.png", it.fingers, it.subject,
                  it.index);
    WriteMaskImage(c.out / name, SynthCorpusMask(it.fingers, it.subject, it.index,
                                                 c.seed, scale, rotation));
  });
  std::cout << "wrote " << items.size() << " masks to " << c.out.string() << '\n';
  return 0;
}

int RunFeaturize(const CommonFlags& flags) {
  const RunConfig c = ResolveConfig(flags);
  if (c.root.empty()) throw UsageError("featurize: --root is required");
  LoadOptions lo;
  lo.depth_band = c.depth_band;
  lo.jobs = c.jobs;
  lo.manifest_dir = c.manifest_dir;
  const LoadResult data = LoadDataset(c.root, ParseLayout(c.layout), lo);
  for (const std::string& w : data.warnings) std::cerr << "warning: " << w << '\n';

  const std::size_t n = data.records.size();
  std::vector<Featurized> results(n);
  ParallelFor(n, c.jobs, [&](std::size_t i) {
    GngParams p = c.gng;
    p.seed = MixSeed(c.seed, i);
    try {
      results[i] = FeaturizeMask(data.records[i].mask, p);
    } catch (const Error& e) {
      throw Error(e.code(), data.records[i].source + ": " + e.what());
    }
    results[i].analysis.signature.label = data.records[i].label;
    results[i].analysis.signature.subject = data.records[i].subject;
  });

  fs::create_directories(c.out);
  std::ofstream sig = OpenOutput(c.out / "signatures.txt");
  int truncated = 0;
  for (std::size_t i = 0; i < n; ++i) {
    WriteSignature(sig, results[i].analysis.signature);
    truncated += results[i].analysis.signature.truncated ? 1 : 0;
  }
  if (c.dump_graphs) {
    const fs::path dir = c.out / "graphs";
    fs::create_directories(dir);
    for (std::size_t i = 0; i < n; ++i) {
      std::ofstream g = OpenOutput(dir / GraphFileName(data.records[i].source));
      WriteGraph(g, results[i].graph);
    }
  }
  if (truncated > 0) {
    std::cerr << "warning: " << truncated
              << " shapes had more than six bulges; the narrowest were dropped\n";
  }
  std::cout << "featurized " << n << " records into "
            << (c.out / "signatures.txt").string() << '\n';
  return 0;
}

int RunEvaluate(const CommonFlags& flags, const std::string& signatures) {
  const RunConfig c = ResolveConfig(flags);
  const std::vector<Signature> data = LoadSignatureFile(signatures);
  const Protocol protocol = ParseProtocol(c.protocol);
  EvaluateOptions eo;
  eo.k = c.k;
  eo.seed = c.seed;
  eo.jobs = c.jobs;
  const ProtocolResult r = RunProtocol(data, protocol, eo);

  fs::create_directories(c.out);
  std::ofstream csv = OpenOutput(c.out / "confusion.csv");
  WriteConfusionCsv(csv, r.confusion);
  std::ostringstream summary;
  WriteSummary(summary, protocol, r);
  std::ofstream sum = OpenOutput(c.out / "summary.txt");
  sum << summary.str();
  std::cout << summary.str();
  return 0;
}

int RunDistance(const CommonFlags& flags, const std::string& a_path,
                const std::string& b_path, const std::string& out_path) {
  const RunConfig c = ResolveConfig(flags);
  const std::vector<Signature> a = LoadSignatureFile(a_path);
  const std::vector<Signature> b = LoadSignatureFile(b_path);
  std::vector<std::string> rows(a.size());
  ParallelFor(a.size(), c.jobs, [&](std::size_t i) {
    std::string line;
    char buf[32];
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::snprintf(buf, sizeof(buf), "%.17g", Iemd(a[i], b[j]));
      if (j > 0) line += ',';
      line += buf;
    }
    rows[i] = line + '\n';
  });
  if (out_path.empty()) {
    for (const std::string& r : rows) std::cout << r;
  } else {
    std::ofstream out = OpenOutput(out_path);
    for (const std::string& r : rows) out << r;
  }
  return 0;
}

int RunDumpGraph(const CommonFlags& flags, const std::string& image, bool depth,
                 const std::string& out_path, const std::string& bulge_path) {
  const RunConfig c = ResolveConfig(flags);
  const BinaryMask mask = depth ? SegmentDepth(ReadDepthImage(image), c.depth_band)
                                : ReadMaskImage(image);
  GngParams p = c.gng;
  p.seed = c.seed;
  const GngGraph g = TrainGng(mask, p);
  if (out_path.empty()) {
    WriteGraph(std::cout, g);
  } else {
    std::ofstream out = OpenOutput(out_path);
    WriteGraph(out, g);
  }
  if (!bulge_path.empty()) {
    const ShapeAnalysis a = AnalyzeGraph(g);
    std::ofstream out = OpenOutput(bulge_path);
    WriteBulges(out, a.bulges);
    WriteSignature(out, a.signature);
  }
  return 0;
}

std::string OneLine(std::string s) {
  for (char& ch : s) {
    if (ch == '\n' || ch == '\r') ch = ' ';
  }
  return s;
}

int Fail(int code, const std::string& what) {
  std::cerr << "error[" << code << "]: " << OneLine(what) << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"GNG hand-shape features, IEMD matching and evaluation"};
  app.require_subcommand(1);

  CommonFlags flags;

  CLI::App* synth = app.add_subcommand("synth", "write a synthetic finger-count mask corpus");
  AddCommonFlags(synth, &flags);
  int subjects = 10, samples = 10;
  double scale = 1.0, rotation = 0.0;
  synth->add_option("--out", flags.out, "output directory")->required();
  synth->add_option("--subjects", subjects, "subjects (hand proportions)");
  synth->add_option("--samples", samples, "samples per subject and finger count");
  synth->add_option("--scale", scale, "raster scale");
  synth->add_option("--rotation", rotation, "clockwise rotation in degrees");

  CLI::App* featurize = app.add_subcommand("featurize", "masks or depth maps to signatures");
  AddCommonFlags(featurize, &flags);
  featurize->add_option("--layout", flags.layout, "ntu|hku|hku-multiangle|uestc|generic-mask");
  featurize->add_option("--root", flags.root, "dataset root directory");
  featurize->add_option("--out", flags.out, "output directory");
  featurize->add_flag("--dump-graphs", flags.dump_graphs, "also write GNG graph dumps");

  CLI::App* evaluate = app.add_subcommand("evaluate", "k-NN evaluation of a signature file");
  AddCommonFlags(evaluate, &flags);
  std::string signatures;
  evaluate->add_option("signatures", signatures, "signature file")->required();
  evaluate->add_option("--protocol", flags.protocol, "h-h|l-o-o|l-<p>-o|i2i");
  evaluate->add_option("--k", flags.k, "neighbours");
  evaluate->add_option("--out", flags.out, "output directory");

  CLI::App* distance = app.add_subcommand("distance", "IEMD matrix between two signature files");
  AddCommonFlags(distance, &flags);
  std::string file_a, file_b, distance_out;
  distance->add_option("a", file_a, "row signatures")->required();
  distance->add_option("b", file_b, "column signatures")->required();
  distance->add_option("--out", distance_out, "CSV file (default stdout)");

  CLI::App* dump = app.add_subcommand("dump-graph", "train a GNG on one image and dump it");
  AddCommonFlags(dump, &flags);
  std::string image, graph_out, bulge_out;
  bool depth = false;
  dump->add_option("image", image, "mask or depth image")->required();
  dump->add_flag("--depth", depth, "image is a depth map to segment");
  dump->add_option("--out", graph_out, "graph file (default stdout)");
  dump->add_option("--bulges", bulge_out, "also write bulges and signature here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return Fail(static_cast<int>(ErrorCode::kUsage), e.what());
  }

  try {
    if (*synth) return RunSynth(flags, subjects, samples, scale, rotation);
    if (*featurize) return RunFeaturize(flags);
    if (*evaluate) return RunEvaluate(flags, signatures);
    if (*distance) return RunDistance(flags, file_a, file_b, distance_out);
    if (*dump) return RunDumpGraph(flags, image, depth, graph_out, bulge_out);
  } catch (const Error& e) {
    return Fail(static_cast<int>(e.code()), e.what());
  } catch (const fs::filesystem_error& e) {
    return Fail(static_cast<int>(ErrorCode::kData), e.what());
  } catch (const std::exception& e) {
    return Fail(static_cast<int>(ErrorCode::kInvariant), e.what());
  }
  return Fail(static_cast<int>(ErrorCode::kUsage), "no command");
}
