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


// k-nearest-neighbour classification under IEMD and the evaluation
// protocols: half/half split, leave-p-subjects-out and one image per subject.

#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "gngshape/features.h"

namespace gngshape {

// Training indices sorted by distance; equal distances keep training order.
std::vector<int> RankNeighbors(const std::vector<double>& distances);

// Majority label among the k nearest. A vote tie goes to the tied label
// whose best-ranked neighbour is nearest. Throws DataError on an empty
// training set or when fewer than k training entries exist.
int KnnVote(const std::vector<double>& distances,
            const std::vector<int>& train_labels, int k);

int KnnClassify(const Signature& test, const std::vector<Signature>& train,
                int k);

enum class ProtocolKind { kHalfHalf, kLeavePOut, kImageToImage };

struct Protocol {
  ProtocolKind kind = ProtocolKind::kHalfHalf;
  int p = 1;  // held-out subjects for kLeavePOut
};

// Accepts "h-h", "l-o-o", "l-<p>-o" and "i2i".
Protocol ParseProtocol(const std::string& text);
std::string ProtocolName(const Protocol& protocol);

class ConfusionMatrix {
 public:
  ConfusionMatrix() = default;
  explicit ConfusionMatrix(std::vector<int> labels);

  void Add(int truth, int predicted);
  ConfusionMatrix& operator+=(const ConfusionMatrix& other);

  const std::vector<int>& labels() const { return labels_; }
  // counts()[t][p]: tests of true label index t predicted as index p.
  const std::vector<std::vector<long>>& counts() const { return counts_; }
  long total() const;
  long trace() const;
  double accuracy() const;  // trace / total, 0 when empty
  // Per true label; 0 for labels without tests.
  std::vector<double> ClassAccuracy() const;

  friend bool operator==(const ConfusionMatrix&, const ConfusionMatrix&) = default;

 private:
  int IndexOf(int label) const;

  std::vector<int> labels_;
  std::vector<std::vector<long>> counts_;
};

struct Fold {
  std::vector<int> train;  // indices into the data set, ascending
  std::vector<int> test;
};

// Train/test partitions for a protocol. Every entry must carry a label and
// a subject. Deterministic in (data, protocol, seed).
std::vector<Fold> MakeFolds(const std::vector<Signature>& data,
                            const Protocol& protocol, std::uint64_t seed);

struct ProtocolResult {
  ConfusionMatrix confusion;  // summed over folds
  std::vector<double> fold_accuracy;
  // Average of the per-fold accuracies.
  double mean_accuracy = 0.0;
  int folds() const { return static_cast<int>(fold_accuracy.size()); }
};

struct EvaluateOptions {
  int k = 3;
  std::uint64_t seed = 1;
  int jobs = 1;
};

// Full pairwise IEMD matrix (row-major n*n) computed on `jobs` threads.
std::vector<double> DistanceMatrix(const std::vector<Signature>& data, int jobs);

ProtocolResult RunProtocol(const std::vector<Signature>& data,
                           const Protocol& protocol,
                           const EvaluateOptions& options);

// Same, reusing a precomputed DistanceMatrix(data).
ProtocolResult RunProtocol(const std::vector<Signature>& data,
                           const std::vector<double>& distances,
                           const Protocol& protocol,
                           const EvaluateOptions& options);

// Header row of predicted labels, then one row per true label.
void WriteConfusionCsv(std::ostream& out, const ConfusionMatrix& m);

// "protocol", "folds", "mean_accuracy", "pooled_accuracy" and one
// "class_accuracy <label> <value>" line per label.
void WriteSummary(std::ostream& out, const Protocol& protocol,
                  const ProtocolResult& result);

}  // namespace gngshape
