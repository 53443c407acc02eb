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


#include "gngshape/classify.h"

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <utility>

#include "gngshape/error.h"
#include "gngshape/iemd.h"
#include "gngshape/parallel.h"
#include "gngshape/random.h"

namespace gngshape {
namespace {

void RequireTags(const std::vector<Signature>& data) {
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (!data[i].label || !data[i].subject) {
      throw DataError("signature " + std::to_string(i + 1) +
                      " lacks a label or subject");
    }
  }
}

// (subject, label) -> member indices in data order.
std::map<std::pair<int, int>, std::vector<int>> GroupBySubjectLabel(
    const std::vector<Signature>& data) {
  std::map<std::pair<int, int>, std::vector<int>> groups;
  for (int i = 0; i < static_cast<int>(data.size()); ++i) {
    groups[{*data[i].subject, *data[i].label}].push_back(i);
  }
  return groups;
}

// Calls visit(chosen) for every p-subset of {0..n-1} in lexicographic order.
void ForEachCombination(int n, int p,
                        const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> chosen(p);
  std::iota(chosen.begin(), chosen.end(), 0);
  while (true) {
    visit(chosen);
    int i = p - 1;
    while (i >= 0 && chosen[i] == n - p + i) --i;
    if (i < 0) return;
    ++chosen[i];
    for (int j = i + 1; j < p; ++j) chosen[j] = chosen[j - 1] + 1;
  }
}

std::vector<int> SortedLabels(const std::vector<Signature>& data) {
  std::set<int> labels;
  for (const Signature& s : data) labels.insert(*s.label);
  return {labels.begin(), labels.end()};
}

}  // namespace

std::vector<int> RankNeighbors(const std::vector<double>& distances) {
  std::vector<int> order(distances.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&distances](int a, int b) {
    return distances[a] < distances[b];
  });
  return order;
}

int KnnVote(const std::vector<double>& distances,
            const std::vector<int>& train_labels, int k) {
  if (k < 1) throw UsageError("knn: k must be >= 1");
  if (distances.size() != train_labels.size()) {
    throw InvariantError("knn: distance and label counts differ");
  }
  if (train_labels.empty()) throw DataError("knn: empty training set");
  if (static_cast<int>(train_labels.size()) < k) {
    throw DataError("knn: training set smaller than k");
  }
  const std::vector<int> ranked = RankNeighbors(distances);
  // label -> (votes, rank of its nearest member)
  std::map<int, std::pair<int, int>> tally;
  for (int r = 0; r < k; ++r) {
    auto [it, fresh] = tally.try_emplace(train_labels[ranked[r]], 0, r);
    ++it->second.first;
  }
  int best = -1, best_votes = -1, best_rank = 0;
  for (const auto& [label, stat] : tally) {
    if (stat.first > best_votes ||
        (stat.first == best_votes && stat.second < best_rank)) {
      best = label;
      best_votes = stat.first;
      best_rank = stat.second;
    }
  }
  return best;
}

int KnnClassify(const Signature& test, const std::vector<Signature>& train,
                int k) {
  std::vector<double> d(train.size());
  std::vector<int> labels(train.size());
  for (std::size_t i = 0; i < train.size(); ++i) {
    if (!train[i].label) {
      throw DataError("knn: training signature " + std::to_string(i + 1) +
                      " has no label");
    }
    d[i] = Iemd(test, train[i]);
    labels[i] = *train[i].label;
  }
  return KnnVote(d, labels, k);
}

Protocol ParseProtocol(const std::string& text) {
  if (text == "h-h") return {ProtocolKind::kHalfHalf, 0};
  if (text == "i2i") return {ProtocolKind::kImageToImage, 0};
  if (text == "l-o-o") return {ProtocolKind::kLeavePOut, 1};
  int p = 0;
  char tail = 0;
  if (std::sscanf(text.c_str(), "l-%d-%c", &p, &tail) == 2 && tail == 'o' &&
      text == "l-" + std::to_string(p) + "-o" && p >= 1) {
    return {ProtocolKind::kLeavePOut, p};
  }
  throw UsageError("unknown protocol '" + text +
                   "' (expected h-h, l-o-o, l-<p>-o or i2i)");
}

std::string ProtocolName(const Protocol& protocol) {
  switch (protocol.kind) {
    case ProtocolKind::kHalfHalf:
      return "h-h";
    case ProtocolKind::kImageToImage:
      return "i2i";
    case ProtocolKind::kLeavePOut:
      return protocol.p == 1 ? "l-o-o" : "l-" + std::to_string(protocol.p) + "-o";
  }
  return "?";
}

ConfusionMatrix::ConfusionMatrix(std::vector<int> labels)
    : labels_(std::move(labels)),
      counts_(labels_.size(), std::vector<long>(labels_.size(), 0)) {
  if (!std::is_sorted(labels_.begin(), labels_.end()) ||
      std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end()) {
    throw InvariantError("confusion: labels must be sorted and distinct");
  }
}

int ConfusionMatrix::IndexOf(int label) const {
  const auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) {
    throw InvariantError("confusion: unknown label " + std::to_string(label));
  }
  return static_cast<int>(it - labels_.begin());
}

void ConfusionMatrix::Add(int truth, int predicted) {
  ++counts_[IndexOf(truth)][IndexOf(predicted)];
}

ConfusionMatrix& ConfusionMatrix::operator+=(const ConfusionMatrix& other) {
  if (other.labels_ != labels_) {
    throw InvariantError("confusion: label sets differ");
  }
  for (std::size_t t = 0; t < counts_.size(); ++t) {
    for (std::size_t p = 0; p < counts_.size(); ++p) {
      counts_[t][p] += other.counts_[t][p];
    }
  }
  return *this;
}

long ConfusionMatrix::total() const {
  long n = 0;
  for (const auto& row : counts_) n = std::accumulate(row.begin(), row.end(), n);
  return n;
}

long ConfusionMatrix::trace() const {
  long n = 0;
  for (std::size_t i = 0; i < counts_.size(); ++i) n += counts_[i][i];
  return n;
}

double ConfusionMatrix::accuracy() const {
  const long n = total();
  return n == 0 ? 0.0 : static_cast<double>(trace()) / static_cast<double>(n);
}

std::vector<double> ConfusionMatrix::ClassAccuracy() const {
  std::vector<double> acc(counts_.size(), 0.0);
  for (std::size_t t = 0; t < counts_.size(); ++t) {
    const long row = std::accumulate(counts_[t].begin(), counts_[t].end(), 0L);
    if (row > 0) acc[t] = static_cast<double>(counts_[t][t]) / static_cast<double>(row);
  }
  return acc;
}

std::vector<Fold> MakeFolds(const std::vector<Signature>& data,
                            const Protocol& protocol, std::uint64_t seed) {
  RequireTags(data);
  if (data.empty()) throw DataError("evaluate: empty data set");
  std::vector<Fold> folds;

  switch (protocol.kind) {
    case ProtocolKind::kHalfHalf:
    case ProtocolKind::kImageToImage: {
      Fold fold;
      std::uint64_t stream = 0;
      for (auto& [key, members] : GroupBySubjectLabel(data)) {
        Random rng(MixSeed(seed, stream++));
        rng.Shuffle(members.begin(), members.end());
        const std::size_t n_train = protocol.kind == ProtocolKind::kHalfHalf
                                        ? (members.size() + 1) / 2
                                        : 1;
        fold.train.insert(fold.train.end(), members.begin(),
                          members.begin() + n_train);
        fold.test.insert(fold.test.end(), members.begin() + n_train, members.end());
      }
      std::sort(fold.train.begin(), fold.train.end());
      std::sort(fold.test.begin(), fold.test.end());
      if (fold.test.empty()) {
        throw DataError(ProtocolName(protocol) +
                        ": every (subject, label) group has a single sample");
      }
      folds.push_back(std::move(fold));
      break;
    }
    case ProtocolKind::kLeavePOut: {
      std::set<int> subject_set;
      for (const Signature& s : data) subject_set.insert(*s.subject);
      const std::vector<int> subjects(subject_set.begin(), subject_set.end());
      const int n = static_cast<int>(subjects.size());
      if (protocol.p < 1 || protocol.p >= n) {
        throw DataError(ProtocolName(protocol) + ": needs more than " +
                        std::to_string(protocol.p) + " subjects, data has " +
                        std::to_string(n));
      }
      ForEachCombination(n, protocol.p, [&](const std::vector<int>& held) {
        std::set<int> out;
        for (int i : held) out.insert(subjects[i]);
        Fold fold;
        for (int i = 0; i < static_cast<int>(data.size()); ++i) {
          (out.count(*data[i].subject) ? fold.test : fold.train).push_back(i);
        }
        folds.push_back(std::move(fold));
      });
      break;
    }
  }
  return folds;
}

std::vector<double> DistanceMatrix(const std::vector<Signature>& data, int jobs) {
  const std::size_t n = data.size();
  std::vector<double> d(n * n, 0.0);
  ParallelFor(n, jobs, [&](std::size_t i) {
    for (std::size_t j = i + 1; j < n; ++j) d[i * n + j] = Iemd(data[i], data[j]);
  });
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) d[j * n + i] = d[i * n + j];
  }
  return d;
}

ProtocolResult RunProtocol(const std::vector<Signature>& data,
                           const Protocol& protocol,
                           const EvaluateOptions& options) {
  RequireTags(data);
  return RunProtocol(data, DistanceMatrix(data, options.jobs), protocol, options);
}

ProtocolResult RunProtocol(const std::vector<Signature>& data,
                           const std::vector<double>& distances,
                           const Protocol& protocol,
                           const EvaluateOptions& options) {
  const std::vector<Fold> folds = MakeFolds(data, protocol, options.seed);
  const std::size_t n = data.size();
  if (distances.size() != n * n) {
    throw InvariantError("evaluate: distance matrix does not match data");
  }
  const std::vector<int> labels = SortedLabels(data);

  std::vector<ConfusionMatrix> per_fold(folds.size(), ConfusionMatrix(labels));
  ParallelFor(folds.size(), options.jobs, [&](std::size_t f) {
    const Fold& fold = folds[f];
    std::vector<int> train_labels;
    train_labels.reserve(fold.train.size());
    for (int i : fold.train) train_labels.push_back(*data[i].label);
    std::vector<double> row(fold.train.size());
    for (int t : fold.test) {
      for (std::size_t r = 0; r < fold.train.size(); ++r) {
        row[r] = distances[t * n + fold.train[r]];
      }
      per_fold[f].Add(*data[t].label, KnnVote(row, train_labels, options.k));
    }
  });

  ProtocolResult result;
  result.confusion = ConfusionMatrix(labels);
  double sum = 0.0;
  for (const ConfusionMatrix& m : per_fold) {
    result.confusion += m;
    result.fold_accuracy.push_back(m.accuracy());
    sum += m.accuracy();
  }
  result.mean_accuracy = sum / static_cast<double>(per_fold.size());
  return result;
}

void WriteConfusionCsv(std::ostream& out, const ConfusionMatrix& m) {
  out << "true\\predicted";
  for (int l : m.labels()) out << ',' << l;
  out << '\n';
  for (std::size_t t = 0; t < m.labels().size(); ++t) {
    out << m.labels()[t];
    for (long c : m.counts()[t]) out << ',' << c;
    out << '\n';
  }
}

void WriteSummary(std::ostream& out, const Protocol& protocol,
                  const ProtocolResult& result) {
  char buf[64];
  auto fmt = [&buf](double v) {
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return std::string(buf);
  };
  out << "protocol " << ProtocolName(protocol) << '\n';
  out << "folds " << result.folds() << '\n';
  out << "tests " << result.confusion.total() << '\n';
  out << "mean_accuracy " << fmt(result.mean_accuracy) << '\n';
  out << "pooled_accuracy " << fmt(result.confusion.accuracy()) << '\n';
  const std::vector<double> acc = result.confusion.ClassAccuracy();
  for (std::size_t t = 0; t < acc.size(); ++t) {
    out << "class_accuracy " << result.confusion.labels()[t] << ' ' << fmt(acc[t])
        << '\n';
  }
}

}  // namespace gngshape
