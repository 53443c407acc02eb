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

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace gngshape {

// Square 0/1 matrix over the boolean semiring (OR of ANDs), stored as packed
// row bitsets. Entry (i, j) of the k-th power is set iff a walk of length k
// leads from i to j.
class BoolMatrix {
 public:
  BoolMatrix() = default;
  explicit BoolMatrix(int n);

  static BoolMatrix Identity(int n);

  int size() const { return n_; }

  bool get(int i, int j) const {
    return (row(i)[j >> 6] >> (j & 63)) & 1u;
  }
  void set(int i, int j, bool value = true);

  // Entry-wise OR.
  BoolMatrix operator|(const BoolMatrix& other) const;
  // Set difference: 1 where this is 1 and other is 0.
  BoolMatrix Minus(const BoolMatrix& other) const;
  // Boolean product.
  BoolMatrix operator*(const BoolMatrix& other) const;

  // True when every set entry of this is also set in other.
  bool IsSubsetOf(const BoolMatrix& other) const;
  bool IsZero() const;
  std::size_t Count() const;

  friend bool operator==(const BoolMatrix&, const BoolMatrix&) = default;

 private:
  const std::uint64_t* row(int i) const {
    return words_.data() + static_cast<std::size_t>(i) * stride_;
  }
  std::uint64_t* row(int i) {
    return words_.data() + static_cast<std::size_t>(i) * stride_;
  }
  void CheckSameSize(const BoolMatrix& other) const;

  int n_ = 0;
  int stride_ = 0;
  std::vector<std::uint64_t> words_;
};

// Powers M^1 .. M^max_power; element k-1 holds M^k.
std::vector<BoolMatrix> Powers(const BoolMatrix& m, int max_power);

}  // namespace gngshape
