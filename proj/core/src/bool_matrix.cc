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

#include "gngshape/bool_matrix.h"

#include <bit>
#include <string>

#include "gngshape/error.h"

namespace gngshape {

BoolMatrix::BoolMatrix(int n)
    : n_(n), stride_((n + 63) / 64),
      words_(static_cast<std::size_t>(n) * ((n + 63) / 64), 0) {}

BoolMatrix BoolMatrix::Identity(int n) {
  BoolMatrix m(n);
  for (int i = 0; i < n; ++i) m.set(i, i);
  return m;
}

void BoolMatrix::set(int i, int j, bool value) {
  const std::uint64_t bit = std::uint64_t{1} << (j & 63);
  if (value) {
    row(i)[j >> 6] |= bit;
  } else {
    row(i)[j >> 6] &= ~bit;
  }
}

void BoolMatrix::CheckSameSize(const BoolMatrix& other) const {
  if (n_ != other.n_) {
    throw DataError("matrix dimension mismatch: " + std::to_string(n_) +
                    " vs " + std::to_string(other.n_));
  }
}

BoolMatrix BoolMatrix::operator|(const BoolMatrix& other) const {
  CheckSameSize(other);
  BoolMatrix out = *this;
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] |= other.words_[w];
  return out;
}

BoolMatrix BoolMatrix::Minus(const BoolMatrix& other) const {
  CheckSameSize(other);
  BoolMatrix out = *this;
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] &= ~other.words_[w];
  return out;
}

BoolMatrix BoolMatrix::operator*(const BoolMatrix& other) const {
  CheckSameSize(other);
  BoolMatrix out(n_);
  for (int i = 0; i < n_; ++i) {
    std::uint64_t* dst = out.row(i);
    const std::uint64_t* src = row(i);
    for (int wk = 0; wk < stride_; ++wk) {
      std::uint64_t bits = src[wk];
      while (bits != 0) {
        const int k = wk * 64 + std::countr_zero(bits);
        bits &= bits - 1;
        const std::uint64_t* rk = other.row(k);
        for (int w = 0; w < stride_; ++w) dst[w] |= rk[w];
      }
    }
  }
  return out;
}

bool BoolMatrix::IsSubsetOf(const BoolMatrix& other) const {
  CheckSameSize(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] & ~other.words_[w]) return false;
  }
  return true;
}

bool BoolMatrix::IsZero() const {
  for (std::uint64_t w : words_) {
    if (w != 0) return false;
  }
  return true;
}

std::size_t BoolMatrix::Count() const {
  std::size_t c = 0;
  for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::vector<BoolMatrix> Powers(const BoolMatrix& m, int max_power) {
  std::vector<BoolMatrix> out;
  if (max_power < 1) return out;
  out.reserve(max_power);
  out.push_back(m);
  for (int k = 2; k <= max_power; ++k) out.push_back(out.back() * m);
  return out;
}

}  // namespace gngshape
