// Copyright 2026 The rankguard Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
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

#include "rankguard/linalg.hpp"

namespace rankguard {

/// Fast path for q = 2: a vector of F_{2^m}^len is packed as len words of m
/// bits (word j holds coordinate j) in one uint64, so m·len <= 64.
bool packed_supported(const FieldCtx& f, std::size_t len);
std::uint64_t pack(const FieldCtx& f, const ExtVector& x);
ExtVector unpack(const FieldCtx& f, std::uint64_t packed, std::size_t len);

/// Rank weight of packed vectors; uses a lookup table when m·len <= 22.
class PackedRanker {
 public:
  PackedRanker(std::uint32_t m, std::size_t len);
  std::size_t operator()(std::uint64_t v) const {
    if (!table_.empty()) return table_[v];
    return compute(v);
  }

 private:
  std::size_t compute(std::uint64_t v) const;

  std::uint32_t m_;
  std::size_t len_;
  std::uint64_t mask_;
  std::vector<std::uint8_t> table_;
};

/// Row j of an N x n binary matrix as an n-bit mask (bit i = A[j][i]).
std::vector<std::uint32_t> row_masks(const BitMatrix& a);

/// Packed x A^T for x with n words and A given by its row masks.
inline std::uint64_t packed_apply(std::uint64_t x, std::uint32_t m, std::size_t n,
                                  const std::vector<std::uint32_t>& masks) {
  const std::uint64_t word = (m == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << m) - 1);
  std::uint64_t out = 0;
  for (std::size_t j = 0; j < masks.size(); ++j) {
    std::uint64_t acc = 0;
    std::uint32_t mk = masks[j];
    while (mk) {
      const int i = __builtin_ctz(mk);
      mk &= mk - 1;
      if (static_cast<std::size_t>(i) < n) acc ^= (x >> (static_cast<std::uint32_t>(i) * m)) & word;
    }
    out |= acc << (j * m);
  }
  return out;
}

/// Rank over F_2 of n-bit row masks.
std::size_t mask_rank(const std::vector<std::uint32_t>& rows);

}  // namespace rankguard
