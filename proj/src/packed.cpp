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

#include "rankguard/packed.hpp"

namespace rankguard {

bool packed_supported(const FieldCtx& f, std::size_t len) {
  return f.q() == 2 && static_cast<std::size_t>(f.m()) * len <= 64;
}

std::uint64_t pack(const FieldCtx& f, const ExtVector& x) {
  std::uint64_t out = 0;
  for (std::size_t j = 0; j < x.size(); ++j) out |= std::uint64_t{x[j].v} << (j * f.m());
  return out;
}

ExtVector unpack(const FieldCtx& f, std::uint64_t packed, std::size_t len) {
  const std::uint64_t word = (std::uint64_t{1} << f.m()) - 1;
  ExtVector out(len);
  for (std::size_t j = 0; j < len; ++j) out[j] = ExtElement{static_cast<std::uint32_t>((packed >> (j * f.m())) & word)};
  return out;
}

PackedRanker::PackedRanker(std::uint32_t m, std::size_t len)
    : m_(m), len_(len), mask_(m >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1) {
  const std::size_t bits = static_cast<std::size_t>(m) * len;
  if (bits <= 22) {
    table_.resize(std::size_t{1} << bits);
    for (std::uint64_t v = 0; v < table_.size(); ++v) table_[v] = static_cast<std::uint8_t>(compute(v));
  }
}

std::size_t PackedRanker::compute(std::uint64_t v) const {
  std::uint64_t basis[64] = {};
  std::size_t r = 0;
  for (std::size_t j = 0; j < len_; ++j) {
    std::uint64_t w = (v >> (j * m_)) & mask_;
    while (w) {
      const int top = 63 - __builtin_clzll(w);
      if (!basis[top]) {
        basis[top] = w;
        ++r;
        break;
      }
      w ^= basis[top];
    }
  }
  return r;
}

std::vector<std::uint32_t> row_masks(const BitMatrix& a) {
  std::vector<std::uint32_t> out(a.rows(), 0);
  for (std::size_t j = 0; j < a.rows(); ++j) {
    for (std::size_t i = 0; i < a.cols(); ++i) {
      if (a(j, i).v) out[j] |= 1u << i;
    }
  }
  return out;
}

std::size_t mask_rank(const std::vector<std::uint32_t>& rows) {
  std::uint32_t basis[32] = {};
  std::size_t r = 0;
  for (auto w : rows) {
    while (w) {
      const int top = 31 - __builtin_clz(w);
      if (!basis[top]) {
        basis[top] = w;
        ++r;
        break;
      }
      w ^= basis[top];
    }
  }
  return r;
}

}  // namespace rankguard
