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

/// An [n,k] linear code over F_{q^m}; the generator is kept in RREF.
class LinearCode {
 public:
  LinearCode() = default;
  /// Any generator; dependent rows are dropped, so k = rank.
  explicit LinearCode(const ExtMatrix& generator);

  static LinearCode zero(const FieldPtr& ctx, std::size_t n);
  static LinearCode full(const FieldPtr& ctx, std::size_t n);

  const FieldPtr& ctx() const { return gen_.field(); }
  std::size_t n() const { return gen_.cols(); }
  std::size_t k() const { return gen_.rows(); }
  const ExtMatrix& gen() const { return gen_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  ExtSubspace subspace() const { return ExtSubspace::from_rows(gen_); }

  /// Number of codewords, saturating at UINT64_MAX.
  std::uint64_t size() const;
  ExtVector encode(const ExtVector& message) const;
  /// Codeword whose message digits (base q^m, little-endian) are `index`.
  ExtVector codeword(std::uint64_t index) const;
  bool contains(const ExtVector& v) const;

  friend bool operator==(const LinearCode& a, const LinearCode& b) { return a.gen_ == b.gen_; }
  friend bool operator!=(const LinearCode& a, const LinearCode& b) { return !(a == b); }

 private:
  ExtMatrix gen_;
  std::vector<std::size_t> pivots_;
};

/// Decomposes a message index into k digits in base q^m.
ExtVector index_to_message(std::uint64_t index, std::size_t k, std::uint32_t base);

/// [n,k] Gabidulin code with generator G[i][j] = g_j^{q^i}.
LinearCode gabidulin(const FieldPtr& ctx, std::size_t n, std::size_t k, const ExtVector& points);
/// Points 1, α, ..., α^{n-1}.
LinearCode gabidulin(const FieldPtr& ctx, std::size_t n, std::size_t k);
ExtVector default_gabidulin_points(const FieldCtx& ctx, std::size_t n);

struct SystematicForm {
  LinearCode code;
  ExtMatrix transform;  // transform * input generator = [I | P]
  ExtMatrix parity;     // P
};

/// Never permutes columns; throws NotSystematizable when the first k columns
/// of the generator are dependent.
SystematicForm systematic_form(const ExtMatrix& generator);
SystematicForm systematic_form(const LinearCode& code);

LinearCode dual(const LinearCode& code);
/// P_keep(C): restriction of every codeword to `keep`.
LinearCode puncture(const LinearCode& code, const std::vector<std::size_t>& keep);
/// C_keep: codewords vanishing outside `keep`, restricted to `keep`.
LinearCode shorten(const LinearCode& code, const std::vector<std::size_t>& keep);
/// True iff inner ⊆ outer.
bool contains(const LinearCode& outer, const LinearCode& inner);
/// Basis (RREF rows) of C ∩ F_q^n.
BitMatrix subfield_subcode(const LinearCode& code);
/// C1 ∩ C2.
LinearCode intersect(const LinearCode& a, const LinearCode& b);
/// Row space of the two generators together.
LinearCode code_sum(const LinearCode& a, const LinearCode& b);

/// Minimum nonzero rank weight by exhaustive scan; needs k >= 1 and at most
/// `cap` codewords.
std::size_t min_rank_distance(const LinearCode& code, std::uint64_t cap = std::uint64_t{1} << 20);
/// Minimum rank weight over C1 \ C2.
std::size_t min_rank_weight_outside(const LinearCode& c1, const LinearCode& c2,
                                    std::uint64_t cap = std::uint64_t{1} << 20);

}  // namespace rankguard
