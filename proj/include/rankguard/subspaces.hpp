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

inline constexpr std::uint64_t kDefaultEnumerationCap = 1000000;

/// Gaussian binomial [n choose k]_q, saturating at UINT64_MAX.
std::uint64_t gaussian_binomial(std::uint32_t q, std::size_t n, std::size_t k);

/// Advances `c` (a strictly increasing subset of {0..n-1}) to the next
/// combination of the same size in lexicographic order.
bool next_combination(std::vector<std::size_t>& c, std::size_t n);

/// Streams every i x n RREF matrix over F_q of rank i: pivot patterns in
/// lexicographic order, then free entries in lexicographic (row-major) order.
class RrefEnumerator {
 public:
  RrefEnumerator(std::uint32_t q, std::size_t n, std::size_t i);
  bool next(BitMatrix& out);

 private:
  void build(BitMatrix& out) const;
  void layout();

  std::uint32_t q_;
  std::size_t n_;
  std::size_t i_;
  bool started_ = false;
  bool done_ = false;
  std::vector<std::size_t> pivots_;
  std::vector<std::pair<std::size_t, std::size_t>> free_;
  std::vector<std::uint32_t> digits_;
};

/// Γ_i: the i-dimensional Frobenius-invariant subspaces of F_{q^m}^n, i.e.
/// F_q-subspaces of F_q^n lifted by the embedding.
class QInvariantFamily {
 public:
  QInvariantFamily(FieldPtr ctx, std::size_t n, std::size_t i, std::uint64_t cap = kDefaultEnumerationCap);

  std::uint64_t size() const { return size_; }
  std::size_t n() const { return n_; }
  std::size_t i() const { return i_; }
  /// Next member; the base-field basis is written to `base` when non-null.
  bool next(ExtSubspace& out, BitMatrix* base = nullptr);

 private:
  FieldPtr ctx_;
  std::size_t n_;
  std::size_t i_;
  std::uint64_t size_;
  RrefEnumerator it_;
};

QInvariantFamily enumerate_qinvariant(FieldPtr ctx, std::size_t n, std::size_t i,
                                      std::uint64_t cap = kDefaultEnumerationCap);

/// Λ_i: coordinate subspaces E_I with |I| = i, index sets in lexicographic order.
class CoordinateFamily {
 public:
  CoordinateFamily(FieldPtr ctx, std::size_t n, std::size_t i);
  bool next(ExtSubspace& out, std::vector<std::size_t>* index_set = nullptr);

 private:
  FieldPtr ctx_;
  std::size_t n_;
  std::size_t i_;
  bool started_ = false;
  bool done_ = false;
  std::vector<std::size_t> idx_;
};

ExtSubspace coordinate_subspace(const FieldPtr& ctx, std::size_t n, const std::vector<std::size_t>& index_set);

/// V* = V + V^q + ... + V^{q^{m-1}}.
ExtSubspace galois_closure(const ExtSubspace& v);
bool is_qinvariant(const ExtSubspace& v);

}  // namespace rankguard
