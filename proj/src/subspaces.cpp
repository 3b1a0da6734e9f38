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

#include "rankguard/subspaces.hpp"

#include <gmpxx.h>

#include <string>

namespace rankguard {

std::uint64_t gaussian_binomial(std::uint32_t q, std::size_t n, std::size_t k) {
  if (k > n) return 0;
  // Product of (q^{n-j} - 1) / (q^{j+1} - 1); every partial product is an integer.
  mpz_class value(1);
  mpz_class num;
  mpz_class den;
  for (std::size_t j = 0; j < k; ++j) {
    mpz_ui_pow_ui(num.get_mpz_t(), q, n - j);
    mpz_ui_pow_ui(den.get_mpz_t(), q, j + 1);
    value *= num - 1;
    value /= den - 1;
  }
  if (mpz_sizeinbase(value.get_mpz_t(), 2) > 64) return UINT64_MAX;
  return static_cast<std::uint64_t>(mpz_get_ui(value.get_mpz_t()));
}

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t pos = k; pos-- > 0;) {
    if (c[pos] < n - k + pos) {
      ++c[pos];
      for (std::size_t j = pos + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

RrefEnumerator::RrefEnumerator(std::uint32_t q, std::size_t n, std::size_t i) : q_(q), n_(n), i_(i) {
  if (i_ > n_) done_ = true;
}

void RrefEnumerator::layout() {
  free_.clear();
  std::vector<bool> is_pivot(n_, false);
  for (auto p : pivots_) is_pivot[p] = true;
  for (std::size_t r = 0; r < i_; ++r) {
    for (std::size_t c = pivots_[r] + 1; c < n_; ++c) {
      if (!is_pivot[c]) free_.emplace_back(r, c);
    }
  }
  digits_.assign(free_.size(), 0);
}

void RrefEnumerator::build(BitMatrix& out) const {
  out = bit_matrix(q_, i_, n_);
  for (std::size_t r = 0; r < i_; ++r) out(r, pivots_[r]) = ExtElement{1};
  for (std::size_t f = 0; f < free_.size(); ++f) out(free_[f].first, free_[f].second) = ExtElement{digits_[f]};
}

bool RrefEnumerator::next(BitMatrix& out) {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    pivots_.resize(i_);
    for (std::size_t r = 0; r < i_; ++r) pivots_[r] = r;
    layout();
    build(out);
    return true;
  }
  for (std::size_t f = digits_.size(); f-- > 0;) {
    if (++digits_[f] < q_) {
      build(out);
      return true;
    }
    digits_[f] = 0;
  }
  if (!next_combination(pivots_, n_)) {
    done_ = true;
    return false;
  }
  layout();
  build(out);
  return true;
}

QInvariantFamily::QInvariantFamily(FieldPtr ctx, std::size_t n, std::size_t i, std::uint64_t cap)
    : ctx_(std::move(ctx)), n_(n), i_(i), size_(gaussian_binomial(ctx_->q(), n, i)), it_(ctx_->q(), n, i) {
  if (size_ > cap) {
    throw Error(ErrorKind::EnumerationTooLarge, "[" + std::to_string(n) + " choose " + std::to_string(i) +
                                                    "]_q exceeds cap " + std::to_string(cap));
  }
}

bool QInvariantFamily::next(ExtSubspace& out, BitMatrix* base) {
  BitMatrix m;
  if (!it_.next(m)) return false;
  out = ExtSubspace::from_rows(embed(m, ctx_));
  if (base) *base = std::move(m);
  return true;
}

QInvariantFamily enumerate_qinvariant(FieldPtr ctx, std::size_t n, std::size_t i, std::uint64_t cap) {
  return QInvariantFamily(std::move(ctx), n, i, cap);
}

CoordinateFamily::CoordinateFamily(FieldPtr ctx, std::size_t n, std::size_t i) : ctx_(std::move(ctx)), n_(n), i_(i) {
  if (i_ > n_) done_ = true;
}

bool CoordinateFamily::next(ExtSubspace& out, std::vector<std::size_t>* index_set) {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    idx_.resize(i_);
    for (std::size_t r = 0; r < i_; ++r) idx_[r] = r;
  } else if (!next_combination(idx_, n_)) {
    done_ = true;
    return false;
  }
  out = coordinate_subspace(ctx_, n_, idx_);
  if (index_set) *index_set = idx_;
  return true;
}

ExtSubspace coordinate_subspace(const FieldPtr& ctx, std::size_t n, const std::vector<std::size_t>& index_set) {
  ExtMatrix g(ctx, index_set.size(), n);
  for (std::size_t r = 0; r < index_set.size(); ++r) {
    if (index_set[r] >= n) throw Error(ErrorKind::DimensionMismatch, "coordinate index out of range");
    g(r, index_set[r]) = ExtElement{1};
  }
  return ExtSubspace::from_rows(g);
}

ExtSubspace galois_closure(const ExtSubspace& v) {
  if (v.dim() == 0) return v;
  ExtMatrix stacked = v.basis();
  for (std::uint32_t i = 1; i < v.field()->m(); ++i) stacked = vstack(stacked, frobenius(v.basis(), i));
  return ExtSubspace::from_rows(stacked);
}

bool is_qinvariant(const ExtSubspace& v) {
  if (v.dim() == 0) return true;
  const ExtMatrix image = frobenius(v.basis(), 1);
  for (std::size_t r = 0; r < image.rows(); ++r) {
    if (!v.contains(image.row(r))) return false;
  }
  return true;
}

}  // namespace rankguard
