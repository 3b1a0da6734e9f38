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

#include "rankguard/codes.hpp"

#include <algorithm>
#include <string>

#include "rankguard/rank_metrics.hpp"

namespace rankguard {

namespace {

std::uint64_t saturating_pow(std::uint64_t base, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (r > UINT64_MAX / base) return UINT64_MAX;
    r *= base;
  }
  return r;
}

void check_index_set(const std::vector<std::size_t>& idx, std::size_t n) {
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] >= n) throw Error(ErrorKind::DimensionMismatch, "coordinate " + std::to_string(idx[i]) + " out of range");
    if (i > 0 && idx[i] <= idx[i - 1]) throw Error(ErrorKind::DimensionMismatch, "index set must be strictly increasing");
  }
}

}  // namespace

LinearCode::LinearCode(const ExtMatrix& generator) {
  auto r = rref(generator);
  gen_ = leading_rows(r.echelon, r.rank);
  pivots_ = r.pivots;
}

LinearCode LinearCode::zero(const FieldPtr& ctx, std::size_t n) { return LinearCode(ExtMatrix(ctx, 0, n)); }

LinearCode LinearCode::full(const FieldPtr& ctx, std::size_t n) { return LinearCode(ExtMatrix::identity(ctx, n)); }

std::uint64_t LinearCode::size() const { return saturating_pow(ctx()->size(), k()); }

ExtVector LinearCode::encode(const ExtVector& message) const {
  if (message.size() != k()) throw Error(ErrorKind::LengthMismatch, "message length differs from k");
  return vec_mat(gen_, message);
}

ExtVector index_to_message(std::uint64_t index, std::size_t k, std::uint32_t base) {
  ExtVector msg(k);
  for (std::size_t i = 0; i < k; ++i) {
    msg[i] = ExtElement{static_cast<std::uint32_t>(index % base)};
    index /= base;
  }
  return msg;
}

ExtVector LinearCode::codeword(std::uint64_t index) const {
  return encode(index_to_message(index, k(), ctx()->size()));
}

bool LinearCode::contains(const ExtVector& v) const {
  if (v.size() != n()) throw Error(ErrorKind::LengthMismatch, "vector length differs from n");
  if (vec_is_zero(v)) return true;
  if (k() == 0) return false;
  // RREF generator: the candidate message is read off the pivot columns.
  ExtVector msg(k());
  for (std::size_t i = 0; i < k(); ++i) msg[i] = v[pivots_[i]];
  return encode(msg) == v;
}

ExtVector default_gabidulin_points(const FieldCtx& ctx, std::size_t n) {
  ExtVector pts(n);
  for (std::size_t j = 0; j < n; ++j) pts[j] = ctx.pow(ctx.alpha(), j);
  return pts;
}

LinearCode gabidulin(const FieldPtr& ctx, std::size_t n, std::size_t k, const ExtVector& points) {
  if (ctx->m() < n) {
    throw Error(ErrorKind::DegreeTooSmall, "Gabidulin length " + std::to_string(n) + " needs m >= n, m = " +
                                               std::to_string(ctx->m()));
  }
  if (k < 1 || k > n) throw Error(ErrorKind::BadDimensions, "Gabidulin dimension must satisfy 1 <= k <= n");
  if (points.size() != n) throw Error(ErrorKind::LengthMismatch, "need exactly n evaluation points");
  if (rank(expand_to_base(*ctx, points)) != n) {
    throw Error(ErrorKind::DependentPoints, "evaluation points are F_q-linearly dependent");
  }
  ExtMatrix g(ctx, k, n);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < n; ++j) g(i, j) = ctx->frobenius(points[j], i);
  }
  return LinearCode(g);
}

LinearCode gabidulin(const FieldPtr& ctx, std::size_t n, std::size_t k) {
  return gabidulin(ctx, n, k, default_gabidulin_points(*ctx, n));
}

SystematicForm systematic_form(const ExtMatrix& generator) {
  const std::size_t k = generator.rows();
  const std::size_t n = generator.cols();
  if (k > n) throw Error(ErrorKind::NotSystematizable, "more rows than columns");
  std::vector<std::size_t> left(k);
  for (std::size_t i = 0; i < k; ++i) left[i] = i;
  const ExtMatrix square = select_columns(generator, left);
  auto aug = rref(hstack(square, ExtMatrix::identity(generator.field(), k)));
  for (std::size_t i = 0; i < k; ++i) {
    if (i >= aug.rank || aug.pivots[i] != i) {
      throw Error(ErrorKind::NotSystematizable, "first " + std::to_string(k) + " columns are linearly dependent");
    }
  }
  std::vector<std::size_t> right_cols(k);
  for (std::size_t i = 0; i < k; ++i) right_cols[i] = k + i;
  ExtMatrix transform = select_columns(aug.echelon, right_cols);
  ExtMatrix sys = multiply(transform, generator);
  std::vector<std::size_t> parity_cols;
  for (std::size_t j = k; j < n; ++j) parity_cols.push_back(j);
  return SystematicForm{LinearCode(sys), transform, select_columns(sys, parity_cols)};
}

SystematicForm systematic_form(const LinearCode& code) { return systematic_form(code.gen()); }

LinearCode dual(const LinearCode& code) {
  if (code.k() == 0) return LinearCode::full(code.ctx(), code.n());
  return LinearCode(right_kernel(code.gen()));
}

LinearCode puncture(const LinearCode& code, const std::vector<std::size_t>& keep) {
  if (keep.empty()) throw Error(ErrorKind::EmptyIndexSet, "puncturing to an empty index set");
  check_index_set(keep, code.n());
  return LinearCode(select_columns(code.gen(), keep));
}

LinearCode shorten(const LinearCode& code, const std::vector<std::size_t>& keep) {
  check_index_set(keep, code.n());
  std::vector<std::size_t> others;
  for (std::size_t j = 0, p = 0; j < code.n(); ++j) {
    if (p < keep.size() && keep[p] == j) {
      ++p;
    } else {
      others.push_back(j);
    }
  }
  if (code.k() == 0) return LinearCode::zero(code.ctx(), keep.size());
  ExtMatrix combos;
  if (others.empty()) {
    combos = ExtMatrix::identity(code.ctx(), code.k());
  } else {
    combos = right_kernel(transpose(select_columns(code.gen(), others)));
  }
  if (combos.rows() == 0) return LinearCode::zero(code.ctx(), keep.size());
  return LinearCode(select_columns(multiply(combos, code.gen()), keep));
}

bool contains(const LinearCode& outer, const LinearCode& inner) {
  if (outer.n() != inner.n()) throw Error(ErrorKind::LengthMismatch, "codes of different lengths");
  for (std::size_t i = 0; i < inner.k(); ++i) {
    if (!outer.contains(inner.gen().row(i))) return false;
  }
  return true;
}

BitMatrix subfield_subcode(const LinearCode& code) {
  const FieldCtx& f = *code.ctx();
  const LinearCode h = dual(code);
  BitMatrix eqs = bit_matrix(f.q(), 0, code.n());
  for (std::size_t r = 0; r < h.k(); ++r) eqs = vstack(eqs, expand_to_base(f, h.gen().row(r)));
  if (eqs.rows() == 0) return BitMatrix::identity(base_field(f.q()), code.n());
  return right_kernel(eqs);
}

LinearCode intersect(const LinearCode& a, const LinearCode& b) {
  return LinearCode(a.subspace().intersect(b.subspace()).basis());
}

LinearCode code_sum(const LinearCode& a, const LinearCode& b) { return LinearCode(vstack(a.gen(), b.gen())); }

std::size_t min_rank_distance(const LinearCode& code, std::uint64_t cap) {
  if (code.k() == 0) throw Error(ErrorKind::BadDimensions, "minimum distance of the zero code is undefined");
  return min_rank_weight_outside(code, LinearCode::zero(code.ctx(), code.n()), cap);
}

std::size_t min_rank_weight_outside(const LinearCode& c1, const LinearCode& c2, std::uint64_t cap) {
  const std::uint64_t total = c1.size();
  if (total > cap) throw Error(ErrorKind::EnumerationTooLarge, "codeword scan exceeds cap " + std::to_string(cap));
  std::size_t best = c1.n() + 1;
  const FieldCtx& f = *c1.ctx();
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    ExtVector c = c1.codeword(idx);
    if (c2.contains(c)) continue;
    best = std::min(best, rank_weight(f, c));
    if (best == 1) break;
  }
  if (best > c1.n()) throw Error(ErrorKind::NotASubcode, "C1 \\ C2 is empty");
  return best;
}

}  // namespace rankguard
