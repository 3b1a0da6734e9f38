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

#include "rankguard/linalg.hpp"

#include <map>
#include <mutex>

namespace rankguard {

FieldPtr base_field(std::uint32_t q) {
  static std::mutex mu;
  static std::map<std::uint32_t, FieldPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(q);
  if (it != cache.end()) return it->second;
  auto f = FieldCtx::prime(q);
  cache.emplace(q, f);
  return f;
}

BitMatrix bit_matrix(std::uint32_t q, std::size_t rows, std::size_t cols) {
  return BitMatrix(base_field(q), rows, cols);
}

template <class Tag>
RrefResult<Tag> rref(const Matrix<Tag>& in) {
  RrefResult<Tag> out{in, 0, {}};
  Matrix<Tag>& a = out.echelon;
  if (in.rows() == 0) return out;
  const FieldCtx& f = *in.field();
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c).v == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
    }
    const ExtElement inv = f.inv(a(r, c));
    if (inv.v != 1) {
      for (std::size_t j = c; j < cols; ++j) a(r, j) = f.mul(a(r, j), inv);
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const ExtElement factor = a(i, c);
      if (factor.v == 0) continue;
      for (std::size_t j = c; j < cols; ++j) a(i, j) = f.sub(a(i, j), f.mul(factor, a(r, j)));
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

template <class Tag>
std::size_t rank(const Matrix<Tag>& m) {
  return rref(m).rank;
}

template <class Tag>
Matrix<Tag> leading_rows(const Matrix<Tag>& m, std::size_t count) {
  Matrix<Tag> out(m.field(), count, m.cols());
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  }
  return out;
}

template <class Tag>
Matrix<Tag> right_kernel(const Matrix<Tag>& m) {
  const auto r = rref(m);
  const std::size_t n = m.cols();
  const FieldCtx& f = *m.field();
  std::vector<bool> is_pivot(n, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  Matrix<Tag> out(m.field(), n - r.rank, n);
  std::size_t row = 0;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    out(row, free) = f.one();
    for (std::size_t i = 0; i < r.rank; ++i) out(row, r.pivots[i]) = f.neg(r.echelon(i, free));
    ++row;
  }
  auto rr = rref(out);
  return rr.echelon;
}

template <class Tag>
Matrix<Tag> transpose(const Matrix<Tag>& m) {
  Matrix<Tag> out(m.field(), m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = m(i, j);
  }
  return out;
}

template <class Tag>
Matrix<Tag> multiply(const Matrix<Tag>& a, const Matrix<Tag>& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
  const FieldPtr& fp = a.field() ? a.field() : b.field();
  Matrix<Tag> out(fp, a.rows(), b.cols());
  if (!fp) return out;
  const FieldCtx& f = *fp;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const ExtElement x = a(i, k);
      if (x.v == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = f.add(out(i, j), f.mul(x, b(k, j)));
    }
  }
  return out;
}

template <class Tag>
Matrix<Tag> add(const Matrix<Tag>& a, const Matrix<Tag>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorKind::DimensionMismatch, "matrix sum shape mismatch");
  Matrix<Tag> out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a.field()->add(a(i, j), b(i, j));
  }
  return out;
}

template <class Tag>
Matrix<Tag> sub(const Matrix<Tag>& a, const Matrix<Tag>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorKind::DimensionMismatch, "matrix difference shape mismatch");
  Matrix<Tag> out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a.field()->sub(a(i, j), b(i, j));
  }
  return out;
}

template <class Tag>
Matrix<Tag> vstack(const Matrix<Tag>& a, const Matrix<Tag>& b) {
  if (a.cols() != b.cols()) throw Error(ErrorKind::DimensionMismatch, "vstack column mismatch");
  Matrix<Tag> out(a.field() ? a.field() : b.field(), a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  }
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, j) = b(i, j);
  }
  return out;
}

template <class Tag>
Matrix<Tag> hstack(const Matrix<Tag>& a, const Matrix<Tag>& b) {
  if (a.rows() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "hstack row mismatch");
  Matrix<Tag> out(a.field() ? a.field() : b.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
  }
  return out;
}

template <class Tag>
Matrix<Tag> select_columns(const Matrix<Tag>& m, const std::vector<std::size_t>& cols) {
  Matrix<Tag> out(m.field(), m.rows(), cols.size());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j] >= m.cols()) throw Error(ErrorKind::DimensionMismatch, "column index out of range");
      out(i, j) = m(i, cols[j]);
    }
  }
  return out;
}

template <class Tag>
Matrix<Tag> select_rows(const Matrix<Tag>& m, const std::vector<std::size_t>& rows) {
  Matrix<Tag> out(m.field(), rows.size(), m.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] >= m.rows()) throw Error(ErrorKind::DimensionMismatch, "row index out of range");
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(rows[i], j);
  }
  return out;
}

template <class Tag>
std::optional<ExtVector> solve_right(const Matrix<Tag>& m, const ExtVector& y) {
  if (y.size() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "solve_right length mismatch");
  const std::size_t k = m.rows();
  const std::size_t n = m.cols();
  // x M = y  <=>  M^T x^T = y^T; row-reduce [M^T | y^T].
  Matrix<Tag> aug(m.field(), n, k + 1);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < k; ++i) aug(j, i) = m(i, j);
    aug(j, k) = y[j];
  }
  auto r = rref(aug);
  ExtVector x(k);
  for (std::size_t i = 0; i < r.rank; ++i) {
    if (r.pivots[i] == k) return std::nullopt;
    x[r.pivots[i]] = r.echelon(i, k);
  }
  return x;
}

ExtVector vec_add(const FieldCtx& f, const ExtVector& a, const ExtVector& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::LengthMismatch, "vector lengths differ");
  ExtVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
  return out;
}

ExtVector vec_sub(const FieldCtx& f, const ExtVector& a, const ExtVector& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::LengthMismatch, "vector lengths differ");
  ExtVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.sub(a[i], b[i]);
  return out;
}

ExtVector vec_scale(const FieldCtx& f, ExtElement c, const ExtVector& a) {
  ExtVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.mul(c, a[i]);
  return out;
}

bool vec_is_zero(const ExtVector& a) {
  for (auto e : a) {
    if (e.v != 0) return false;
  }
  return true;
}

template <class Tag>
ExtVector vec_mat(const Matrix<Tag>& m, const ExtVector& x) {
  if (x.size() != m.rows()) throw Error(ErrorKind::DimensionMismatch, "vector-matrix shape mismatch");
  ExtVector out(m.cols());
  if (m.rows() == 0) return out;
  const FieldCtx& f = *m.field();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (x[i].v == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] = f.add(out[j], f.mul(x[i], m(i, j)));
  }
  return out;
}

ExtVector apply_transpose(const FieldCtx& f, const ExtVector& x, const BitMatrix& a) {
  if (x.size() != a.cols()) throw Error(ErrorKind::DimensionMismatch, "x A^T shape mismatch");
  ExtVector out(a.rows());
  for (std::size_t j = 0; j < a.rows(); ++j) {
    ExtElement acc{0};
    for (std::size_t i = 0; i < a.cols(); ++i) {
      const ExtElement c = a(j, i);
      if (c.v == 0) continue;
      acc = f.add(acc, c.v == 1 ? x[i] : f.mul(c, x[i]));
    }
    out[j] = acc;
  }
  return out;
}

ExtMatrix embed(const BitMatrix& m, const FieldPtr& ext) {
  ExtMatrix out(ext, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  }
  return out;
}

bool is_base_matrix(const ExtMatrix& m) {
  const std::uint32_t q = m.field()->q();
  for (auto e : m.data()) {
    if (e.v >= q) return false;
  }
  return true;
}

BitMatrix to_base(const ExtMatrix& m) {
  if (!is_base_matrix(m)) throw Error(ErrorKind::AmbientMismatch, "matrix has entries outside F_q");
  BitMatrix out = bit_matrix(m.field()->q(), m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  }
  return out;
}

BitMatrix expand_to_base(const FieldCtx& f, const ExtVector& x) {
  BitMatrix out = bit_matrix(f.q(), f.m(), x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    std::uint32_t v = x[j].v;
    for (std::uint32_t i = 0; i < f.m(); ++i) {
      out(i, j) = ExtElement{v % f.q()};
      v /= f.q();
    }
  }
  return out;
}

BitMatrix expand_to_base(const ExtMatrix& x) {
  if (x.rows() != 1) throw Error(ErrorKind::DimensionMismatch, "expand_to_base expects a 1 x n matrix");
  return expand_to_base(*x.field(), x.row(0));
}

ExtVector collapse_from_base(const FieldCtx& f, const BitMatrix& m) {
  if (m.rows() != f.m()) throw Error(ErrorKind::DimensionMismatch, "expected m rows");
  ExtVector out(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    std::uint32_t v = 0;
    for (std::size_t i = f.m(); i-- > 0;) v = v * f.q() + m(i, j).v;
    out[j] = ExtElement{v};
  }
  return out;
}

ExtMatrix frobenius(const ExtMatrix& m, std::uint64_t i) {
  ExtMatrix out = m;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m.field()->frobenius(m(r, c), i);
  }
  return out;
}

template <class Tag>
Subspace<Tag> Subspace<Tag>::from_rows(const Matrix<Tag>& gen) {
  Subspace s;
  auto r = rref(gen);
  s.basis_ = leading_rows(r.echelon, r.rank);
  return s;
}

template <class Tag>
Subspace<Tag> Subspace<Tag>::sum(const Subspace& other) const {
  check_ambient(other);
  return from_rows(vstack(basis_, other.basis_));
}

template <class Tag>
Subspace<Tag> Subspace<Tag>::complement() const {
  if (dim() == 0) return full(field(), ambient());
  return from_rows(right_kernel(basis_));
}

template <class Tag>
Subspace<Tag> Subspace<Tag>::intersect(const Subspace& other) const {
  check_ambient(other);
  return complement().sum(other.complement()).complement();
}

template <class Tag>
bool Subspace<Tag>::contains(const ExtVector& v) const {
  if (v.size() != ambient()) throw Error(ErrorKind::AmbientMismatch, "vector length differs from ambient");
  if (vec_is_zero(v)) return true;
  if (dim() == 0) return false;
  return solve_right(basis_, v).has_value();
}

template <class Tag>
bool Subspace<Tag>::contains(const Subspace& other) const {
  check_ambient(other);
  for (std::size_t i = 0; i < other.dim(); ++i) {
    if (!contains(other.basis_.row(i))) return false;
  }
  return true;
}

ExtSubspace embed(const BitSubspace& v, const FieldPtr& ext) { return ExtSubspace::from_rows(embed(v.basis(), ext)); }

#define RANKGUARD_INSTANTIATE(Tag)                                                                 \
  template RrefResult<Tag> rref(const Matrix<Tag>&);                                               \
  template std::size_t rank(const Matrix<Tag>&);                                                   \
  template Matrix<Tag> right_kernel(const Matrix<Tag>&);                                           \
  template Matrix<Tag> transpose(const Matrix<Tag>&);                                              \
  template Matrix<Tag> multiply(const Matrix<Tag>&, const Matrix<Tag>&);                           \
  template Matrix<Tag> add(const Matrix<Tag>&, const Matrix<Tag>&);                                \
  template Matrix<Tag> sub(const Matrix<Tag>&, const Matrix<Tag>&);                                \
  template Matrix<Tag> vstack(const Matrix<Tag>&, const Matrix<Tag>&);                             \
  template Matrix<Tag> hstack(const Matrix<Tag>&, const Matrix<Tag>&);                             \
  template Matrix<Tag> select_columns(const Matrix<Tag>&, const std::vector<std::size_t>&);        \
  template Matrix<Tag> select_rows(const Matrix<Tag>&, const std::vector<std::size_t>&);           \
  template Matrix<Tag> leading_rows(const Matrix<Tag>&, std::size_t);                              \
  template std::optional<ExtVector> solve_right(const Matrix<Tag>&, const ExtVector&);             \
  template ExtVector vec_mat(const Matrix<Tag>&, const ExtVector&);                                \
  template class Subspace<Tag>;

RANKGUARD_INSTANTIATE(BaseTag)
RANKGUARD_INSTANTIATE(ExtTag)

#undef RANKGUARD_INSTANTIATE

}  // namespace rankguard
