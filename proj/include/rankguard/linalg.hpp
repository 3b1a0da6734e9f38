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
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "rankguard/error.hpp"
#include "rankguard/gf_tower.hpp"

namespace rankguard {

struct BaseTag {};
struct ExtTag {};

using ExtVector = std::vector<ExtElement>;

/// Cached prime-field context, shared by every BitMatrix over F_q.
FieldPtr base_field(std::uint32_t q);

/// Dense row-major matrix. `Matrix<BaseTag>` lives over F_q (its field has
/// m = 1) and `Matrix<ExtTag>` over F_{q^m}; entries use the same encoding, so
/// base matrices embed into extension matrices without conversion.
template <class Tag>
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols) {
    if constexpr (std::is_same_v<Tag, BaseTag>) {
      if (field_ && field_->m() != 1) throw Error(ErrorKind::AmbientMismatch, "BitMatrix needs a prime field");
    }
  }

  static Matrix identity(FieldPtr field, std::size_t n) {
    Matrix out(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = ExtElement{1};
    return out;
  }

  static Matrix from_rows(FieldPtr field, std::size_t cols, const std::vector<ExtVector>& rows) {
    Matrix out(std::move(field), rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) out.set_row(i, rows[i]);
    return out;
  }

  const FieldPtr& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  ExtElement& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  ExtElement operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  ExtVector row(std::size_t i) const {
    return ExtVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }
  void set_row(std::size_t i, const ExtVector& v) {
    if (v.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "row length mismatch");
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
  }
  void append_row(const ExtVector& v) {
    if (v.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "row length mismatch");
    data_.insert(data_.end(), v.begin(), v.end());
    ++rows_;
  }

  bool is_zero() const {
    for (auto e : data_) {
      if (e.v != 0) return false;
    }
    return true;
  }

  const std::vector<ExtElement>& data() const { return data_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }
  friend bool operator<(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    return a.data_ < b.data_;
  }

 private:
  FieldPtr field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<ExtElement> data_;
};

using BitMatrix = Matrix<BaseTag>;
using ExtMatrix = Matrix<ExtTag>;

BitMatrix bit_matrix(std::uint32_t q, std::size_t rows, std::size_t cols);

template <class Tag>
struct RrefResult {
  Matrix<Tag> echelon;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

template <class Tag>
RrefResult<Tag> rref(const Matrix<Tag>& m);
template <class Tag>
std::size_t rank(const Matrix<Tag>& m);
/// Rows spanning {x : M x^T = 0}, in RREF.
template <class Tag>
Matrix<Tag> right_kernel(const Matrix<Tag>& m);
template <class Tag>
Matrix<Tag> transpose(const Matrix<Tag>& m);
template <class Tag>
Matrix<Tag> multiply(const Matrix<Tag>& a, const Matrix<Tag>& b);
template <class Tag>
Matrix<Tag> add(const Matrix<Tag>& a, const Matrix<Tag>& b);
template <class Tag>
Matrix<Tag> sub(const Matrix<Tag>& a, const Matrix<Tag>& b);
template <class Tag>
Matrix<Tag> vstack(const Matrix<Tag>& a, const Matrix<Tag>& b);
template <class Tag>
Matrix<Tag> hstack(const Matrix<Tag>& a, const Matrix<Tag>& b);
template <class Tag>
Matrix<Tag> select_columns(const Matrix<Tag>& m, const std::vector<std::size_t>& cols);
template <class Tag>
Matrix<Tag> select_rows(const Matrix<Tag>& m, const std::vector<std::size_t>& rows);
/// Drops trailing zero rows of an echelon matrix.
template <class Tag>
Matrix<Tag> leading_rows(const Matrix<Tag>& m, std::size_t count);
/// Some x with x M = y, free variables set to zero; nullopt when inconsistent.
template <class Tag>
std::optional<ExtVector> solve_right(const Matrix<Tag>& m, const ExtVector& y);

ExtVector vec_add(const FieldCtx& f, const ExtVector& a, const ExtVector& b);
ExtVector vec_sub(const FieldCtx& f, const ExtVector& a, const ExtVector& b);
ExtVector vec_scale(const FieldCtx& f, ExtElement c, const ExtVector& a);
bool vec_is_zero(const ExtVector& a);
/// x M for a row vector x.
template <class Tag>
ExtVector vec_mat(const Matrix<Tag>& m, const ExtVector& x);
/// x A^T with x over F_{q^m} and A over F_q (the channel action).
ExtVector apply_transpose(const FieldCtx& f, const ExtVector& x, const BitMatrix& a);

ExtMatrix embed(const BitMatrix& m, const FieldPtr& ext);
/// Exact inverse of `embed`; throws AmbientMismatch if an entry is not in F_q.
BitMatrix to_base(const ExtMatrix& m);
bool is_base_matrix(const ExtMatrix& m);
/// Column j is the coefficient vector of x_j (m x n over F_q).
BitMatrix expand_to_base(const FieldCtx& f, const ExtVector& x);
BitMatrix expand_to_base(const ExtMatrix& x);
/// Inverse of `expand_to_base` for an m x n matrix.
ExtVector collapse_from_base(const FieldCtx& f, const BitMatrix& m);
/// Entrywise x ↦ x^{q^i}.
ExtMatrix frobenius(const ExtMatrix& m, std::uint64_t i);

/// A subspace stored as the RREF of a generator matrix with zero rows
/// removed; two subspaces are equal iff their bases are identical.
template <class Tag>
class Subspace {
 public:
  Subspace() = default;
  static Subspace from_rows(const Matrix<Tag>& gen);
  static Subspace zero(FieldPtr field, std::size_t ambient) {
    return from_rows(Matrix<Tag>(std::move(field), 0, ambient));
  }
  static Subspace full(FieldPtr field, std::size_t ambient) {
    return from_rows(Matrix<Tag>::identity(std::move(field), ambient));
  }

  std::size_t ambient() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix<Tag>& basis() const { return basis_; }
  const FieldPtr& field() const { return basis_.field(); }

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  Subspace complement() const;
  bool contains(const ExtVector& v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }
  friend bool operator<(const Subspace& a, const Subspace& b) { return a.basis_ < b.basis_; }

 private:
  void check_ambient(const Subspace& other) const {
    if (ambient() != other.ambient()) throw Error(ErrorKind::AmbientMismatch, "subspaces of different ambient spaces");
  }
  Matrix<Tag> basis_;
};

using ExtSubspace = Subspace<ExtTag>;
using BitSubspace = Subspace<BaseTag>;

ExtSubspace embed(const BitSubspace& v, const FieldPtr& ext);

}  // namespace rankguard
