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

#include <algorithm>
#include <cmath>
#include <set>

#include "doctest.h"
#include "rankguard/linalg.hpp"
#include "support.hpp"

using namespace rankguard;
using rgtest::random_ext_matrix;

namespace {

// Rank as log_{|F|} of the number of distinct row combinations.
std::size_t rank_by_counting(const ExtMatrix& m) {
  const auto vs = rgtest::span(m);
  const std::set<ExtVector> distinct(vs.begin(), vs.end());
  std::size_t r = 0;
  for (std::size_t count = distinct.size(); count > 1; count /= m.field()->size()) ++r;
  return r;
}

}  // namespace

TEST_CASE("rank matches the size of the row span") {
  const FieldPtr f = FieldCtx::create_default(2, 2);
  Rng rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = 1 + rng.below(3);
    const std::size_t c = 1 + rng.below(4);
    ExtMatrix m = random_ext_matrix(rng, f, r, c);
    if (r > 1 && rng.below(2)) m.set_row(r - 1, vec_add(*f, m.row(0), m.row(r - 2)));
    CHECK(rank(m) == rank_by_counting(m));
  }
}

TEST_CASE("rref is idempotent and preserves the row space") {
  const FieldPtr f = FieldCtx::create_default(3, 2);
  Rng rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    const ExtMatrix m = random_ext_matrix(rng, f, 1 + rng.below(4), 1 + rng.below(5));
    const auto r = rref(m);
    CHECK(rref(r.echelon).echelon == r.echelon);
    CHECK(ExtSubspace::from_rows(m) == ExtSubspace::from_rows(r.echelon));
    CHECK(r.pivots.size() == r.rank);
  }
}

TEST_CASE("right kernel is orthogonal with complementary dimension") {
  const FieldPtr f = FieldCtx::create_default(2, 4);
  Rng rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const ExtMatrix m = random_ext_matrix(rng, f, 1 + rng.below(4), 1 + rng.below(6));
    const ExtMatrix k = right_kernel(m);
    CHECK(k.rows() + rank(m) == m.cols());
    if (k.rows() > 0) CHECK(multiply(m, transpose(k)).is_zero());
  }
}

TEST_CASE("solve_right finds solutions exactly when consistent") {
  const FieldPtr f = FieldCtx::create_default(2, 3);
  Rng rng(24);
  for (int trial = 0; trial < 100; ++trial) {
    const ExtMatrix m = random_ext_matrix(rng, f, 1 + rng.below(3), 1 + rng.below(4));
    const ExtVector x = random_ext_vector(rng, *f, m.rows());
    const ExtVector y = vec_mat(m, x);
    const auto sol = solve_right(m, y);
    REQUIRE(sol.has_value());
    CHECK(vec_mat(m, *sol) == y);
    const ExtVector other = random_ext_vector(rng, *f, m.cols());
    CHECK(solve_right(m, other).has_value() == ExtSubspace::from_rows(m).contains(other));
  }
}

TEST_CASE("subspace intersection agrees with exhaustive membership") {
  const FieldPtr f = FieldCtx::create_default(2, 2);
  Rng rng(25);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + rng.below(2);
    const ExtSubspace a = ExtSubspace::from_rows(random_ext_matrix(rng, f, rng.below(n + 1), n));
    const ExtSubspace b = ExtSubspace::from_rows(random_ext_matrix(rng, f, rng.below(n + 1), n));
    std::size_t common = 0;
    for (const auto& v : rgtest::all_vectors(f->size(), n)) common += (a.contains(v) && b.contains(v)) ? 1 : 0;
    const ExtSubspace meet = a.intersect(b);
    CHECK(static_cast<double>(common) == doctest::Approx(std::pow(f->size(), meet.dim())));
    CHECK(a.contains(meet));
    CHECK(b.contains(meet));
    CHECK(a.dim() + b.dim() == meet.dim() + a.sum(b).dim());
  }
}

TEST_CASE("duality is an involution") {
  const FieldPtr f = FieldCtx::create_default(2, 3);
  Rng rng(26);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng.below(5);
    const ExtSubspace v = ExtSubspace::from_rows(random_ext_matrix(rng, f, rng.below(n + 1), n));
    CHECK(v.complement().complement() == v);
    CHECK(v.complement().dim() + v.dim() == n);
  }
}

TEST_CASE("expansion to the base field round-trips and preserves rank weight") {
  const FieldPtr f = FieldCtx::create_default(2, 5);
  Rng rng(27);
  for (int trial = 0; trial < 100; ++trial) {
    const ExtVector x = random_ext_vector(rng, *f, 1 + rng.below(5));
    const BitMatrix e = expand_to_base(*f, x);
    CHECK(e.rows() == f->m());
    CHECK(collapse_from_base(*f, e) == x);
  }
}

TEST_CASE("channel action matches embedding then multiplication") {
  const FieldPtr f = FieldCtx::create_default(2, 4);
  Rng rng(28);
  for (int trial = 0; trial < 50; ++trial) {
    const BitMatrix a = random_bit_matrix(rng, 2, 1 + rng.below(4), 3);
    const ExtVector x = random_ext_vector(rng, *f, 3);
    ExtMatrix xm(f, 1, 3);
    xm.set_row(0, x);
    CHECK(apply_transpose(*f, x, a) == multiply(xm, transpose(embed(a, f))).row(0));
    CHECK(to_base(embed(a, f)) == a);
  }
}

TEST_CASE("dimension mismatches throw") {
  const FieldPtr f = FieldCtx::create_default(2, 2);
  CHECK_THROWS_AS(multiply(ExtMatrix(f, 2, 3), ExtMatrix(f, 2, 3)), Error);
  CHECK_THROWS_AS(ExtSubspace::full(f, 2).sum(ExtSubspace::full(f, 3)), Error);
}
