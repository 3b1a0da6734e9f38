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

#include <set>

#include "doctest.h"
#include "rankguard/subspaces.hpp"
#include "support.hpp"

using namespace rankguard;

TEST_CASE("Gaussian binomials match known values") {
  CHECK(gaussian_binomial(2, 4, 2) == 35);
  CHECK(gaussian_binomial(2, 3, 1) == 7);
  CHECK(gaussian_binomial(3, 3, 1) == 13);
  CHECK(gaussian_binomial(2, 5, 0) == 1);
  CHECK(gaussian_binomial(2, 2, 3) == 0);
}

TEST_CASE("RREF enumeration yields each subspace once") {
  for (auto [q, n] : std::vector<std::pair<std::uint32_t, std::size_t>>{{2, 4}, {3, 3}, {2, 5}}) {
    for (std::size_t i = 0; i <= n; ++i) {
      RrefEnumerator it(q, n, i);
      BitMatrix m;
      std::set<BitMatrix> seen;
      std::uint64_t count = 0;
      while (it.next(m)) {
        ++count;
        CHECK(rank(m) == i);
        CHECK(rref(m).echelon == m);
        seen.insert(m);
      }
      CHECK(count == gaussian_binomial(q, n, i));
      CHECK(seen.size() == count);
    }
  }
}

TEST_CASE("q-invariant family members are Galois closed") {
  const FieldPtr f = FieldCtx::create_default(2, 3);
  QInvariantFamily fam(f, 3, 2);
  ExtSubspace v;
  BitMatrix base;
  std::uint64_t count = 0;
  while (fam.next(v, &base)) {
    ++count;
    CHECK(is_qinvariant(v));
    CHECK(galois_closure(v) == v);
    CHECK(v.dim() == 2);
  }
  CHECK(count == fam.size());
  CHECK(count == 7);
}

TEST_CASE("Galois closure of a random subspace is the smallest invariant superspace") {
  const FieldPtr f = FieldCtx::create_default(2, 3);
  Rng rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    ExtMatrix g(f, 1, 3);
    g.set_row(0, random_ext_vector(rng, *f, 3));
    const ExtSubspace v = ExtSubspace::from_rows(g);
    const ExtSubspace star = galois_closure(v);
    CHECK(is_qinvariant(star));
    CHECK(star.contains(v));
    // The closure is spanned by base-field vectors: its dimension equals the
    // rank of the expansion of the generating vector.
    CHECK(star.dim() == rank(expand_to_base(*f, g.row(0))));
  }
}

TEST_CASE("coordinate subspaces and caps") {
  const FieldPtr f = FieldCtx::create_default(2, 2);
  CoordinateFamily fam(f, 4, 2);
  ExtSubspace v;
  std::vector<std::size_t> idx;
  int count = 0;
  while (fam.next(v, &idx)) {
    ++count;
    CHECK(v == coordinate_subspace(f, 4, idx));
    CHECK(is_qinvariant(v));
  }
  CHECK(count == 6);
  CHECK_THROWS_AS(QInvariantFamily(f, 12, 6, 1000), Error);
}
