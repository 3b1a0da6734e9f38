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

#include "doctest.h"
#include "rankguard/coset_scheme.hpp"
#include "rankguard/rank_metrics.hpp"
#include "support.hpp"

using namespace rankguard;

namespace {

NestedScheme small_scheme() { return build_proposed(FieldCtx::create_default(2, 4), 1, 3, 2); }

}  // namespace

TEST_CASE("systematic MRD construction yields nested MRD codes") {
  const NestedScheme s = small_scheme();
  CHECK(s.k() == 2);
  CHECK(s.c2.k() == 1);
  CHECK(s.l == 1);
  CHECK(contains(s.c1, s.c2));
  CHECK(min_rank_distance(s.c1) == 2);
  CHECK(min_rank_distance(s.c2) == 3);
  CHECK(first_rgrw(s.c1, s.c2) == 2);
}

TEST_CASE("construction preconditions") {
  CHECK_THROWS_AS(build_proposed(FieldCtx::create_default(2, 3), 1, 3, 2), Error);
  CHECK_THROWS_AS(build_proposed(FieldCtx::create_default(2, 6), 3, 3, 2), Error);
  CHECK_THROWS_AS(build_proposed(FieldCtx::create_default(2, 6), 0, 3, 2), Error);
  const FieldPtr f = FieldCtx::create_default(2, 4);
  const LinearCode a = gabidulin(f, 3, 1);
  Rng rng(1);
  const LinearCode b = LinearCode(rgtest::random_ext_matrix(rng, f, 1, 3));
  if (!contains(b, a)) CHECK_THROWS_AS(NestedScheme::make(b, a, ExtMatrix(f, 0, 3)), Error);
}

TEST_CASE("encoding lands in the right coset and decodes back") {
  const NestedScheme s = build_proposed(FieldCtx::create_default(2, 6), 2, 4, 3, 9);
  Rng rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    const ExtVector msg = random_ext_vector(rng, *s.ctx(), s.l);
    const ExtVector x = encode(s, msg, rng);
    CHECK(s.c1.contains(x));
    const auto back = coset_message(s, x);
    REQUIRE(back.has_value());
    CHECK(*back == msg);
    CHECK(coset_label(s, x) == coset_label(s, coset_representative(s, msg)));
    // Differences inside one coset lie in C2.
    CHECK(s.c2.contains(vec_sub(*s.ctx(), x, coset_representative(s, msg))));
  }
}

TEST_CASE("randomized psi keeps the nested pair and the coset bijection") {
  const NestedScheme s = small_scheme();
  Rng rng(62);
  for (int trial = 0; trial < 20; ++trial) {
    const NestedScheme r = randomized_psi(s, rng);
    CHECK(r.c1 == s.c1);
    CHECK(r.c2 == s.c2);
    const ExtVector msg = random_ext_vector(rng, *s.ctx(), s.l);
    CHECK(coset_message(r, encode(r, msg, rng)) == msg);
  }
}

TEST_CASE("partial subcodes sit between C2 and C1") {
  const NestedScheme s = build_proposed(FieldCtx::create_default(2, 5), 2, 3, 3);
  for (const auto& z : std::vector<std::vector<std::size_t>>{{0}, {1}, {0, 1}}) {
    const LinearCode c3 = partial_subcode(s, z);
    CHECK(c3.k() == s.k() - z.size());
    CHECK(contains(s.c1, c3));
    CHECK(contains(c3, s.c2));
  }
}

TEST_CASE("zeroed-message subcode keeps the MRD distance of its dimension") {
  const NestedScheme s = build_proposed(FieldCtx::create_default(2, 6), 2, 4, 3);
  for (const auto& z : std::vector<std::vector<std::size_t>>{{0}, {1}, {0, 1}}) {
    const LinearCode c3 = partial_subcode(s, z);
    CHECK(min_rank_distance(c3) == s.n() - s.k() + z.size() + 1);
  }
}

TEST_CASE("bound codes come from the lengthened code") {
  const NestedScheme s = small_scheme();
  const LinearCode len = lengthened_code(s);
  CHECK(len.n() == s.l + s.n());
  CHECK(len.k() == s.k());
  const auto [p, sh] = bound_codes(s, 0);
  CHECK(p.n() == s.n());
  CHECK(contains(p, sh));
}

TEST_CASE("lifting prepends the identity") {
  const NestedScheme s = small_scheme();
  CHECK_THROWS_AS(lift(s, 6), Error);
  const LiftedScheme ls = lift(s, 7);
  CHECK(ls.m() == 7);
  Rng rng(63);
  const ExtVector msg = random_ext_vector(rng, *s.ctx(), s.l);
  const BitMatrix x = lift_encode(ls, msg, rng);
  CHECK(x.rows() == 7);
  CHECK(x.cols() == 3);
  CHECK(select_rows(x, {0, 1, 2}) == BitMatrix::identity(base_field(2), 3));
  CHECK(rank(x) == 3);
}
