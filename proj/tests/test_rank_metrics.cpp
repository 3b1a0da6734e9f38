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
#include "rankguard/rank_metrics.hpp"
#include "support.hpp"

using namespace rankguard;
using rgtest::random_code;
using rgtest::random_subcode;

namespace {

// dim(C ∩ V) by counting codewords that lie in V.
std::size_t counted_meet(const LinearCode& c, const ExtSubspace& v) {
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < c.size(); ++i) hits += v.contains(c.codeword(i)) ? 1 : 0;
  std::size_t d = 0;
  for (; hits > 1; hits /= c.ctx()->size()) ++d;
  return d;
}

// RDIP and RGRW from the definitions, with every F_q-subspace enumerated
// and intersections measured by counting codewords.
struct Oracle {
  std::vector<std::size_t> rdip;
  std::vector<std::size_t> rgrw;
};

Oracle oracle(const LinearCode& c1, const LinearCode& c2) {
  const std::size_t n = c1.n();
  const std::size_t l = c1.k() - c2.k();
  Oracle o;
  o.rdip.assign(n + 1, 0);
  o.rgrw.assign(l, n + 1);
  for (std::size_t mu = 0; mu <= n; ++mu) {
    RrefEnumerator it(c1.ctx()->q(), n, mu);
    BitMatrix b;
    while (it.next(b)) {
      const ExtSubspace v = embed(BitSubspace::from_rows(b), c1.ctx());
      const std::size_t gap = counted_meet(c1, v) - counted_meet(c2, v);
      for (std::size_t m2 = mu; m2 <= n; ++m2) o.rdip[m2] = std::max(o.rdip[m2], gap);
      for (std::size_t i = 1; i <= gap; ++i) o.rgrw[i - 1] = std::min(o.rgrw[i - 1], mu);
    }
  }
  return o;
}

std::size_t span_rank(const FieldCtx& f, const ExtVector& x) {
  std::set<std::uint32_t> span;
  const std::size_t n = x.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::uint32_t acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (mask >> j & 1) acc = f.add(ExtElement{acc}, x[j]).v;
    }
    span.insert(acc);
  }
  std::size_t r = 0;
  for (std::size_t c = span.size(); c > 1; c /= 2) ++r;
  return r;
}

}  // namespace

TEST_CASE("rank weight equals the dimension of the coordinate span") {
  const FieldPtr f = FieldCtx::create_default(2, 5);
  Rng rng(51);
  for (int trial = 0; trial < 300; ++trial) {
    const ExtVector x = random_ext_vector(rng, *f, 1 + rng.below(6));
    CHECK(rank_weight(*f, x) == span_rank(*f, x));
  }
  CHECK_THROWS_AS(rank_distance(*f, ExtVector(2), ExtVector(3)), Error);
}

TEST_CASE("rank distance is a metric") {
  const FieldPtr f = FieldCtx::create_default(2, 4);
  Rng rng(52);
  for (int trial = 0; trial < 200; ++trial) {
    const ExtVector x = random_ext_vector(rng, *f, 4);
    const ExtVector y = random_ext_vector(rng, *f, 4);
    const ExtVector z = random_ext_vector(rng, *f, 4);
    CHECK(rank_distance(*f, x, y) == rank_distance(*f, y, x));
    CHECK(rank_distance(*f, x, z) <= rank_distance(*f, x, y) + rank_distance(*f, y, z));
    CHECK((rank_distance(*f, x, y) == 0) == (x == y));
  }
}

TEST_CASE("RDIP and RGRW match definitions on random nested pairs") {
  Rng rng(53);
  for (int trial = 0; trial < 25; ++trial) {
    const auto m = static_cast<std::uint32_t>(2 + rng.below(2));
    const std::size_t n = 2 + rng.below(2);
    const FieldPtr f = FieldCtx::create_default(2, m);
    const LinearCode c1 = random_code(rng, f, n, 1 + rng.below(n));
    const LinearCode c2 = random_subcode(rng, c1, rng.below(c1.k()));
    if (c2.k() >= c1.k()) continue;
    const Oracle o = oracle(c1, c2);
    CHECK(rdip(c1, c2).values == o.rdip);
    CHECK(rgrw(c1, c2).values == o.rgrw);
    CHECK(rgrw_direct(c1, c2).values == o.rgrw);
    CHECK(first_rgrw(c1, c2) == o.rgrw[0]);
  }
}

TEST_CASE("MRD closed forms for the RDIP and RGRW") {
  const FieldPtr f = FieldCtx::create_default(2, 4);
  const LinearCode c1 = gabidulin(f, 4, 2);
  const LinearCode c2 = LinearCode::zero(f, 4);
  CHECK(rgrw(c1, c2).values == std::vector<std::size_t>{3, 4});
  CHECK(rdip(c1, c2).values == std::vector<std::size_t>{0, 0, 0, 1, 2});
}

TEST_CASE("first RGRW against the zero code is the minimum rank distance") {
  Rng rng(54);
  for (int trial = 0; trial < 20; ++trial) {
    const FieldPtr f = FieldCtx::create_default(2, static_cast<std::uint32_t>(2 + rng.below(3)));
    const std::size_t n = 1 + rng.below(4);
    const LinearCode c = random_code(rng, f, n, 1 + rng.below(n));
    CHECK(first_rgrw(c, LinearCode::zero(f, n)) == min_rank_distance(c));
  }
}

TEST_CASE("RDIP profile is monotone with unit steps and RGRW strictly increases") {
  Rng rng(55);
  for (int trial = 0; trial < 30; ++trial) {
    const FieldPtr f = FieldCtx::create_default(2, static_cast<std::uint32_t>(2 + rng.below(3)));
    const std::size_t n = 2 + rng.below(3);
    const LinearCode c1 = random_code(rng, f, n, 1 + rng.below(n));
    const LinearCode c2 = random_subcode(rng, c1, rng.below(c1.k()));
    if (c2.k() >= c1.k()) continue;
    const ProfileTable p = rdip(c1, c2);
    const WeightTable w = rgrw(c1, c2);
    CHECK(profile_is_well_formed(p, c1.k() - c2.k()));
    CHECK(weights_strictly_increasing(w));
    CHECK(weights_from_profile(p, c1.k() - c2.k()).values == w.values);
    CHECK(verify_bounds(c1, c2, p, w).all_passed());
  }
}

TEST_CASE("Hamming analogues are dominated by the rank versions") {
  Rng rng(56);
  for (int trial = 0; trial < 20; ++trial) {
    const FieldPtr f = FieldCtx::create_default(2, 3);
    const std::size_t n = 2 + rng.below(2);
    const LinearCode c1 = random_code(rng, f, n, 1 + rng.below(n));
    const LinearCode c2 = random_subcode(rng, c1, rng.below(c1.k()));
    if (c2.k() >= c1.k()) continue;
    const auto rank_w = rgrw(c1, c2).values;
    const auto ham_w = rghw(c1, c2).values;
    REQUIRE(rank_w.size() == ham_w.size());
    for (std::size_t i = 0; i < rank_w.size(); ++i) CHECK(rank_w[i] <= ham_w[i]);
  }
}

TEST_CASE("equal codes have no relative weights") {
  const FieldPtr f = FieldCtx::create_default(2, 3);
  const LinearCode c = gabidulin(f, 3, 2);
  CHECK_THROWS_AS(first_rgrw(c, c), Error);
  CHECK_THROWS_AS(rdip(LinearCode::zero(f, 3), c), Error);
}
