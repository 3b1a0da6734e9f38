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

#include <array>
#include <set>

#include "doctest.h"
#include "rankguard/network.hpp"
#include "rankguard/rank_metrics.hpp"
#include "support.hpp"

using namespace rankguard;

TEST_CASE("error enumeration lists every low-rank vector exactly once") {
  for (auto [m, n, t] : std::vector<std::array<std::size_t, 3>>{{2, 2, 1}, {2, 3, 1}, {3, 2, 2}, {2, 3, 2}}) {
    const FieldPtr f = FieldCtx::create_default(2, static_cast<std::uint32_t>(m));
    std::set<ExtVector> expected;
    for (const auto& v : rgtest::all_vectors(f->size(), n)) {
      if (rank_weight(*f, v) <= t) expected.insert(v);
    }
    ErrorEnumerator it(f, n, t);
    ExtVector e;
    BitMatrix d;
    ExtVector z;
    std::set<ExtVector> seen;
    std::uint64_t count = 0;
    while (it.next(e, &d, &z)) {
      ++count;
      seen.insert(e);
      CHECK(error_vector(*f, d, z) == e);
      CHECK(rank_weight(*f, e) <= t);
    }
    CHECK(count == expected.size());
    CHECK(seen == expected);
    CHECK(it.size() == expected.size());
  }
}

TEST_CASE("wiretap enumeration covers every row space up to mu") {
  for (std::size_t mu = 0; mu <= 3; ++mu) {
    WiretapEnumerator it(2, 3, mu);
    BitMatrix b;
    std::set<BitMatrix> seen;
    std::uint64_t expected = 0;
    for (std::size_t i = 0; i <= mu; ++i) expected += gaussian_binomial(2, 3, i);
    while (it.next(b)) {
      CHECK(b.rows() <= mu);
      seen.insert(BitSubspace::from_rows(b).basis());
    }
    CHECK(seen.size() == expected);
    CHECK(it.size() == expected);
  }
  WiretapEnumerator full(2, 2, 2, WiretapMode::Full);
  BitMatrix b;
  int count = 0;
  while (full.next(b)) ++count;
  CHECK(count == 16);
}

TEST_CASE("independent tuple counts") {
  CHECK(independent_tuples(2, 3, 0) == 1);
  CHECK(independent_tuples(2, 3, 1) == 7);
  CHECK(independent_tuples(2, 3, 2) == 7 * 6);
  CHECK(independent_tuples(2, 3, 4) == 0);
}

TEST_CASE("sampled transfer matrices respect the rank deficiency") {
  Rng rng(71);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng.below(4);
    const std::size_t rho = rng.below(n + 1);
    const std::size_t rows = n - rho + rng.below(3);
    const BitMatrix a = sample_transfer(rng, 2, rows, n, rho);
    CHECK(a.rows() == rows);
    CHECK(rank(a) + rho >= n);
  }
  CHECK_THROWS_AS(sample_transfer(rng, 2, 1, 3, 0), Error);
}

TEST_CASE("transmission follows the channel equations") {
  const FieldPtr f = FieldCtx::create_default(2, 4);
  Rng rng(72);
  for (int trial = 0; trial < 50; ++trial) {
    ChannelRealization ch;
    ch.a = random_bit_matrix(rng, 2, 3, 3);
    ch.b = random_bit_matrix(rng, 2, 2, 3);
    ch.d = random_bit_matrix(rng, 2, 3, 1);
    ch.fw = random_bit_matrix(rng, 2, 2, 1);
    ch.z = random_ext_vector(rng, *f, 1);
    const ExtVector x = random_ext_vector(rng, *f, 3);
    const Transmission tr = transmit(*f, x, ch);
    CHECK(tr.y == vec_add(*f, apply_transpose(*f, x, ch.a), error_vector(*f, ch.d, ch.z)));
    CHECK(tr.w == vec_add(*f, apply_transpose(*f, x, ch.b), error_vector(*f, ch.fw, ch.z)));
    CHECK(rank_weight(*f, error_vector(*f, ch.d, ch.z)) <= 1);
  }
}

TEST_CASE("seeded sampling is reproducible") {
  const FieldPtr f = FieldCtx::create_default(2, 5);
  Rng a(99), b(99);
  BitMatrix da, db;
  ExtVector za, zb;
  sample_error(a, *f, 4, 2, da, za);
  sample_error(b, *f, 4, 2, db, zb);
  CHECK(da == db);
  CHECK(za == zb);
  CHECK(rank_weight(*f, error_vector(*f, da, za)) <= 2);
}
