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
#include "rankguard/codes.hpp"
#include "support.hpp"

using namespace rankguard;
using rgtest::random_code;

namespace {

std::size_t scan_distance(const LinearCode& c) {
  std::size_t best = c.n();
  for (std::uint64_t i = 1; i < c.size(); ++i) best = std::min(best, rank(expand_to_base(*c.ctx(), c.codeword(i))));
  return best;
}

}  // namespace

TEST_CASE("Gabidulin codes are MRD") {
  for (auto [m, n, k] : std::vector<std::array<std::size_t, 3>>{{3, 3, 1}, {3, 3, 2}, {4, 3, 2}, {4, 4, 2}, {5, 3, 1}}) {
    const FieldPtr f = FieldCtx::create_default(2, static_cast<std::uint32_t>(m));
    const LinearCode c = gabidulin(f, n, k);
    CHECK(c.k() == k);
    CHECK(scan_distance(c) == n - k + 1);
    CHECK(min_rank_distance(c) == n - k + 1);
  }
}

TEST_CASE("Gabidulin preconditions") {
  const FieldPtr f = FieldCtx::create_default(2, 3);
  CHECK_THROWS_AS(gabidulin(f, 4, 2), Error);
  CHECK_THROWS_AS(gabidulin(f, 3, 0), Error);
  const ExtVector dependent = {f->one(), f->alpha(), f->add(f->one(), f->alpha())};
  CHECK_THROWS_AS(gabidulin(f, 3, 2, dependent), Error);
}

TEST_CASE("dual codes are orthogonal with complementary dimension") {
  const FieldPtr f = FieldCtx::create_default(2, 3);
  Rng rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng.below(5);
    const LinearCode c = random_code(rng, f, n, 1 + rng.below(n));
    const LinearCode d = dual(c);
    CHECK(c.k() + d.k() == n);
    if (d.k() > 0) CHECK(multiply(c.gen(), transpose(d.gen())).is_zero());
    CHECK(dual(d) == c);
  }
}

TEST_CASE("puncturing and shortening are dual operations") {
  const FieldPtr f = FieldCtx::create_default(2, 2);
  Rng rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 3 + rng.below(3);
    const LinearCode c = random_code(rng, f, n, 1 + rng.below(n));
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < n; ++j) {
      if (rng.below(3) != 0) keep.push_back(j);
    }
    if (keep.empty()) keep.push_back(0);
    CHECK(dual(puncture(c, keep)) == shorten(dual(c), keep));
    // Shortened codewords are codewords zero off the kept set.
    const LinearCode s = shorten(c, keep);
    for (std::uint64_t i = 0; i < s.size() && i < 64; ++i) {
      ExtVector full(n, f->zero());
      const ExtVector w = s.codeword(i);
      for (std::size_t p = 0; p < keep.size(); ++p) full[keep[p]] = w[p];
      CHECK(c.contains(full));
    }
  }
  CHECK_THROWS_AS(puncture(LinearCode::full(f, 3), {}), Error);
}

TEST_CASE("systematic form spans the same code") {
  const FieldPtr f = FieldCtx::create_default(2, 4);
  Rng rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    const ExtMatrix g = rgtest::random_ext_matrix(rng, f, 2, 4);
    if (rank(select_columns(g, {0, 1})) < 2) {
      CHECK_THROWS_AS(systematic_form(g), Error);
      continue;
    }
    const SystematicForm sf = systematic_form(g);
    CHECK(multiply(sf.transform, g) == sf.code.gen());
    CHECK(select_columns(sf.code.gen(), {0, 1}) == ExtMatrix::identity(f, 2));
    CHECK(select_columns(sf.code.gen(), {2, 3}) == sf.parity);
    CHECK(sf.code == LinearCode(g));
  }
}

TEST_CASE("subfield subcode, intersection and sum") {
  const FieldPtr f = FieldCtx::create_default(2, 2);
  Rng rng(44);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + rng.below(3);
    const LinearCode a = random_code(rng, f, n, 1 + rng.below(n));
    const LinearCode b = random_code(rng, f, n, 1 + rng.below(n));
    CHECK(intersect(a, b).k() + code_sum(a, b).k() == a.k() + b.k());
    CHECK(contains(code_sum(a, b), a));
    CHECK(contains(a, intersect(a, b)));
    const BitMatrix sub = subfield_subcode(a);
    std::size_t base_words = 0;
    for (std::uint64_t i = 0; i < a.size(); ++i) {
      const ExtVector w = a.codeword(i);
      bool all_base = true;
      for (auto e : w) all_base = all_base && f->is_base(e);
      base_words += all_base ? 1 : 0;
    }
    CHECK(base_words == (std::size_t{1} << sub.rows()));
  }
}
