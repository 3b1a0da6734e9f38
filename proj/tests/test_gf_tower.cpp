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

#include <vector>

#include "doctest.h"
#include "rankguard/error.hpp"
#include "rankguard/gf_tower.hpp"
#include "rankguard/rng.hpp"

using namespace rankguard;

namespace {

// Schoolbook product of coefficient vectors reduced by the monic modulus.
std::vector<std::uint32_t> slow_product(const FieldCtx& f, const std::vector<std::uint32_t>& a,
                                        const std::vector<std::uint32_t>& b) {
  const std::uint32_t q = f.q();
  const std::uint32_t m = f.m();
  std::vector<std::uint32_t> prod(2 * m, 0);
  for (std::uint32_t i = 0; i < m; ++i) {
    for (std::uint32_t j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % q;
  }
  const auto& mod = f.modulus();
  for (std::uint32_t d = 2 * m - 1; d >= m; --d) {
    const std::uint32_t c = prod[d];
    if (c == 0) continue;
    for (std::uint32_t i = 0; i <= m; ++i) prod[d - m + i] = (prod[d - m + i] + (q - c) * mod[i] % q) % q;
  }
  prod.resize(m);
  return prod;
}

}  // namespace

TEST_CASE("irreducibility of small binary polynomials") {
  CHECK(FieldCtx::is_irreducible(2, {1, 1, 0, 0, 1}));   // x^4 + x + 1
  CHECK_FALSE(FieldCtx::is_irreducible(2, {1, 0, 1, 0, 1}));  // (x^2 + x + 1)^2
  CHECK(FieldCtx::is_irreducible(2, {1, 1, 1}));
  CHECK_FALSE(FieldCtx::is_irreducible(2, {0, 1, 1}));
  CHECK(FieldCtx::is_irreducible(3, {1, 0, 1}));  // x^2 + 1 over F_3
  CHECK_THROWS_AS(FieldCtx::create(2, 4, {1, 0, 1, 0, 1}), Error);
}

TEST_CASE("multiplication agrees with schoolbook reduction") {
  for (auto [q, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 4}, {2, 5}, {3, 3}, {5, 2}, {2, 8}}) {
    const FieldPtr f = FieldCtx::create_default(q, m);
    Rng rng(q * 100 + m);
    for (int trial = 0; trial < 300; ++trial) {
      const ExtElement a{static_cast<std::uint32_t>(rng.below(f->size()))};
      const ExtElement b{static_cast<std::uint32_t>(rng.below(f->size()))};
      CHECK(f->coeffs(f->mul(a, b)) == slow_product(*f, f->coeffs(a), f->coeffs(b)));
    }
  }
}

TEST_CASE("field axioms on seeded samples") {
  const FieldPtr f = FieldCtx::create_default(3, 3);
  Rng rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const ExtElement a{static_cast<std::uint32_t>(rng.below(f->size()))};
    const ExtElement b{static_cast<std::uint32_t>(rng.below(f->size()))};
    const ExtElement c{static_cast<std::uint32_t>(rng.below(f->size()))};
    CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
    CHECK(f->add(a, f->neg(a)) == f->zero());
    CHECK(f->sub(f->add(a, b), b) == a);
    if (a != f->zero()) CHECK(f->mul(a, f->inv(a)) == f->one());
  }
  CHECK_THROWS_AS(f->inv(f->zero()), Error);
}

TEST_CASE("Frobenius is additive and fixes exactly the base field") {
  const FieldPtr f = FieldCtx::create_default(2, 6);
  std::uint32_t fixed = 0;
  for (std::uint32_t v = 0; v < f->size(); ++v) {
    const ExtElement a{v};
    CHECK(f->frobenius(a, 1) == f->mul(a, a));
    CHECK(f->frobenius(a, f->m()) == a);
    if (f->frobenius(a, 1) == a) ++fixed;
    CHECK(f->is_base(a) == (f->frobenius(a, 1) == a));
    for (std::uint32_t w = 0; w < f->size(); w += 7) {
      const ExtElement b{w};
      CHECK(f->frobenius(f->add(a, b), 2) == f->add(f->frobenius(a, 2), f->frobenius(b, 2)));
    }
  }
  CHECK(fixed == 2);
}

TEST_CASE("primitive element has full order") {
  for (std::uint32_t m : {2u, 3u, 4u, 5u, 7u}) {
    const FieldPtr f = FieldCtx::create_default(2, m);
    const ExtElement g = f->primitive();
    ExtElement x = f->one();
    for (std::uint32_t i = 1; i < f->size() - 1; ++i) {
      x = f->mul(x, g);
      CHECK(x != f->one());
    }
    CHECK(f->mul(x, g) == f->one());
  }
}

TEST_CASE("oversized fields are rejected") {
  CHECK_THROWS_AS(FieldCtx::create_default(2, 21, kMaxFieldCap), Error);
  CHECK_THROWS_AS(FieldCtx::create_default(2, 17), Error);
}
