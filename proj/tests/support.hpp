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

// Seeded generators shared by the property tests.

#include <cstdint>
#include <vector>

#include "rankguard/codes.hpp"
#include "rankguard/network.hpp"
#include "rankguard/rng.hpp"

namespace rgtest {

using namespace rankguard;

// Uniform full-rank generator, redrawn until its rank is k.
inline LinearCode random_code(Rng& rng, const FieldPtr& f, std::size_t n, std::size_t k) {
  if (k == 0) return LinearCode::zero(f, n);
  for (;;) {
    ExtMatrix g(f, k, n);
    for (std::size_t i = 0; i < k; ++i) g.set_row(i, random_ext_vector(rng, *f, n));
    if (rank(g) == k) return LinearCode(g);
  }
}

// Random subcode of dimension exactly k2 <= dim c.
inline LinearCode random_subcode(Rng& rng, const LinearCode& c, std::size_t k2) {
  if (k2 == 0) return LinearCode::zero(c.ctx(), c.n());
  for (;;) {
    ExtMatrix g(c.ctx(), 0, c.n());
    for (std::size_t i = 0; i < k2; ++i) g.append_row(c.encode(random_ext_vector(rng, *c.ctx(), c.k())));
    if (rank(g) == k2) return LinearCode(g);
  }
}

inline ExtMatrix random_ext_matrix(Rng& rng, const FieldPtr& f, std::size_t r, std::size_t c) {
  ExtMatrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i) m.set_row(i, random_ext_vector(rng, *f, c));
  return m;
}

// Every vector of F^n, in base-|F| counting order.
inline std::vector<ExtVector> all_vectors(std::uint32_t size, std::size_t n) {
  std::vector<ExtVector> out;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= size;
  for (std::uint64_t idx = 0; idx < total; ++idx) out.push_back(index_to_message(idx, n, size));
  return out;
}

// Span of the rows of g, listed exhaustively.
template <class Tag>
std::vector<ExtVector> span(const Matrix<Tag>& g) {
  const FieldCtx& f = *g.field();
  std::vector<ExtVector> out;
  for (const auto& coeffs : all_vectors(f.size(), g.rows())) {
    ExtVector v(g.cols(), f.zero());
    for (std::size_t i = 0; i < g.rows(); ++i) v = vec_add(f, v, vec_scale(f, coeffs[i], g.row(i)));
    out.push_back(v);
  }
  return out;
}

}  // namespace rgtest
