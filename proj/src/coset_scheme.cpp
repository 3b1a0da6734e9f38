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

#include "rankguard/coset_scheme.hpp"

#include <numeric>
#include <string>

namespace rankguard {

NestedScheme NestedScheme::make(const LinearCode& c1, const LinearCode& c2, const ExtMatrix& delta_g,
                                std::uint64_t seed) {
  if (c1.n() != c2.n() || delta_g.cols() != c1.n()) throw Error(ErrorKind::LengthMismatch, "scheme lengths disagree");
  if (!contains(c1, c2)) throw Error(ErrorKind::NotASubcode, "C2 is not contained in C1");
  if (c2.k() >= c1.k()) throw Error(ErrorKind::NotASubcode, "C2 must be a proper subcode of C1");
  const std::size_t l = c1.k() - c2.k();
  if (delta_g.rows() != l) throw Error(ErrorKind::BadDimensions, "ΔG must have dim C1 - dim C2 rows");
  for (std::size_t i = 0; i < l; ++i) {
    if (!c1.contains(delta_g.row(i))) throw Error(ErrorKind::NotASubcode, "ΔG row outside C1");
  }
  if (rank(vstack(delta_g, c2.gen())) != c1.k()) {
    throw Error(ErrorKind::BadDimensions, "ΔG rows and a basis of C2 do not span C1");
  }
  NestedScheme s;
  s.c1 = c1;
  s.c2 = c2;
  s.l = l;
  s.delta_g = delta_g;
  s.seed = seed;
  return s;
}

NestedScheme build_proposed(const FieldPtr& ctx, std::size_t l, std::size_t n, std::size_t k, std::uint64_t seed) {
  if (ctx->m() < l + n) {
    throw Error(ErrorKind::PacketTooShort, "m = " + std::to_string(ctx->m()) + " but the construction needs m >= l + n = " +
                                               std::to_string(l + n));
  }
  if (l < 1 || l > k || k > n) {
    throw Error(ErrorKind::BadDimensions, "need 1 <= l <= k <= n, got l = " + std::to_string(l) +
                                              ", k = " + std::to_string(k) + ", n = " + std::to_string(n));
  }
  const LinearCode d = gabidulin(ctx, l + n, k);
  const SystematicForm sys = systematic_form(d);
  const ExtMatrix& g = sys.code.gen();
  std::vector<std::size_t> last(n);
  std::iota(last.begin(), last.end(), l);
  std::vector<std::size_t> top(l);
  std::iota(top.begin(), top.end(), 0);
  const ExtMatrix delta_g = select_columns(select_rows(g, top), last);
  return NestedScheme::make(puncture(sys.code, last), shorten(sys.code, last), delta_g, seed);
}

ExtVector coset_representative(const NestedScheme& s, const ExtVector& message) {
  if (message.size() != s.l) throw Error(ErrorKind::LengthMismatch, "message length differs from l");
  return vec_mat(s.delta_g, message);
}

ExtVector sample_coset_element(const NestedScheme& s, Rng& rng) {
  const std::uint64_t count = s.c2.size();
  std::uint64_t idx = 0;
  if (s.coset_weights.empty()) {
    idx = rng.below(count);
  } else {
    if (s.coset_weights.size() != count) throw Error(ErrorKind::DimensionMismatch, "coset weight table size");
    const std::uint64_t total = std::accumulate(s.coset_weights.begin(), s.coset_weights.end(), std::uint64_t{0});
    std::uint64_t r = rng.below(total);
    while (r >= s.coset_weights[idx]) r -= s.coset_weights[idx++];
  }
  return s.c2.codeword(idx);
}

ExtVector encode(const NestedScheme& s, const ExtVector& message, Rng& rng) {
  return vec_add(*s.ctx(), coset_representative(s, message), sample_coset_element(s, rng));
}

std::optional<ExtVector> coset_message(const NestedScheme& s, const ExtVector& x) {
  auto sol = solve_right(vstack(s.delta_g, s.c2.gen()), x);
  if (!sol) return std::nullopt;
  sol->resize(s.l);
  return sol;
}

ExtVector coset_label(const NestedScheme& s, const ExtVector& x) {
  const FieldCtx& f = *s.ctx();
  ExtVector r = x;
  const ExtMatrix& g2 = s.c2.gen();
  for (std::size_t i = 0; i < s.c2.k(); ++i) {
    const ExtElement c = r[s.c2.pivots()[i]];
    if (c.v == 0) continue;
    r = vec_sub(f, r, vec_scale(f, c, g2.row(i)));
  }
  return r;
}

LinearCode partial_subcode(const NestedScheme& s, const std::vector<std::size_t>& zidx) {
  std::vector<bool> zeroed(s.l, false);
  for (auto z : zidx) {
    if (z >= s.l) throw Error(ErrorKind::DimensionMismatch, "message index out of range");
    zeroed[z] = true;
  }
  ExtMatrix g = s.c2.gen();
  for (std::size_t i = 0; i < s.l; ++i) {
    if (!zeroed[i]) g = vstack(g, select_rows(s.delta_g, {i}));
  }
  return LinearCode(g);
}

LinearCode lengthened_code(const NestedScheme& s) {
  const FieldPtr& f = s.ctx();
  const ExtMatrix top = hstack(ExtMatrix::identity(f, s.l), s.delta_g);
  const ExtMatrix bottom = hstack(ExtMatrix(f, s.c2.k(), s.l), s.c2.gen());
  return LinearCode(vstack(top, bottom));
}

std::pair<LinearCode, LinearCode> bound_codes(const NestedScheme& s, std::size_t i) {
  if (i >= s.l) throw Error(ErrorKind::DimensionMismatch, "message index out of range");
  const LinearCode c1p = lengthened_code(s);
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < s.l + s.n(); ++j) {
    if (j != i) keep.push_back(j);
  }
  return {puncture(c1p, keep), shorten(c1p, keep)};
}

namespace {

ExtMatrix random_matrix(const FieldPtr& f, std::size_t rows, std::size_t cols, Rng& rng) {
  ExtMatrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = ExtElement{static_cast<std::uint32_t>(rng.below(f->size()))};
  }
  return m;
}

}  // namespace

NestedScheme randomized_psi(const NestedScheme& s, Rng& rng) {
  const FieldPtr& f = s.ctx();
  ExtMatrix mix;
  do {
    mix = random_matrix(f, s.l, s.l, rng);
  } while (rank(mix) != s.l);
  ExtMatrix dg = multiply(mix, s.delta_g);
  if (s.c2.k() > 0) dg = add(dg, multiply(random_matrix(f, s.l, s.c2.k(), rng), s.c2.gen()));
  NestedScheme out = NestedScheme::make(s.c1, s.c2, dg, s.seed);
  out.coset_weights = s.coset_weights;
  return out;
}

LiftedScheme lift(const NestedScheme& inner, std::uint32_t target_m) {
  const FieldCtx& f = *inner.ctx();
  if (target_m != f.m() + inner.n()) {
    throw Error(ErrorKind::DegreeMismatch, "lifting needs m = m_tilde + n = " + std::to_string(f.m() + inner.n()) +
                                               ", got " + std::to_string(target_m));
  }
  LiftedScheme ls;
  ls.inner = inner;
  ls.outer = FieldCtx::create_default(f.q(), target_m, kMaxFieldCap);
  ls.m_tilde = f.m();
  return ls;
}

BitMatrix lift_packets(const LiftedScheme& ls, const ExtVector& inner_codeword) {
  const std::size_t n = ls.n();
  return vstack(BitMatrix::identity(base_field(ls.outer->q()), n), expand_to_base(*ls.inner.ctx(), inner_codeword));
}

BitMatrix lift_encode(const LiftedScheme& ls, const ExtVector& message, Rng& rng) {
  return lift_packets(ls, encode(ls.inner, message, rng));
}

}  // namespace rankguard
