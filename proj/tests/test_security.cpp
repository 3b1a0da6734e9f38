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

#include <cmath>
#include <map>

#include "doctest.h"
#include "rankguard/security.hpp"
#include "support.hpp"

using namespace rankguard;

namespace {

// I(S; X B^T) in units of log q^m, computed in floating point directly from
// the joint law P(s, x) = s_w[s] c_w[c] / T with x = rep(s) + c2[c].
double float_leakage(const JointDistribution& d, const BitMatrix& b) {
  const NestedScheme& s = d.scheme;
  const FieldCtx& f = *s.ctx();
  std::map<std::pair<std::uint64_t, ExtVector>, double> joint;
  std::map<std::uint64_t, double> ps;
  std::map<ExtVector, double> pw;
  const double total = static_cast<double>(d.total());
  for (std::uint64_t si = 0; si < d.s_weights.size(); ++si) {
    const ExtVector msg = index_to_message(si, s.l, f.size());
    ExtVector rep(s.n(), f.zero());
    for (std::size_t i = 0; i < s.l; ++i) rep = vec_add(f, rep, vec_scale(f, msg[i], s.delta_g.row(i)));
    for (std::uint64_t c = 0; c < d.c_weights.size(); ++c) {
      const double p = static_cast<double>(d.s_weights[si] * d.c_weights[c]) / total;
      const ExtVector w = apply_transpose(f, vec_add(f, rep, s.c2.codeword(c)), b);
      joint[{si, w}] += p;
      ps[si] += p;
      pw[w] += p;
    }
  }
  double info = 0.0;
  for (const auto& [key, p] : joint) info += p * std::log(p / (ps[key.first] * pw[key.second]));
  return info / std::log(static_cast<double>(f.size()));
}

std::size_t meet_dim(const ExtSubspace& a, const ExtSubspace& b) { return a.dim() + b.dim() - a.sum(b).dim(); }

NestedScheme random_scheme(Rng& rng, const FieldPtr& f, std::size_t n) {
  const LinearCode c1 = rgtest::random_code(rng, f, n, 2);
  const LinearCode c2 = rgtest::random_subcode(rng, c1, 1);
  // Complete C2 to C1 with a row of C1 outside C2.
  std::size_t r = 0;
  while (c2.contains(c1.gen().row(r))) ++r;
  ExtMatrix dg(f, 1, n);
  dg.set_row(0, c1.gen().row(r));
  return NestedScheme::make(c1, c2, dg);
}

}  // namespace

TEST_CASE("exact LogValue arithmetic") {
  const LogValue a = LogValue::integer(2, 4);
  const LogValue b(mpq_class(2), mpz_class(1), 4);  // log_4 2 = 1/2
  CHECK((b + b).equals_integer(1));
  CHECK((a - b - b - b - b).is_zero());
  CHECK(b < a);
  CHECK(b.to_double() == doctest::Approx(0.5));
  CHECK((b - a).sign() < 0);
  CHECK(LogValue::zero(4).is_zero());
}

TEST_CASE("exact mutual information agrees with a floating-point oracle") {
  const NestedScheme s = build_proposed(FieldCtx::create_default(2, 4), 1, 3, 2);
  Rng rng(81);
  const JointDistribution uni = JointDistribution::uniform(s);
  const JointDistribution skew = JointDistribution::random_coset_weights(s, rng, 7);
  for (std::size_t mu = 0; mu <= 3; ++mu) {
    WiretapEnumerator it(2, 3, mu, WiretapMode::Full, 1000);
    BitMatrix b;
    int count = 0;
    while (it.next(b) && count < 40) {
      ++count;
      CHECK(mutual_information(uni, b).to_double() == doctest::Approx(float_leakage(uni, b)).epsilon(1e-9));
      CHECK(mutual_information(skew, b).to_double() == doctest::Approx(float_leakage(skew, b)).epsilon(1e-9));
    }
  }
}

TEST_CASE("uniform leakage equals the dual intersection gap on random schemes") {
  Rng rng(82);
  for (int trial = 0; trial < 15; ++trial) {
    const FieldPtr f = FieldCtx::create_default(2, 2);
    const NestedScheme s = random_scheme(rng, f, 3);
    const JointDistribution dist = JointDistribution::uniform(s);
    const ExtSubspace c1d = dual(s.c1).subspace();
    const ExtSubspace c2d = dual(s.c2).subspace();
    WiretapEnumerator it(2, 3, 3);
    BitMatrix b;
    while (it.next(b)) {
      const ExtSubspace row = embed(BitSubspace::from_rows(b), f);
      const long want = static_cast<long>(meet_dim(c2d, row)) - static_cast<long>(meet_dim(c1d, row));
      CHECK(mutual_information(dist, b).equals_integer(want));
    }
    for (std::size_t mu = 0; mu <= 3; ++mu) {
      CHECK(max_leakage(dist, mu).max_leakage.equals_integer(static_cast<long>(predicted_leakage(s, mu))));
    }
  }
}

TEST_CASE("reference scheme leakage, strength and partial leakage") {
  const NestedScheme s = build_proposed(FieldCtx::create_default(2, 4), 1, 3, 2);
  const JointDistribution dist = JointDistribution::uniform(s);
  const std::vector<long> k = {0, 0, 1, 1};
  for (std::size_t mu = 0; mu <= 3; ++mu) {
    CHECK(max_leakage(dist, mu).max_leakage.equals_integer(k[mu]));
    CHECK(universal_equivocation(dist, mu).theta.equals_integer(1 - k[mu]));
  }
  CHECK(omega_exact(s) == 1);
  const OmegaBounds b = omega_bounds(s);
  CHECK(b.lower == 1);
  CHECK(b.upper == 1);
  CHECK(partial_leakage(dist, {0}, 1).max_leakage.is_zero());
  CHECK(partial_leakage(dist, {0}, 2).max_leakage.sign() > 0);
}

TEST_CASE("entropy tools and conditional entropy") {
  const NestedScheme s = build_proposed(FieldCtx::create_default(2, 4), 1, 3, 2);
  Rng rng(83);
  const JointDistribution uni = JointDistribution::uniform(s);
  const EntropyReport e = entropy_tools(uni);
  CHECK(e.h_s.equals_integer(1));
  CHECK(e.d_s.is_zero());
  CHECK(e.d_x.is_zero());
  const JointDistribution skew = JointDistribution::random_coset_weights(s, rng, 5);
  const EntropyReport e2 = entropy_tools(skew);
  CHECK(e2.d_x.sign() >= 0);
  const BitMatrix b = random_bit_matrix(rng, 2, 2, 3);
  CHECK((conditional_entropy(skew, b) + mutual_information(skew, b)) == e2.h_s);
}

TEST_CASE("non-uniform leakage stays within the divergence sandwich") {
  Rng rng(84);
  for (int trial = 0; trial < 5; ++trial) {
    const NestedScheme s = build_proposed(FieldCtx::create_default(2, 4), 1, 3, 2, static_cast<std::uint64_t>(trial));
    const JointDistribution dist = JointDistribution::random_coset_weights(s, rng, 1 + rng.below(9));
    for (std::size_t mu = 0; mu <= 3; ++mu) {
      const LeakageReport r = max_leakage(dist, mu);
      const LogValue pred = LogValue::integer(static_cast<long>(r.predicted), dist.base());
      CHECK(pred - r.d_s <= r.max_leakage);
      CHECK(r.max_leakage <= pred + r.d_x);
    }
  }
}

TEST_CASE("noisy wiretap cannot leak more than the noiseless one") {
  const NestedScheme s = build_proposed(FieldCtx::create_default(2, 4), 1, 3, 2);
  const JointDistribution dist = JointDistribution::uniform(s);
  Rng rng(85);
  const FieldCtx& f = *s.ctx();
  for (int trial = 0; trial < 10; ++trial) {
    const BitMatrix b = random_bit_matrix(rng, 2, 2, 3);
    std::vector<ExtVector> errors = {ExtVector(2, f.zero()), random_ext_vector(rng, f, 2)};
    const LogValue noisy = conditional_entropy_noisy(dist, b, errors, {1, 1});
    CHECK(noisy >= conditional_entropy(dist, b));
  }
}
