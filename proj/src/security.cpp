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

#include "rankguard/security.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>

namespace rankguard {

namespace {

struct SupportEntry {
  std::uint64_t s_index;
  ExtVector x;
  std::uint64_t weight;
};

std::vector<SupportEntry> support(const JointDistribution& dist) {
  const NestedScheme& s = dist.scheme;
  const FieldCtx& f = *s.ctx();
  std::vector<ExtVector> c2_words(dist.c_weights.size());
  for (std::size_t c = 0; c < c2_words.size(); ++c) c2_words[c] = s.c2.codeword(c);
  std::vector<SupportEntry> out;
  for (std::uint64_t si = 0; si < dist.s_weights.size(); ++si) {
    if (dist.s_weights[si] == 0) continue;
    const ExtVector rep = coset_representative(s, message_from_index(s, si));
    for (std::size_t c = 0; c < c2_words.size(); ++c) {
      if (dist.c_weights[c] == 0) continue;
      out.push_back({si, vec_add(f, rep, c2_words[c]), dist.s_weights[si] * dist.c_weights[c]});
    }
  }
  return out;
}

// (1/T) log ∏ (J T / (Ja Jb))^J over a joint weight table.
LogValue mutual_information_of(const std::map<std::pair<std::uint64_t, ExtVector>, std::uint64_t>& joint,
                               std::uint64_t total, std::uint64_t base) {
  std::map<std::uint64_t, std::uint64_t> ma;
  std::map<ExtVector, std::uint64_t> mb;
  for (const auto& [key, w] : joint) {
    ma[key.first] += w;
    mb[key.second] += w;
  }
  mpz_class num(1);
  mpz_class den(1);
  mpz_class tmp;
  for (const auto& [key, w] : joint) {
    const mpz_class a = mpz_class(std::to_string(w)) * mpz_class(std::to_string(total));
    const mpz_class b = mpz_class(std::to_string(ma[key.first])) * mpz_class(std::to_string(mb[key.second]));
    if (a == b) continue;
    mpz_pow_ui(tmp.get_mpz_t(), a.get_mpz_t(), w);
    num *= tmp;
    mpz_pow_ui(tmp.get_mpz_t(), b.get_mpz_t(), w);
    den *= tmp;
  }
  return LogValue(mpq_class(num, den), mpz_class(std::to_string(total)), base);
}

// (1/T) log ∏ (scale · w / T)^w; D(·||U) for a support of size `scale`.
LogValue divergence_from_uniform(const std::vector<std::uint64_t>& weights, const mpz_class& scale,
                                 std::uint64_t base) {
  const std::uint64_t total = std::accumulate(weights.begin(), weights.end(), std::uint64_t{0});
  mpz_class num(1);
  mpz_class den(1);
  mpz_class tmp;
  const mpz_class t(std::to_string(total));
  for (auto w : weights) {
    if (w == 0) continue;
    const mpz_class a = scale * mpz_class(std::to_string(w));
    mpz_pow_ui(tmp.get_mpz_t(), a.get_mpz_t(), w);
    num *= tmp;
    mpz_pow_ui(tmp.get_mpz_t(), t.get_mpz_t(), w);
    den *= tmp;
  }
  return LogValue(mpq_class(num, den), t, base);
}

// (1/T) log ∏ (T / w)^w.
LogValue entropy_of(const std::vector<std::uint64_t>& weights, std::uint64_t base) {
  const std::uint64_t total = std::accumulate(weights.begin(), weights.end(), std::uint64_t{0});
  mpz_class num(1);
  mpz_class den(1);
  mpz_class tmp;
  const mpz_class t(std::to_string(total));
  for (auto w : weights) {
    if (w == 0) continue;
    mpz_pow_ui(tmp.get_mpz_t(), t.get_mpz_t(), w);
    num *= tmp;
    const mpz_class a(std::to_string(w));
    mpz_pow_ui(tmp.get_mpz_t(), a.get_mpz_t(), w);
    den *= tmp;
  }
  return LogValue(mpq_class(num, den), t, base);
}

std::uint64_t partial_label(const NestedScheme& s, std::uint64_t s_index, const std::vector<std::size_t>& zidx) {
  const ExtVector msg = message_from_index(s, s_index);
  std::uint64_t label = 0;
  for (auto it = zidx.rbegin(); it != zidx.rend(); ++it) label = label * s.ctx()->size() + msg[*it].v;
  return label;
}

LogValue leakage_for(const JointDistribution& dist, const std::vector<SupportEntry>& sup, const BitMatrix& b,
                     const std::vector<std::size_t>* zidx) {
  const FieldCtx& f = *dist.scheme.ctx();
  std::map<std::pair<std::uint64_t, ExtVector>, std::uint64_t> joint;
  for (const auto& e : sup) {
    const std::uint64_t a = zidx ? partial_label(dist.scheme, e.s_index, *zidx) : e.s_index;
    joint[{a, apply_transpose(f, e.x, b)}] += e.weight;
  }
  return mutual_information_of(joint, dist.total(), dist.base());
}

}  // namespace

ExtVector message_from_index(const NestedScheme& s, std::uint64_t idx) {
  return index_to_message(idx, s.l, s.ctx()->size());
}

std::uint64_t message_count(const NestedScheme& s, std::uint64_t cap) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < s.l; ++i) {
    count *= s.ctx()->size();
    if (count > cap) throw Error(ErrorKind::EnumerationTooLarge, "message space exceeds cap " + std::to_string(cap));
  }
  return count;
}

JointDistribution JointDistribution::uniform(const NestedScheme& s) {
  JointDistribution d;
  d.scheme = s;
  d.s_weights.assign(message_count(s), 1);
  const std::uint64_t c2 = s.c2.size();
  if (c2 > (std::uint64_t{1} << 20)) throw Error(ErrorKind::EnumerationTooLarge, "C2 too large to enumerate");
  d.c_weights.assign(c2, 1);
  if (!s.coset_weights.empty()) d.c_weights = s.coset_weights;
  return d;
}

JointDistribution JointDistribution::random_coset_weights(const NestedScheme& s, Rng& rng, std::uint64_t max_weight) {
  JointDistribution d = uniform(s);
  for (auto& w : d.c_weights) w = 1 + rng.below(max_weight);
  return d;
}

std::uint64_t JointDistribution::s_total() const {
  return std::accumulate(s_weights.begin(), s_weights.end(), std::uint64_t{0});
}

std::uint64_t JointDistribution::c_total() const {
  return std::accumulate(c_weights.begin(), c_weights.end(), std::uint64_t{0});
}

LogValue mutual_information(const JointDistribution& dist, const BitMatrix& b) {
  return leakage_for(dist, support(dist), b, nullptr);
}

LogValue partial_mutual_information(const JointDistribution& dist, const std::vector<std::size_t>& zidx,
                                    const BitMatrix& b) {
  return leakage_for(dist, support(dist), b, &zidx);
}

EntropyReport entropy_tools(const JointDistribution& dist) {
  const std::uint64_t base = dist.base();
  mpz_class ql;
  mpz_ui_pow_ui(ql.get_mpz_t(), base, dist.scheme.l);
  mpz_class c2(std::to_string(dist.c_weights.size()));
  return EntropyReport{entropy_of(dist.s_weights, base), divergence_from_uniform(dist.s_weights, ql, base),
                       divergence_from_uniform(dist.c_weights, c2, base)};
}

LogValue conditional_entropy(const JointDistribution& dist, const BitMatrix& b) {
  return entropy_of(dist.s_weights, dist.base()) - mutual_information(dist, b);
}

LogValue conditional_entropy_noisy(const JointDistribution& dist, const BitMatrix& b,
                                   const std::vector<ExtVector>& errors, const std::vector<std::uint64_t>& weights) {
  if (errors.size() != weights.size() || errors.empty()) {
    throw Error(ErrorKind::DimensionMismatch, "error list and weights must be nonempty and aligned");
  }
  const FieldCtx& f = *dist.scheme.ctx();
  const std::uint64_t we = std::accumulate(weights.begin(), weights.end(), std::uint64_t{0});
  std::map<std::pair<std::uint64_t, ExtVector>, std::uint64_t> joint;
  for (const auto& e : support(dist)) {
    const ExtVector w = apply_transpose(f, e.x, b);
    for (std::size_t i = 0; i < errors.size(); ++i) {
      if (weights[i] == 0) continue;
      joint[{e.s_index, vec_add(f, w, errors[i])}] += e.weight * weights[i];
    }
  }
  return entropy_of(dist.s_weights, dist.base()) - mutual_information_of(joint, dist.total() * we, dist.base());
}

std::size_t predicted_leakage(const NestedScheme& s, std::size_t mu) {
  const ProfileTable k = rdip(dual(s.c2), dual(s.c1));
  return k.values[std::min(mu, s.n())];
}

namespace {

LeakageReport scan(const JointDistribution& dist, std::size_t mu, const std::vector<std::size_t>* zidx) {
  const NestedScheme& s = dist.scheme;
  const auto sup = support(dist);
  LeakageReport rep;
  rep.mu = mu;
  rep.max_leakage = LogValue::zero(dist.base());
  rep.argmax_b = bit_matrix(s.ctx()->q(), 0, s.n());
  WiretapEnumerator it(s.ctx()->q(), s.n(), mu);
  BitMatrix b;
  bool first = true;
  while (it.next(b)) {
    ++rep.candidates;
    LogValue v = leakage_for(dist, sup, b, zidx);
    if (first || v > rep.max_leakage) {
      rep.max_leakage = v;
      rep.argmax_b = b;
      first = false;
    }
  }
  const EntropyReport er = entropy_tools(dist);
  rep.d_s = er.d_s;
  rep.d_x = er.d_x;
  if (zidx) {
    const LinearCode c3 = partial_subcode(s, *zidx);
    rep.predicted = rdip(dual(c3), dual(s.c1)).values[std::min(mu, s.n())];
  } else {
    rep.predicted = predicted_leakage(s, mu);
  }
  return rep;
}

}  // namespace

LeakageReport max_leakage(const JointDistribution& dist, std::size_t mu) { return scan(dist, mu, nullptr); }

EquivocationReport universal_equivocation(const JointDistribution& dist, std::size_t mu) {
  EquivocationReport rep;
  rep.leakage = max_leakage(dist, mu);
  rep.theta = entropy_of(dist.s_weights, dist.base()) - rep.leakage.max_leakage;
  return rep;
}

LeakageReport partial_leakage(const JointDistribution& dist, const std::vector<std::size_t>& zidx, std::size_t mu) {
  std::vector<std::size_t> z = zidx;
  std::sort(z.begin(), z.end());
  return scan(dist, mu, &z);
}

long omega_exact(const NestedScheme& s) {
  if (s.l > 12) throw Error(ErrorKind::EnumerationTooLarge, "2^l message subsets exceed the cap");
  const LinearCode c1d = dual(s.c1);
  long best = -1;
  bool have = false;
  for (std::uint32_t mask = 1; mask < (1u << s.l); ++mask) {
    std::vector<std::size_t> z;
    for (std::size_t i = 0; i < s.l; ++i) {
      if (mask & (1u << i)) z.push_back(i);
    }
    const LinearCode c3d = dual(partial_subcode(s, z));
    const long v = static_cast<long>(first_rgrw(c3d, c1d)) + static_cast<long>(z.size()) - 2;
    if (!have || v < best) {
      best = v;
      have = true;
    }
  }
  return best;
}

OmegaBounds omega_bounds(const NestedScheme& s) {
  const LinearCode c1d = dual(s.c1);
  OmegaBounds b;
  bool have = false;
  for (std::size_t i = 0; i < s.l; ++i) {
    const long up = static_cast<long>(first_rgrw(dual(partial_subcode(s, {i})), c1d)) - 1;
    const auto [d1, d2] = bound_codes(s, i);
    const long lo = static_cast<long>(first_rgrw(dual(d2), dual(d1))) - 1;
    if (!have || up < b.upper) b.upper = up;
    if (!have || lo < b.lower) b.lower = lo;
    have = true;
  }
  return b;
}

}  // namespace rankguard
