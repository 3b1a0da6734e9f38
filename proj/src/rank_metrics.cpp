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

#include "rankguard/rank_metrics.hpp"

#include <algorithm>

namespace rankguard {

namespace {

// XOR basis over F_2 on packed coefficient words.
std::size_t binary_rank(const ExtVector& x) {
  std::uint32_t basis[32] = {};
  std::size_t r = 0;
  for (auto e : x) {
    std::uint32_t v = e.v;
    while (v) {
      const int top = 31 - __builtin_clz(v);
      if (!basis[top]) {
        basis[top] = v;
        ++r;
        break;
      }
      v ^= basis[top];
    }
  }
  return r;
}

void require_subcode(const LinearCode& c1, const LinearCode& c2) {
  if (c1.n() != c2.n()) throw Error(ErrorKind::LengthMismatch, "C1 and C2 have different lengths");
  if (!contains(c1, c2)) throw Error(ErrorKind::NotASubcode, "C2 is not contained in C1");
}

ExtMatrix dual_basis(const LinearCode& c) { return dual(c).gen(); }

}  // namespace

std::size_t rank_weight(const FieldCtx& f, const ExtVector& x) {
  if (f.q() == 2) return binary_rank(x);
  return rank(expand_to_base(f, x));
}

std::size_t rank_distance(const FieldCtx& f, const ExtVector& x, const ExtVector& y) {
  if (x.size() != y.size()) throw Error(ErrorKind::LengthMismatch, "rank distance of vectors with different lengths");
  return rank_weight(f, vec_sub(f, y, x));
}

std::size_t intersection_dim_from_duals(const ExtMatrix& code_dual, const ExtMatrix& v_dual) {
  return code_dual.cols() - rank(vstack(code_dual, v_dual));
}

ProfileTable rdip(const LinearCode& c1, const LinearCode& c2, std::uint64_t cap) {
  require_subcode(c1, c2);
  const std::size_t n = c1.n();
  const ExtMatrix h1 = dual_basis(c1);
  const ExtMatrix h2 = dual_basis(c2);
  ProfileTable out{ProfileKind::RDIP, std::vector<std::size_t>(n + 1, 0)};
  for (std::size_t i = 1; i <= n; ++i) {
    QInvariantFamily fam(c1.ctx(), n, i, cap);
    ExtSubspace v;
    std::size_t best = 0;
    while (fam.next(v)) {
      const ExtMatrix vd = v.complement().basis();
      const std::size_t d1 = intersection_dim_from_duals(h1, vd);
      const std::size_t d2 = intersection_dim_from_duals(h2, vd);
      best = std::max(best, d1 - d2);
    }
    out.values[i] = best;
  }
  return out;
}

WeightTable weights_from_profile(const ProfileTable& profile, std::size_t gap) {
  WeightTable out{profile.kind == ProfileKind::RDIP ? WeightKind::RGRW : WeightKind::RGHW, {}};
  for (std::size_t level = 1; level <= gap; ++level) {
    for (std::size_t j = 0; j < profile.values.size(); ++j) {
      if (profile.values[j] == level) {
        out.values.push_back(j);
        break;
      }
    }
  }
  return out;
}

WeightTable rgrw(const LinearCode& c1, const LinearCode& c2, std::uint64_t cap) {
  return weights_from_profile(rdip(c1, c2, cap), c1.k() - c2.k());
}

WeightTable rgrw_direct(const LinearCode& c1, const LinearCode& c2, std::uint64_t cap) {
  require_subcode(c1, c2);
  const std::size_t n = c1.n();
  const std::size_t gap = c1.k() - c2.k();
  const ExtMatrix h1 = dual_basis(c1);
  const ExtMatrix h2 = dual_basis(c2);
  WeightTable out{WeightKind::RGRW, std::vector<std::size_t>(gap, n + 1)};
  for (std::size_t j = 0; j <= n; ++j) {
    QInvariantFamily fam(c1.ctx(), n, j, cap);
    ExtSubspace v;
    while (fam.next(v)) {
      const ExtMatrix vd = v.complement().basis();
      const std::size_t diff = intersection_dim_from_duals(h1, vd) - intersection_dim_from_duals(h2, vd);
      for (std::size_t i = 1; i <= std::min(diff, gap); ++i) out.values[i - 1] = std::min(out.values[i - 1], j);
    }
  }
  return out;
}

std::size_t first_rgrw(const LinearCode& c1, const LinearCode& c2, std::uint64_t cap) {
  require_subcode(c1, c2);
  if (c1.k() == c2.k()) throw Error(ErrorKind::NotASubcode, "C2 equals C1; the first RGRW is undefined");
  const std::size_t n = c1.n();
  const ExtMatrix h1 = dual_basis(c1);
  const ExtMatrix h2 = dual_basis(c2);
  for (std::size_t j = 1; j <= n; ++j) {
    QInvariantFamily fam(c1.ctx(), n, j, cap);
    ExtSubspace v;
    while (fam.next(v)) {
      const ExtMatrix vd = v.complement().basis();
      if (intersection_dim_from_duals(h1, vd) > intersection_dim_from_duals(h2, vd)) return j;
    }
  }
  return n;
}

ProfileTable rdlp(const LinearCode& c1, const LinearCode& c2) {
  require_subcode(c1, c2);
  const std::size_t n = c1.n();
  const ExtMatrix h1 = dual_basis(c1);
  const ExtMatrix h2 = dual_basis(c2);
  ProfileTable out{ProfileKind::RDLP, std::vector<std::size_t>(n + 1, 0)};
  for (std::size_t i = 1; i <= n; ++i) {
    CoordinateFamily fam(c1.ctx(), n, i);
    ExtSubspace v;
    std::size_t best = 0;
    while (fam.next(v)) {
      const ExtMatrix vd = v.complement().basis();
      best = std::max(best, intersection_dim_from_duals(h1, vd) - intersection_dim_from_duals(h2, vd));
    }
    out.values[i] = best;
  }
  return out;
}

WeightTable rghw(const LinearCode& c1, const LinearCode& c2) {
  return weights_from_profile(rdlp(c1, c2), c1.k() - c2.k());
}

bool profile_is_well_formed(const ProfileTable& profile, std::size_t gap) {
  const auto& v = profile.values;
  if (v.empty() || v.front() != 0 || v.back() != gap) return false;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] < v[i - 1] || v[i] - v[i - 1] > 1) return false;
  }
  return true;
}

bool weights_strictly_increasing(const WeightTable& w) {
  for (std::size_t i = 1; i < w.values.size(); ++i) {
    if (w.values[i] <= w.values[i - 1]) return false;
  }
  return true;
}

bool BoundsReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.passed; });
}

BoundsReport verify_bounds(const LinearCode& c1, const LinearCode& c2, const ProfileTable& profile,
                           const WeightTable& weights) {
  BoundsReport rep;
  const std::size_t n = c1.n();
  const std::size_t k1 = c1.k();
  const std::size_t k2 = c2.k();
  const std::size_t gap = k1 - k2;
  const std::size_t m = c1.ctx()->m();

  rep.checks.push_back({"rdip-monotone-unit-steps", profile_is_well_formed(profile, gap), ""});
  rep.checks.push_back({"rgrw-strictly-increasing", weights_strictly_increasing(weights), ""});

  const std::size_t singleton = std::min(n - k1, (m - 1) * gap);
  bool ok = weights.values.size() == gap;
  for (std::size_t i = 1; ok && i <= gap; ++i) ok = weights.values[i - 1] <= singleton + i;
  rep.checks.push_back({"generalized-singleton", ok, "M_i <= " + std::to_string(singleton) + " + i"});

  if (gap >= 1 && !weights.values.empty()) {
    const std::size_t m1 = weights.values[0];
    // M_1 - 1 <= m(n-k1)/(n-k2), compared without division.
    bool first = m1 <= singleton + 1;
    if (n > k2) first = first && (m1 - 1) * (n - k2) <= m * (n - k1);
    rep.checks.push_back({"first-rgrw-bound", first, "M_1 = " + std::to_string(m1)});

    if (k2 == 0 && m >= 2) {
      bool coro = true;
      std::string which;
      if (n <= m) {
        coro = m1 <= n - k1 + 1;
        which = "n <= m";
      } else if (k1 == 1) {
        coro = m1 <= (m - 1) + 1;
        which = "n > m, dim 1";
      } else {
        coro = (m1 - 1) * n <= m * (n - k1);
        which = "n > m, dim >= 2";
      }
      rep.checks.push_back({"rank-distance-case-split", coro, which});
      if (m >= n) {
        bool c12 = true;
        for (std::size_t i = 1; i <= gap; ++i) c12 = c12 && weights.values[i - 1] <= n - k1 + i;
        rep.checks.push_back({"zero-subcode-singleton", c12, ""});
      }
    }
  }
  return rep;
}

}  // namespace rankguard
