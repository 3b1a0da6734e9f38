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

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "rankguard/codes.hpp"
#include "rankguard/subspaces.hpp"

namespace rankguard {

std::size_t rank_weight(const FieldCtx& f, const ExtVector& x);
std::size_t rank_distance(const FieldCtx& f, const ExtVector& x, const ExtVector& y);

/// dim(C ∩ V) computed as n - dim(C^⊥ + V^⊥), given bases of both duals.
std::size_t intersection_dim_from_duals(const ExtMatrix& code_dual, const ExtMatrix& v_dual);

enum class ProfileKind { RDIP, RDLP };
enum class WeightKind { RGRW, RGHW };

/// values[i] for i = 0..n.
struct ProfileTable {
  ProfileKind kind = ProfileKind::RDIP;
  std::vector<std::size_t> values;
};

/// values[i-1] = M_i for i = 1..dim(C1/C2).
struct WeightTable {
  WeightKind kind = WeightKind::RGRW;
  std::vector<std::size_t> values;
};

/// K_{R,i}(C1, C2) for i = 0..n by streaming max over Γ_i. Throws
/// NotASubcode unless C2 ⊆ C1.
ProfileTable rdip(const LinearCode& c1, const LinearCode& c2, std::uint64_t cap = kDefaultEnumerationCap);
/// M_{R,i} = min{ j : K_{R,j} = i }.
WeightTable weights_from_profile(const ProfileTable& profile, std::size_t gap);
WeightTable rgrw(const LinearCode& c1, const LinearCode& c2, std::uint64_t cap = kDefaultEnumerationCap);
/// RGRW straight from the definition: min dim V over Γ with
/// dim(C1∩V) - dim(C2∩V) >= i. Test and cross-check path.
WeightTable rgrw_direct(const LinearCode& c1, const LinearCode& c2, std::uint64_t cap = kDefaultEnumerationCap);
/// M_{R,1} only, stopping at the first dimension that reaches a gap of 1.
std::size_t first_rgrw(const LinearCode& c1, const LinearCode& c2, std::uint64_t cap = kDefaultEnumerationCap);

ProfileTable rdlp(const LinearCode& c1, const LinearCode& c2);
WeightTable rghw(const LinearCode& c1, const LinearCode& c2);

/// Structural checks on a profile: endpoints, monotone, unit steps.
bool profile_is_well_formed(const ProfileTable& profile, std::size_t gap);
bool weights_strictly_increasing(const WeightTable& w);

struct BoundCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct BoundsReport {
  std::vector<BoundCheck> checks;
  bool all_passed() const;
};

BoundsReport verify_bounds(const LinearCode& c1, const LinearCode& c2, const ProfileTable& profile,
                           const WeightTable& weights);

}  // namespace rankguard
