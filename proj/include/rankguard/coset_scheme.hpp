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
#include <optional>
#include <utility>
#include <vector>

#include "rankguard/codes.hpp"
#include "rankguard/rng.hpp"

namespace rankguard {

/// Nested coset coding with C2 ⊊ C1 and ψ(S) = S·ΔG + C2.
struct NestedScheme {
  LinearCode c1;
  LinearCode c2;
  std::size_t l = 0;
  ExtMatrix delta_g;  // l x n
  std::uint64_t seed = 0;
  /// Weight per C2 codeword index for the random coset element; empty means uniform.
  std::vector<std::uint64_t> coset_weights;

  const FieldPtr& ctx() const { return c1.ctx(); }
  std::size_t n() const { return c1.n(); }
  std::size_t k() const { return c1.k(); }

  /// Validates C2 ⊆ C1 and that ΔG completes a basis of C2 to one of C1.
  static NestedScheme make(const LinearCode& c1, const LinearCode& c2, const ExtMatrix& delta_g,
                           std::uint64_t seed = 0);
};

/// The systematic-MRD construction: D is the [l+n, k] Gabidulin code with
/// points 1, α, ..., α^{l+n-1} in the form [I | P]; C1 and C2 are its
/// puncturing and shortening on the last n coordinates.
NestedScheme build_proposed(const FieldPtr& ctx, std::size_t l, std::size_t n, std::size_t k,
                            std::uint64_t seed = 0);

ExtVector coset_representative(const NestedScheme& s, const ExtVector& message);
/// A C2 codeword drawn per the scheme's coset distribution.
ExtVector sample_coset_element(const NestedScheme& s, Rng& rng);
ExtVector encode(const NestedScheme& s, const ExtVector& message, Rng& rng);
/// The message whose coset contains x, or nullopt when x ∉ C1.
std::optional<ExtVector> coset_message(const NestedScheme& s, const ExtVector& x);
/// Canonical coset label: x reduced against the RREF basis of C2.
ExtVector coset_label(const NestedScheme& s, const ExtVector& x);

/// C_{3,Z} = C2 + rows of ΔG outside `zidx` (0-based message indices).
LinearCode partial_subcode(const NestedScheme& s, const std::vector<std::size_t>& zidx);
/// C1' = {[S, X]} with generator [I | ΔG ; 0 | G2].
LinearCode lengthened_code(const NestedScheme& s);
/// (D_{1,i}, D_{2,i}) for 0-based message index i.
std::pair<LinearCode, LinearCode> bound_codes(const NestedScheme& s, std::size_t i);

/// Same (C1, C2) with ΔG' = M·ΔG + R·G2 for seeded random invertible M and random R.
NestedScheme randomized_psi(const NestedScheme& s, Rng& rng);

struct LiftedScheme {
  NestedScheme inner;
  FieldPtr outer;        // F_{q^m} with m = m_tilde + n
  std::size_t m_tilde = 0;

  std::size_t n() const { return inner.n(); }
  std::size_t m() const { return outer->m(); }
};

LiftedScheme lift(const NestedScheme& inner, std::uint32_t target_m);
/// m x n packet matrix [I ; φ(x̃)].
BitMatrix lift_packets(const LiftedScheme& ls, const ExtVector& inner_codeword);
BitMatrix lift_encode(const LiftedScheme& ls, const ExtVector& message, Rng& rng);

}  // namespace rankguard
