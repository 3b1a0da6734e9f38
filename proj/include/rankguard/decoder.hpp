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
#include <string>

#include "rankguard/coset_scheme.hpp"
#include "rankguard/network.hpp"

namespace rankguard {

enum class DecodeStatus { Decoded, Ambiguous, Failed };
const char* to_string(DecodeStatus s);

struct DecodeResult {
  DecodeStatus status = DecodeStatus::Failed;
  ExtVector message;               // argmin message (first in order when tied)
  std::uint64_t message_index = 0;
  std::size_t discrepancy = 0;
  std::size_t runner_up = 0;       // second-smallest discrepancy over other cosets
};

/// Δ_A(ψ(S), Y): min over X in the coset of d_R(X A^T, Y).
std::size_t discrepancy_coherent(const NestedScheme& s, const BitMatrix& a, const ExtVector& y,
                                 const ExtVector& message);
/// Minimum-discrepancy decoding over every coset. With `radius`, a minimum
/// above it is reported as Failed (detected error).
DecodeResult decode_coherent(const NestedScheme& s, const BitMatrix& a, const ExtVector& y,
                             std::optional<std::size_t> radius = std::nullopt);

/// δ_A: min over v ∈ C1 \ C2 of rank_q(v A^T).
std::size_t delta_distance(const NestedScheme& s, const BitMatrix& a);
/// Min of δ_A over all N x n matrices A with rank >= n - rho.
std::size_t delta_min_over_a(const NestedScheme& s, std::size_t rho, std::size_t n_out);

/// Δ_ρ(X, Y) = min rank(Y - X A^T) over N x n matrices A of rank >= n - ρ,
/// for X (m x n) and Y (m x N) with N >= n - ρ:
/// max(rank[X Y] - rank X, rank[X Y] - rank Y - ρ, 0).
std::size_t discrepancy_noncoherent_closed(const BitMatrix& x, const BitMatrix& y, std::size_t rho);
/// Same quantity by direct minimisation over every A with rank >= n - ρ.
std::size_t discrepancy_noncoherent_bruteforce(const BitMatrix& x, const BitMatrix& y, std::size_t rho);
DecodeResult decode_noncoherent(const LiftedScheme& ls, const BitMatrix& y, std::size_t rho);

/// δ_ρ of the lifted scheme by enumerating every A, A' (N x n, rank >= n - ρ)
/// and every inner difference in C1 \ C2.
std::size_t delta_rho_lifted(const LiftedScheme& ls, std::size_t rho, std::size_t n_out);

enum class CapabilityMode { Exhaustive, Sampled };

struct Counterexample {
  BitMatrix a;
  ExtVector message;
  ExtVector x;
  ExtVector error;
  DecodeResult result;
};

struct CapabilityReport {
  bool verified = false;
  std::uint64_t trials = 0;
  bool budget_exhausted = false;
  std::optional<Counterexample> counterexample;
};

/// Exhaustive: every A (N x n, rank >= n - ρ), message, coset element and
/// canonical error of rank <= t; stops at the first failure. Sampled: seeded
/// draws, at most `budget` of them. Exhaustive mode throws BudgetExceeded when
/// its decode count would exceed `budget`.
CapabilityReport capability_report(const NestedScheme& s, std::size_t t, std::size_t rho, CapabilityMode mode,
                                   std::uint64_t budget, std::uint64_t seed = 0, std::size_t n_out = 0,
                                   std::uint64_t trials = 0);

struct FailureWitness {
  BitMatrix a;
  ExtVector message;     // the transmitted message (all zero)
  ExtVector x;           // the transmitted codeword (zero)
  ExtVector error;       // rank <= t
  ExtVector y;
  ExtVector competitor;  // codeword v in C1 \ C2 with d_R(v) = M_{R,1}
  std::size_t d_prime = 0;
  DecodeResult result;
};

/// Builds A with rank n - ρ that collapses a minimum-weight v ∈ C1 \ C2 to
/// rank [d - ρ]^+, then splits v A^T = W + W' with rank W = ⌈d'/2⌉ and sends
/// X = 0 with error W. Returns nullopt when ⌈d'/2⌉ > t.
std::optional<FailureWitness> construct_failure(const NestedScheme& s, std::size_t t, std::size_t rho);

struct NoncoherentReport {
  bool verified = false;
  std::uint64_t trials = 0;
  std::optional<Counterexample> counterexample;
};

/// Seeded end-to-end trials through the lifted scheme with N = n outputs.
NoncoherentReport noncoherent_trials(const LiftedScheme& ls, std::size_t t, std::size_t rho, std::uint64_t trials,
                                     std::uint64_t seed);

}  // namespace rankguard
