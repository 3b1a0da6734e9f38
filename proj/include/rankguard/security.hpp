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
#include <vector>

#include "rankguard/coset_scheme.hpp"
#include "rankguard/log_value.hpp"
#include "rankguard/network.hpp"
#include "rankguard/rank_metrics.hpp"

namespace rankguard {

/// P_{S,X} for a nested coset scheme: S has integer weights per message
/// index and X | S is S·ΔG plus a C2 codeword with integer weights per C2
/// index. Probabilities are weight / total(), so they sum to exactly 1.
struct JointDistribution {
  NestedScheme scheme;
  std::vector<std::uint64_t> s_weights;
  std::vector<std::uint64_t> c_weights;

  static JointDistribution uniform(const NestedScheme& s);
  /// Seeded integer weights in [1, max_weight] for X | S, uniform S.
  static JointDistribution random_coset_weights(const NestedScheme& s, Rng& rng, std::uint64_t max_weight);

  std::uint64_t s_total() const;
  std::uint64_t c_total() const;
  std::uint64_t total() const { return s_total() * c_total(); }
  std::uint64_t base() const { return scheme.ctx()->size(); }
};

/// Message index -> message vector, digits base q^m.
ExtVector message_from_index(const NestedScheme& s, std::uint64_t idx);
std::uint64_t message_count(const NestedScheme& s, std::uint64_t cap = std::uint64_t{1} << 20);

/// I(S; B X^T), exact.
LogValue mutual_information(const JointDistribution& dist, const BitMatrix& b);
/// I(S_Z; B X^T) for 0-based message indices `zidx`.
LogValue partial_mutual_information(const JointDistribution& dist, const std::vector<std::size_t>& zidx,
                                    const BitMatrix& b);

struct EntropyReport {
  LogValue h_s;
  LogValue d_s;  // D(S || U)
  LogValue d_x;  // D(X || U_{ψ(S)} | S)
};

EntropyReport entropy_tools(const JointDistribution& dist);
/// H(S | W) for W = B X^T (no errors).
LogValue conditional_entropy(const JointDistribution& dist, const BitMatrix& b);
/// H(S | W') for W' = B X^T + E with E drawn independently from `errors`
/// according to integer `weights`.
LogValue conditional_entropy_noisy(const JointDistribution& dist, const BitMatrix& b,
                                   const std::vector<ExtVector>& errors, const std::vector<std::uint64_t>& weights);

struct LeakageReport {
  std::size_t mu = 0;
  LogValue max_leakage;
  BitMatrix argmax_b;
  std::size_t predicted = 0;
  LogValue d_s;
  LogValue d_x;
  std::uint64_t candidates = 0;
};

struct EquivocationReport {
  LeakageReport leakage;
  LogValue theta;
};

/// Max over canonical wiretap row spaces of dimension <= mu; ties keep the
/// first B in enumeration order.
LeakageReport max_leakage(const JointDistribution& dist, std::size_t mu);
EquivocationReport universal_equivocation(const JointDistribution& dist, std::size_t mu);
LeakageReport partial_leakage(const JointDistribution& dist, const std::vector<std::size_t>& zidx, std::size_t mu);

/// K_{R,mu}(C2^⊥, C1^⊥).
std::size_t predicted_leakage(const NestedScheme& s, std::size_t mu);

struct OmegaBounds {
  long lower = 0;
  long upper = 0;
};

/// Minimum over nonempty Z of M_{R,1}(C_{3,Z}^⊥, C1^⊥) + |Z| - 2.
long omega_exact(const NestedScheme& s);
OmegaBounds omega_bounds(const NestedScheme& s);

}  // namespace rankguard
