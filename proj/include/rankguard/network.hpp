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

#include "rankguard/linalg.hpp"
#include "rankguard/rng.hpp"
#include "rankguard/subspaces.hpp"

namespace rankguard {

/// One channel instance: Y^T = A X^T + D Z^T and W^T = B X^T + Fw Z^T.
struct ChannelRealization {
  BitMatrix a;   // N x n
  BitMatrix b;   // mu x n
  BitMatrix d;   // N x t
  BitMatrix fw;  // mu x t
  ExtVector z;   // t error packets

  std::size_t rho() const { return a.cols() - rank(a); }
};

struct Transmission {
  ExtVector y;
  ExtVector w;
};

BitMatrix random_bit_matrix(Rng& rng, std::uint32_t q, std::size_t rows, std::size_t cols);
ExtVector random_ext_vector(Rng& rng, const FieldCtx& f, std::size_t len);
/// Uniform over N x n matrices of rank >= n - rho_max by rejection; falls
/// back to R·[I;0]·C after 10^4 rejected draws.
BitMatrix sample_transfer(Rng& rng, std::uint32_t q, std::size_t rows, std::size_t n, std::size_t rho_max);

Transmission transmit(const FieldCtx& f, const ExtVector& x, const ChannelRealization& real);
/// The received error Z D^T (length N).
ExtVector error_vector(const FieldCtx& f, const BitMatrix& d, const ExtVector& z);

enum class WiretapMode { RowSpace, Full };

/// Wiretap matrices for a fixed μ. RowSpace mode yields one RREF basis per
/// row space of dimension <= μ (including the zero space as a 0 x n matrix);
/// Full mode yields every μ x n matrix.
class WiretapEnumerator {
 public:
  WiretapEnumerator(std::uint32_t q, std::size_t n, std::size_t mu, WiretapMode mode = WiretapMode::RowSpace,
                    std::uint64_t cap = kDefaultEnumerationCap);
  bool next(BitMatrix& out);
  std::uint64_t size() const { return size_; }

 private:
  std::uint32_t q_;
  std::size_t n_;
  std::size_t mu_;
  WiretapMode mode_;
  std::uint64_t size_ = 0;
  std::size_t dim_ = 0;
  RrefEnumerator rref_it_;
  std::uint64_t counter_ = 0;
};

enum class ErrorMode { Exhaustive, Sampled };

/// Error vectors E ∈ F_{q^m}^N with rank_q(E) <= t. Exhaustive mode yields
/// each E exactly once, ordered by rank, then by the RREF row space R of its
/// expansion, then by the packets Z with E = Z·R.
class ErrorEnumerator {
 public:
  ErrorEnumerator(FieldPtr f, std::size_t n_out, std::size_t t, std::uint64_t cap = kDefaultEnumerationCap);
  /// D is N x r and Z has r packets with E = Z D^T.
  bool next(ExtVector& e, BitMatrix* d = nullptr, ExtVector* z = nullptr);
  std::uint64_t size() const { return size_; }

 private:
  bool advance_z();
  bool advance_space();

  FieldPtr f_;
  std::size_t n_out_;
  std::size_t t_;
  std::uint64_t size_ = 0;
  std::size_t r_ = 0;
  bool started_ = false;
  bool done_ = false;
  RrefEnumerator space_it_;
  BitMatrix space_;
  std::uint64_t z_index_ = 0;
  std::uint64_t z_count_ = 0;
};

/// Count of vectors of F_{q^m}^r whose entries are F_q-independent.
std::uint64_t independent_tuples(std::uint32_t q, std::uint32_t m, std::size_t r);

/// Seeded (D, Z) draw with D ∈ F_q^{N x t}, Z ∈ F_{q^m}^t.
void sample_error(Rng& rng, const FieldCtx& f, std::size_t n_out, std::size_t t, BitMatrix& d, ExtVector& z);

}  // namespace rankguard
