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
#include <memory>
#include <vector>

namespace rankguard {

/// One element of F_{q^m}. The value packs the polynomial-basis coefficients
/// c_0 + c_1 q + ... + c_{m-1} q^{m-1}, so a base-field scalar c is encoded as
/// c itself and the embedding F_q -> F_{q^m} is the identity on encodings.
struct ExtElement {
  std::uint32_t v = 0;

  friend bool operator==(ExtElement a, ExtElement b) { return a.v == b.v; }
  friend bool operator!=(ExtElement a, ExtElement b) { return a.v != b.v; }
  friend bool operator<(ExtElement a, ExtElement b) { return a.v < b.v; }
};

class FieldCtx;
using FieldPtr = std::shared_ptr<const FieldCtx>;

inline constexpr std::uint64_t kDefaultFieldCap = std::uint64_t{1} << 16;
inline constexpr std::uint64_t kMaxFieldCap = std::uint64_t{1} << 20;

/// The tower F_q ⊂ F_{q^m} for prime q. Immutable after construction.
class FieldCtx {
 public:
  /// `modulus` is little-endian, length m+1, monic. Throws NotIrreducible or
  /// UnsupportedSize.
  static FieldPtr create(std::uint32_t q, std::uint32_t m, const std::vector<std::uint32_t>& modulus,
                         std::uint64_t cap = kDefaultFieldCap);
  /// Built-in modulus for q = 2, m <= 16; for other q the smallest monic
  /// irreducible in lexicographic order.
  static FieldPtr create_default(std::uint32_t q, std::uint32_t m, std::uint64_t cap = kDefaultFieldCap);
  /// The prime field F_q itself (m = 1, modulus x).
  static FieldPtr prime(std::uint32_t q);

  static std::vector<std::uint32_t> default_modulus(std::uint32_t q, std::uint32_t m);
  static bool is_irreducible(std::uint32_t q, const std::vector<std::uint32_t>& poly);

  std::uint32_t q() const { return q_; }
  std::uint32_t m() const { return m_; }
  std::uint32_t size() const { return size_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  ExtElement zero() const { return {0}; }
  ExtElement one() const { return {1}; }
  /// Residue of x modulo the modulus.
  ExtElement alpha() const { return alpha_; }
  ExtElement primitive() const { return primitive_; }
  ExtElement from_int(std::uint32_t value) const;
  ExtElement from_coeffs(const std::vector<std::uint32_t>& coeffs) const;
  std::vector<std::uint32_t> coeffs(ExtElement a) const;
  std::uint32_t coeff(ExtElement a, std::uint32_t i) const;

  ExtElement add(ExtElement a, ExtElement b) const {
    if (q_ == 2) return {a.v ^ b.v};
    return digitwise(a, b, false);
  }
  ExtElement sub(ExtElement a, ExtElement b) const {
    if (q_ == 2) return {a.v ^ b.v};
    return digitwise(a, b, true);
  }
  ExtElement neg(ExtElement a) const { return sub(zero(), a); }
  ExtElement mul(ExtElement a, ExtElement b) const {
    if (a.v == 0 || b.v == 0) return {0};
    std::uint32_t e = log_[a.v] + log_[b.v];
    return {exp_[e]};
  }
  ExtElement inv(ExtElement a) const;
  ExtElement div(ExtElement a, ExtElement b) const { return mul(a, inv(b)); }
  ExtElement pow(ExtElement a, std::uint64_t e) const;
  /// a^{q^i}.
  ExtElement frobenius(ExtElement a, std::uint64_t i) const;
  bool is_base(ExtElement a) const { return a.v < q_; }
  /// Discrete log to base primitive(); a must be nonzero.
  std::uint32_t log(ExtElement a) const { return log_[a.v]; }

  bool same_as(const FieldCtx& other) const {
    return q_ == other.q_ && m_ == other.m_ && modulus_ == other.modulus_;
  }

  FieldCtx(std::uint32_t q, std::uint32_t m, std::vector<std::uint32_t> modulus);

 private:
  ExtElement digitwise(ExtElement a, ExtElement b, bool subtract) const;
  std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const;
  void build_tables();

  std::uint32_t q_;
  std::uint32_t m_;
  std::uint32_t size_;
  std::vector<std::uint32_t> modulus_;
  ExtElement alpha_;
  ExtElement primitive_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;
};

bool same_field(const FieldPtr& a, const FieldPtr& b);

}  // namespace rankguard
