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

#include "rankguard/gf_tower.hpp"

#include <string>

#include "rankguard/error.hpp"

namespace rankguard {

namespace {

using Poly = std::vector<std::uint32_t>;

bool is_prime(std::uint32_t q) {
  if (q < 2) return false;
  for (std::uint32_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t q) {
  std::uint32_t r = 1;
  std::uint32_t e = q - 2;
  std::uint64_t b = a % q;
  while (e) {
    if (e & 1) r = static_cast<std::uint32_t>((r * b) % q);
    b = (b * b) % q;
    e >>= 1;
  }
  return r;
}

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of a modulo a monic-or-not nonzero b over F_q.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t q) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint32_t lead_inv = inv_mod(b.back(), q);
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - 1 - db;
    const std::uint32_t f = static_cast<std::uint32_t>((std::uint64_t{a.back()} * lead_inv) % q);
    for (std::size_t i = 0; i <= db; ++i) {
      const std::uint64_t s = std::uint64_t{f} * b[i] % q;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + q - s) % q);
    }
    trim(a);
  }
  return a;
}

std::uint64_t ipow(std::uint64_t base, std::uint32_t e) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < e; ++i) r *= base;
  return r;
}

// Default q = 2 moduli, m = 1..16, little-endian bit masks without the x^m term.
constexpr std::uint32_t kBinaryModuli[17] = {
    0,
    0x1,                   // x + 1
    0x3,                   // x^2 + x + 1
    0x3,                   // x^3 + x + 1
    0x3,                   // x^4 + x + 1
    0x5,                   // x^5 + x^2 + 1
    0x3,                   // x^6 + x + 1
    0x3,                   // x^7 + x + 1
    0x1d,                  // x^8 + x^4 + x^3 + x^2 + 1
    0x11,                  // x^9 + x^4 + 1
    0x9,                   // x^10 + x^3 + 1
    0x5,                   // x^11 + x^2 + 1
    0x53,                  // x^12 + x^6 + x^4 + x + 1
    0x1b,                  // x^13 + x^4 + x^3 + x + 1
    0x443,                 // x^14 + x^10 + x^6 + x + 1
    0x3,                   // x^15 + x + 1
    0x100b,                // x^16 + x^12 + x^3 + x + 1
};

}  // namespace

bool FieldCtx::is_irreducible(std::uint32_t q, const std::vector<std::uint32_t>& poly) {
  Poly p = poly;
  trim(p);
  if (p.size() < 2) return false;
  const std::size_t deg = p.size() - 1;
  if (deg == 1) return true;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    const std::uint64_t count = ipow(q, static_cast<std::uint32_t>(d));
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly g(d + 1, 0);
      std::uint64_t x = idx;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(x % q);
        x /= q;
      }
      g[d] = 1;
      if (poly_mod(p, g, q).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> FieldCtx::default_modulus(std::uint32_t q, std::uint32_t m) {
  if (m == 0) throw Error(ErrorKind::UnsupportedSize, "extension degree must be at least 1");
  if (q == 2 && m <= 16) {
    Poly p(m + 1, 0);
    for (std::uint32_t i = 0; i < m; ++i) p[i] = (kBinaryModuli[m] >> i) & 1u;
    p[m] = 1;
    return p;
  }
  if (!is_prime(q)) throw Error(ErrorKind::UnsupportedSize, "q = " + std::to_string(q) + " is not prime");
  const std::uint64_t count = ipow(q, m);
  if (count > kMaxFieldCap) throw Error(ErrorKind::UnsupportedSize, "q^m exceeds the field cap");
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Poly p(m + 1, 0);
    std::uint64_t x = idx;
    for (std::uint32_t i = 0; i < m; ++i) {
      p[i] = static_cast<std::uint32_t>(x % q);
      x /= q;
    }
    p[m] = 1;
    if (is_irreducible(q, p)) return p;
  }
  throw Error(ErrorKind::NotIrreducible, "no irreducible polynomial found");
}

FieldPtr FieldCtx::create(std::uint32_t q, std::uint32_t m, const std::vector<std::uint32_t>& modulus,
                          std::uint64_t cap) {
  if (!is_prime(q)) throw Error(ErrorKind::UnsupportedSize, "q = " + std::to_string(q) + " is not prime");
  if (m == 0) throw Error(ErrorKind::UnsupportedSize, "extension degree must be at least 1");
  if (cap > kMaxFieldCap) cap = kMaxFieldCap;
  const std::uint64_t size = ipow(q, m);
  if (m > 32 || size > cap) {
    throw Error(ErrorKind::UnsupportedSize,
                "q^m = " + std::to_string(q) + "^" + std::to_string(m) + " exceeds cap " + std::to_string(cap));
  }
  if (modulus.size() != m + 1 || modulus.back() != 1) {
    throw Error(ErrorKind::NotIrreducible, "modulus must be monic of degree " + std::to_string(m));
  }
  for (auto c : modulus) {
    if (c >= q) throw Error(ErrorKind::NotIrreducible, "modulus coefficient out of range");
  }
  if (!is_irreducible(q, modulus)) throw Error(ErrorKind::NotIrreducible, "modulus is reducible over F_q");
  return std::make_shared<const FieldCtx>(q, m, modulus);
}

FieldPtr FieldCtx::create_default(std::uint32_t q, std::uint32_t m, std::uint64_t cap) {
  return create(q, m, default_modulus(q, m), cap);
}

FieldPtr FieldCtx::prime(std::uint32_t q) { return create(q, 1, {0, 1}); }

FieldCtx::FieldCtx(std::uint32_t q, std::uint32_t m, std::vector<std::uint32_t> modulus)
    : q_(q), m_(m), size_(static_cast<std::uint32_t>(ipow(q, m))), modulus_(std::move(modulus)) {
  if (m_ >= 2) {
    alpha_ = {q_};
  } else {
    alpha_ = {(q_ - modulus_[0]) % q_};
  }
  build_tables();
}

ExtElement FieldCtx::digitwise(ExtElement a, ExtElement b, bool subtract) const {
  std::uint32_t out = 0;
  std::uint32_t place = 1;
  std::uint32_t x = a.v;
  std::uint32_t y = b.v;
  for (std::uint32_t i = 0; i < m_; ++i) {
    const std::uint32_t da = x % q_;
    const std::uint32_t db = y % q_;
    const std::uint32_t d = subtract ? (da + q_ - db) % q_ : (da + db) % q_;
    out += d * place;
    place *= q_;
    x /= q_;
    y /= q_;
  }
  return {out};
}

std::uint32_t FieldCtx::slow_mul(std::uint32_t a, std::uint32_t b) const {
  Poly pa(m_, 0);
  Poly pb(m_, 0);
  for (std::uint32_t i = 0; i < m_; ++i) {
    pa[i] = a % q_;
    a /= q_;
    pb[i] = b % q_;
    b /= q_;
  }
  Poly prod(2 * m_, 0);
  for (std::uint32_t i = 0; i < m_; ++i) {
    for (std::uint32_t j = 0; j < m_; ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{pa[i]} * pb[j]) % q_);
    }
  }
  Poly r = poly_mod(prod, modulus_, q_);
  std::uint32_t out = 0;
  for (std::size_t i = r.size(); i-- > 0;) out = out * q_ + r[i];
  return out;
}

void FieldCtx::build_tables() {
  const std::uint32_t order = size_ - 1;
  log_.assign(size_, 0);
  exp_.assign(2 * static_cast<std::size_t>(order), 0);
  for (std::uint32_t g = 1; g < size_; ++g) {
    std::uint32_t x = 1;
    std::uint32_t k = 0;
    bool ok = true;
    for (k = 0; k < order; ++k) {
      exp_[k] = x;
      x = slow_mul(x, g);
      if (x == 1 && k + 1 < order) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    primitive_ = {g};
    break;
  }
  for (std::uint32_t k = 0; k < order; ++k) {
    log_[exp_[k]] = k;
    exp_[k + order] = exp_[k];
  }
}

ExtElement FieldCtx::from_int(std::uint32_t value) const {
  if (value >= size_) throw Error(ErrorKind::UnsupportedSize, "element encoding out of range");
  return {value};
}

ExtElement FieldCtx::from_coeffs(const std::vector<std::uint32_t>& coeffs) const {
  if (coeffs.size() != m_) throw Error(ErrorKind::LengthMismatch, "element needs exactly m coefficients");
  std::uint32_t out = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= q_) throw Error(ErrorKind::UnsupportedSize, "coefficient out of range");
    out = out * q_ + coeffs[i];
  }
  return {out};
}

std::vector<std::uint32_t> FieldCtx::coeffs(ExtElement a) const {
  std::vector<std::uint32_t> out(m_);
  std::uint32_t x = a.v;
  for (std::uint32_t i = 0; i < m_; ++i) {
    out[i] = x % q_;
    x /= q_;
  }
  return out;
}

std::uint32_t FieldCtx::coeff(ExtElement a, std::uint32_t i) const {
  if (q_ == 2) return (a.v >> i) & 1u;
  std::uint32_t x = a.v;
  for (std::uint32_t k = 0; k < i; ++k) x /= q_;
  return x % q_;
}

ExtElement FieldCtx::inv(ExtElement a) const {
  if (a.v == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  const std::uint32_t order = size_ - 1;
  return {exp_[(order - log_[a.v]) % order]};
}

ExtElement FieldCtx::pow(ExtElement a, std::uint64_t e) const {
  if (e == 0) return one();
  if (a.v == 0) return zero();
  const std::uint64_t order = size_ - 1;
  return {exp_[(std::uint64_t{log_[a.v]} * (e % order)) % order]};
}

ExtElement FieldCtx::frobenius(ExtElement a, std::uint64_t i) const {
  if (a.v == 0) return a;
  const std::uint64_t order = size_ - 1;
  std::uint64_t factor = 1;
  for (std::uint64_t k = 0; k < i % m_; ++k) factor = (factor * q_) % order;
  return {exp_[(std::uint64_t{log_[a.v]} * factor) % order]};
}

bool same_field(const FieldPtr& a, const FieldPtr& b) { return a == b || (a && b && a->same_as(*b)); }

}  // namespace rankguard
