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

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace rankguard {

/// Exact value (1/T) · log_b(R) for a positive rational R, integer T >= 1 and
/// integer base b >= 2. Entropies of distributions with integer weights over
/// a total T take this form, so comparisons and equality tests stay exact.
class LogValue {
 public:
  LogValue() : ratio_(1), denom_(1), base_(2) {}
  LogValue(mpq_class ratio, mpz_class denom, std::uint64_t base);

  static LogValue zero(std::uint64_t base) { return LogValue(mpq_class(1), mpz_class(1), base); }
  /// The integer k, i.e. R = b^k, T = 1.
  static LogValue integer(long k, std::uint64_t base);

  const mpq_class& ratio() const { return ratio_; }
  const mpz_class& denom() const { return denom_; }
  std::uint64_t base() const { return base_; }

  LogValue operator+(const LogValue& o) const;
  LogValue operator-(const LogValue& o) const;

  /// Sign of (*this - o), computed exactly.
  int compare(const LogValue& o) const;
  bool operator<(const LogValue& o) const { return compare(o) < 0; }
  bool operator<=(const LogValue& o) const { return compare(o) <= 0; }
  bool operator>(const LogValue& o) const { return compare(o) > 0; }
  bool operator>=(const LogValue& o) const { return compare(o) >= 0; }
  bool operator==(const LogValue& o) const { return compare(o) == 0; }
  bool operator!=(const LogValue& o) const { return compare(o) != 0; }

  int sign() const;
  bool is_zero() const { return ratio_ == 1; }
  bool equals_integer(long k) const;
  double to_double() const;
  std::string to_string() const;

 private:
  void check_base(const LogValue& o) const;
  /// ratio^(L / denom) for a common multiple L.
  mpq_class scaled(const mpz_class& l) const;

  mpq_class ratio_;
  mpz_class denom_;
  std::uint64_t base_;
};

}  // namespace rankguard
