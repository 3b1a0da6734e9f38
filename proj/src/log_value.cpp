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

#include "rankguard/log_value.hpp"

#include <cmath>
#include <sstream>

#include "rankguard/error.hpp"

namespace rankguard {

namespace {

mpq_class pow_q(const mpq_class& x, const mpz_class& e) {
  if (!e.fits_ulong_p()) throw Error(ErrorKind::EnumerationTooLarge, "exponent too large for exact logarithm");
  const unsigned long k = e.get_ui();
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), k);
  mpq_class out(num, den);
  out.canonicalize();
  return out;
}

double log_mpz(const mpz_class& z) {
  long exp = 0;
  const double d = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::log(d) + static_cast<double>(exp) * std::log(2.0);
}

}  // namespace

LogValue::LogValue(mpq_class ratio, mpz_class denom, std::uint64_t base)
    : ratio_(std::move(ratio)), denom_(std::move(denom)), base_(base) {
  ratio_.canonicalize();
  if (ratio_ <= 0) throw Error(ErrorKind::DimensionMismatch, "logarithm of a non-positive ratio");
  if (denom_ <= 0) throw Error(ErrorKind::DimensionMismatch, "non-positive logarithm denominator");
  if (base_ < 2) throw Error(ErrorKind::DimensionMismatch, "logarithm base below 2");
}

LogValue LogValue::integer(long k, std::uint64_t base) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), base, static_cast<unsigned long>(k < 0 ? -k : k));
  mpq_class r = k < 0 ? mpq_class(mpz_class(1), p) : mpq_class(p);
  return LogValue(r, mpz_class(1), base);
}

void LogValue::check_base(const LogValue& o) const {
  if (base_ != o.base_) throw Error(ErrorKind::DimensionMismatch, "logarithms with different bases");
}

mpq_class LogValue::scaled(const mpz_class& l) const {
  mpz_class e = l / denom_;
  return pow_q(ratio_, e);
}

LogValue LogValue::operator+(const LogValue& o) const {
  check_base(o);
  if (denom_ == o.denom_) return LogValue(ratio_ * o.ratio_, denom_, base_);
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), denom_.get_mpz_t(), o.denom_.get_mpz_t());
  return LogValue(scaled(l) * o.scaled(l), l, base_);
}

LogValue LogValue::operator-(const LogValue& o) const {
  check_base(o);
  if (denom_ == o.denom_) return LogValue(ratio_ / o.ratio_, denom_, base_);
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), denom_.get_mpz_t(), o.denom_.get_mpz_t());
  return LogValue(scaled(l) / o.scaled(l), l, base_);
}

int LogValue::compare(const LogValue& o) const {
  check_base(o);
  if (denom_ == o.denom_) return cmp(ratio_, o.ratio_) < 0 ? -1 : (ratio_ == o.ratio_ ? 0 : 1);
  return (*this - o).sign();
}

int LogValue::sign() const {
  const int c = cmp(ratio_, mpq_class(1));
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

bool LogValue::equals_integer(long k) const {
  if (k == 0) return is_zero();
  const mpz_class e = denom_ * (k < 0 ? -k : k);
  if (!e.fits_ulong_p()) return false;
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), base_, e.get_ui());
  const mpq_class target = k < 0 ? mpq_class(mpz_class(1), p) : mpq_class(p);
  return ratio_ == target;
}

double LogValue::to_double() const {
  const double ln = log_mpz(ratio_.get_num()) - log_mpz(ratio_.get_den());
  return ln / (denom_.get_d() * std::log(static_cast<double>(base_)));
}

std::string LogValue::to_string() const {
  std::ostringstream os;
  os.precision(12);
  os << to_double();
  return os.str();
}

}  // namespace rankguard
