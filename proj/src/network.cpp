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

#include "rankguard/network.hpp"

#include <string>

#include "rankguard/rank_metrics.hpp"

namespace rankguard {

namespace {

std::uint64_t checked_pow(std::uint64_t base, std::size_t e, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (r > cap / base + 1) return UINT64_MAX;
    r *= base;
  }
  return r;
}

BitMatrix random_invertible(Rng& rng, std::uint32_t q, std::size_t n) {
  BitMatrix m;
  do {
    m = random_bit_matrix(rng, q, n, n);
  } while (rank(m) != n);
  return m;
}

}  // namespace

BitMatrix random_bit_matrix(Rng& rng, std::uint32_t q, std::size_t rows, std::size_t cols) {
  BitMatrix m = bit_matrix(q, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = ExtElement{static_cast<std::uint32_t>(rng.below(q))};
  }
  return m;
}

ExtVector random_ext_vector(Rng& rng, const FieldCtx& f, std::size_t len) {
  ExtVector v(len);
  for (auto& e : v) e = ExtElement{static_cast<std::uint32_t>(rng.below(f.size()))};
  return v;
}

BitMatrix sample_transfer(Rng& rng, std::uint32_t q, std::size_t rows, std::size_t n, std::size_t rho_max) {
  const std::size_t need = rho_max >= n ? 0 : n - rho_max;
  if (rows < need) {
    throw Error(ErrorKind::InfeasibleRank, "N = " + std::to_string(rows) + " rows cannot carry rank " + std::to_string(need));
  }
  for (int attempt = 0; attempt < 10000; ++attempt) {
    BitMatrix a = random_bit_matrix(rng, q, rows, n);
    if (rank(a) >= need) return a;
  }
  BitMatrix core = bit_matrix(q, rows, n);
  for (std::size_t i = 0; i < need; ++i) core(i, i) = ExtElement{1};
  return multiply(multiply(random_invertible(rng, q, rows), core), random_invertible(rng, q, n));
}

ExtVector error_vector(const FieldCtx& f, const BitMatrix& d, const ExtVector& z) {
  if (d.rows() == 0 || z.empty()) return ExtVector(d.rows());
  return apply_transpose(f, z, d);
}

Transmission transmit(const FieldCtx& f, const ExtVector& x, const ChannelRealization& real) {
  if (x.size() != real.a.cols() || x.size() != real.b.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "packet count differs from the transfer matrix width");
  }
  if (real.d.cols() != real.z.size() || real.fw.cols() != real.z.size() || real.d.rows() != real.a.rows() ||
      real.fw.rows() != real.b.rows()) {
    throw Error(ErrorKind::DimensionMismatch, "error injection matrices do not match Z");
  }
  Transmission out;
  out.y = vec_add(f, apply_transpose(f, x, real.a), error_vector(f, real.d, real.z));
  out.w = vec_add(f, apply_transpose(f, x, real.b), error_vector(f, real.fw, real.z));
  return out;
}

WiretapEnumerator::WiretapEnumerator(std::uint32_t q, std::size_t n, std::size_t mu, WiretapMode mode,
                                     std::uint64_t cap)
    : q_(q), n_(n), mu_(mu), mode_(mode), rref_it_(q, n, 0) {
  if (mode_ == WiretapMode::Full) {
    size_ = checked_pow(q, mu * n, cap);
  } else {
    for (std::size_t i = 0; i <= std::min(mu, n); ++i) {
      const std::uint64_t g = gaussian_binomial(q, n, i);
      size_ = (g == UINT64_MAX || size_ + g < size_) ? UINT64_MAX : size_ + g;
    }
  }
  if (size_ > cap) {
    throw Error(ErrorKind::EnumerationTooLarge, "wiretap enumeration of size " +
                                                    (size_ == UINT64_MAX ? std::string("overflow") : std::to_string(size_)) +
                                                    " exceeds cap " + std::to_string(cap));
  }
}

bool WiretapEnumerator::next(BitMatrix& out) {
  if (mode_ == WiretapMode::Full) {
    if (counter_ >= size_) return false;
    out = bit_matrix(q_, mu_, n_);
    std::uint64_t x = counter_++;
    for (std::size_t i = 0; i < mu_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        out(i, j) = ExtElement{static_cast<std::uint32_t>(x % q_)};
        x /= q_;
      }
    }
    return true;
  }
  while (dim_ <= std::min(mu_, n_)) {
    if (rref_it_.next(out)) return true;
    ++dim_;
    rref_it_ = RrefEnumerator(q_, n_, dim_);
  }
  return false;
}

std::uint64_t independent_tuples(std::uint32_t q, std::uint32_t m, std::size_t r) {
  if (r > m) return 0;
  std::uint64_t qm = 1;
  for (std::uint32_t i = 0; i < m; ++i) qm *= q;
  std::uint64_t count = 1;
  std::uint64_t qi = 1;
  for (std::size_t i = 0; i < r; ++i) {
    count *= (qm - qi);
    qi *= q;
  }
  return count;
}

ErrorEnumerator::ErrorEnumerator(FieldPtr f, std::size_t n_out, std::size_t t, std::uint64_t cap)
    : f_(std::move(f)), n_out_(n_out), t_(t), space_it_(f_->q(), n_out, 0) {
  size_ = 0;
  for (std::size_t r = 0; r <= std::min({t, n_out, static_cast<std::size_t>(f_->m())}); ++r) {
    const std::uint64_t g = gaussian_binomial(f_->q(), n_out, r);
    const std::uint64_t z = independent_tuples(f_->q(), f_->m(), r);
    if (g == UINT64_MAX || (z != 0 && g > UINT64_MAX / z)) {
      size_ = UINT64_MAX;
      break;
    }
    size_ += g * z;
  }
  if (size_ > cap) {
    throw Error(ErrorKind::EnumerationTooLarge, "error enumeration exceeds cap " + std::to_string(cap));
  }
}

bool ErrorEnumerator::advance_space() {
  while (true) {
    if (space_it_.next(space_)) {
      std::uint64_t total = 1;
      for (std::size_t i = 0; i < r_; ++i) total *= f_->size();
      z_count_ = total;
      z_index_ = 0;
      return true;
    }
    ++r_;
    if (r_ > t_ || r_ > n_out_ || r_ > f_->m()) return false;
    space_it_ = RrefEnumerator(f_->q(), n_out_, r_);
  }
}

bool ErrorEnumerator::next(ExtVector& e, BitMatrix* d, ExtVector* z) {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    if (!advance_space()) {
      done_ = true;
      return false;
    }
  }
  while (true) {
    while (z_index_ < z_count_) {
      ExtVector zz(r_);
      std::uint64_t x = z_index_++;
      for (std::size_t i = 0; i < r_; ++i) {
        zz[i] = ExtElement{static_cast<std::uint32_t>(x % f_->size())};
        x /= f_->size();
      }
      if (rank_weight(*f_, zz) != r_) continue;
      // E = Z·R with R the r x N row-space basis, so D = R^T.
      ExtVector ev(n_out_);
      for (std::size_t i = 0; i < r_; ++i) {
        for (std::size_t j = 0; j < n_out_; ++j) {
          const ExtElement c = space_(i, j);
          if (c.v) ev[j] = f_->add(ev[j], f_->mul(c, zz[i]));
        }
      }
      e = std::move(ev);
      if (d) *d = transpose(space_);
      if (z) *z = std::move(zz);
      return true;
    }
    if (!advance_space()) {
      done_ = true;
      return false;
    }
  }
}

void sample_error(Rng& rng, const FieldCtx& f, std::size_t n_out, std::size_t t, BitMatrix& d, ExtVector& z) {
  d = random_bit_matrix(rng, f.q(), n_out, t);
  z = random_ext_vector(rng, f, t);
}

}  // namespace rankguard
