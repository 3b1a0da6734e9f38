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

#include "rankguard/decoder.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>

#include "rankguard/packed.hpp"
#include "rankguard/parallel.hpp"
#include "rankguard/rank_metrics.hpp"
#include "rankguard/security.hpp"

namespace rankguard {

const char* to_string(DecodeStatus s) {
  switch (s) {
    case DecodeStatus::Decoded: return "decoded";
    case DecodeStatus::Ambiguous: return "ambiguous";
    case DecodeStatus::Failed: return "failed";
  }
  return "unknown";
}

namespace {

constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();

// Every codeword of C1 grouped by coset: words[s * c2 + c] = rep(s) + c2[c].
struct CosetTable {
  std::uint64_t messages = 0;
  std::uint64_t c2 = 0;
  std::vector<ExtVector> words;
};

CosetTable coset_table(const NestedScheme& s) {
  CosetTable t;
  t.messages = message_count(s);
  t.c2 = s.c2.size();
  if (t.messages * t.c2 > (std::uint64_t{1} << 22)) {
    throw Error(ErrorKind::EnumerationTooLarge, "coset enumeration exceeds cap");
  }
  std::vector<ExtVector> c2w(t.c2);
  for (std::uint64_t c = 0; c < t.c2; ++c) c2w[c] = s.c2.codeword(c);
  t.words.reserve(t.messages * t.c2);
  const FieldCtx& f = *s.ctx();
  for (std::uint64_t m = 0; m < t.messages; ++m) {
    const ExtVector rep = coset_representative(s, message_from_index(s, m));
    for (std::uint64_t c = 0; c < t.c2; ++c) t.words.push_back(vec_add(f, rep, c2w[c]));
  }
  return t;
}

BitMatrix matrix_from_index(std::uint32_t q, std::size_t rows, std::size_t cols, std::uint64_t idx) {
  BitMatrix a = bit_matrix(q, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      a(i, j) = ExtElement{static_cast<std::uint32_t>(idx % q)};
      idx /= q;
    }
  }
  return a;
}

std::uint64_t matrix_count(std::uint32_t q, std::size_t rows, std::size_t cols, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < rows * cols; ++i) {
    total *= q;
    if (total > cap) throw Error(ErrorKind::EnumerationTooLarge, "transfer-matrix enumeration exceeds cap");
  }
  return total;
}

// Packed rows of A from its index when q = 2: row j occupies bits [j n, (j+1) n).
std::vector<std::uint32_t> masks_from_index(std::uint64_t idx, std::size_t rows, std::size_t cols) {
  std::vector<std::uint32_t> m(rows);
  for (std::size_t j = 0; j < rows; ++j) m[j] = static_cast<std::uint32_t>((idx >> (j * cols)) & ((1u << cols) - 1));
  return m;
}

// Transposed index layout of matrix_from_index: entry (i, j) is digit i*cols + j,
// which for q = 2 is exactly the mask layout above.

DecodeResult finish(const NestedScheme& s, const std::vector<std::size_t>& per_message,
                    std::optional<std::size_t> radius) {
  DecodeResult r;
  std::size_t best = kInf;
  std::uint64_t arg = 0;
  std::size_t ties = 0;
  for (std::uint64_t m = 0; m < per_message.size(); ++m) {
    if (per_message[m] < best) {
      best = per_message[m];
      arg = m;
      ties = 1;
    } else if (per_message[m] == best) {
      ++ties;
    }
  }
  std::size_t second = kInf;
  for (std::uint64_t m = 0; m < per_message.size(); ++m) {
    if (m != arg) second = std::min(second, per_message[m]);
  }
  r.discrepancy = best;
  r.runner_up = second;
  r.message_index = arg;
  r.message = message_from_index(s, arg);
  if (radius && best > *radius) {
    r.status = DecodeStatus::Failed;
  } else if (ties > 1) {
    r.status = DecodeStatus::Ambiguous;
  } else {
    r.status = DecodeStatus::Decoded;
  }
  return r;
}

}  // namespace

std::size_t discrepancy_coherent(const NestedScheme& s, const BitMatrix& a, const ExtVector& y,
                                 const ExtVector& message) {
  const FieldCtx& f = *s.ctx();
  const std::uint64_t c2 = s.c2.size();
  if (c2 > (std::uint64_t{1} << 16)) throw Error(ErrorKind::EnumerationTooLarge, "coset too large to scan");
  const ExtVector rep = coset_representative(s, message);
  std::size_t best = kInf;
  for (std::uint64_t c = 0; c < c2; ++c) {
    const ExtVector x = vec_add(f, rep, s.c2.codeword(c));
    best = std::min(best, rank_distance(f, apply_transpose(f, x, a), y));
  }
  return best;
}

DecodeResult decode_coherent(const NestedScheme& s, const BitMatrix& a, const ExtVector& y,
                             std::optional<std::size_t> radius) {
  const FieldCtx& f = *s.ctx();
  if (a.cols() != s.n() || a.rows() != y.size()) throw Error(ErrorKind::DimensionMismatch, "A and Y disagree");
  const CosetTable t = coset_table(s);
  std::vector<std::size_t> per(t.messages, kInf);
  for (std::uint64_t m = 0; m < t.messages; ++m) {
    for (std::uint64_t c = 0; c < t.c2; ++c) {
      const ExtVector img = apply_transpose(f, t.words[m * t.c2 + c], a);
      per[m] = std::min(per[m], rank_distance(f, img, y));
    }
  }
  return finish(s, per, radius);
}

std::size_t delta_distance(const NestedScheme& s, const BitMatrix& a) {
  const FieldCtx& f = *s.ctx();
  const CosetTable t = coset_table(s);
  std::size_t best = kInf;
  for (std::uint64_t i = t.c2; i < t.words.size(); ++i) {
    best = std::min(best, rank_weight(f, apply_transpose(f, t.words[i], a)));
  }
  return best;
}

std::size_t delta_min_over_a(const NestedScheme& s, std::size_t rho, std::size_t n_out) {
  const FieldCtx& f = *s.ctx();
  const std::size_t n = s.n();
  const std::size_t need = rho >= n ? 0 : n - rho;
  const std::uint64_t total = matrix_count(f.q(), n_out, n, std::uint64_t{1} << 24);
  const CosetTable t = coset_table(s);
  std::size_t best = kInf;
  if (packed_supported(f, std::max(n, n_out))) {
    std::vector<std::uint64_t> words;
    for (std::uint64_t i = t.c2; i < t.words.size(); ++i) words.push_back(pack(f, t.words[i]));
    const PackedRanker ranker(f.m(), n_out);
    for (std::uint64_t idx = 0; idx < total && best > 0; ++idx) {
      const auto masks = masks_from_index(idx, n_out, n);
      if (mask_rank(masks) < need) continue;
      for (auto w : words) {
        best = std::min(best, ranker(packed_apply(w, f.m(), n, masks)));
        if (best == 0) break;
      }
    }
    return best;
  }
  for (std::uint64_t idx = 0; idx < total && best > 0; ++idx) {
    const BitMatrix a = matrix_from_index(f.q(), n_out, n, idx);
    if (rank(a) < need) continue;
    best = std::min(best, delta_distance(s, a));
  }
  return best;
}

std::size_t discrepancy_noncoherent_closed(const BitMatrix& x, const BitMatrix& y, std::size_t rho) {
  const std::size_t joint = rank(hstack(x, y));
  const std::size_t ry = rank(y);
  const long a = static_cast<long>(joint) - static_cast<long>(rank(x));
  const long b = static_cast<long>(joint) - static_cast<long>(ry) - static_cast<long>(rho);
  return static_cast<std::size_t>(std::max({a, b, 0L}));
}

std::size_t discrepancy_noncoherent_bruteforce(const BitMatrix& x, const BitMatrix& y, std::size_t rho) {
  const std::uint32_t q = x.field()->q();
  const std::size_t n = x.cols();
  const std::size_t n_out = y.cols();
  const std::size_t need = rho >= n ? 0 : n - rho;
  const std::uint64_t total = matrix_count(q, n_out, n, std::uint64_t{1} << 20);
  std::size_t best = kInf;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    const BitMatrix a = matrix_from_index(q, n_out, n, idx);
    if (rank(a) < need) continue;
    best = std::min(best, rank(sub(y, multiply(x, transpose(a)))));
  }
  return best;
}

DecodeResult decode_noncoherent(const LiftedScheme& ls, const BitMatrix& y, std::size_t rho) {
  if (y.rows() != ls.m()) throw Error(ErrorKind::DimensionMismatch, "received matrix must have m rows");
  const CosetTable t = coset_table(ls.inner);
  std::vector<std::size_t> per(t.messages, kInf);
  for (std::uint64_t m = 0; m < t.messages; ++m) {
    for (std::uint64_t c = 0; c < t.c2; ++c) {
      per[m] = std::min(per[m], discrepancy_noncoherent_closed(lift_packets(ls, t.words[m * t.c2 + c]), y, rho));
    }
  }
  return finish(ls.inner, per, std::nullopt);
}

std::size_t delta_rho_lifted(const LiftedScheme& ls, std::size_t rho, std::size_t n_out) {
  const NestedScheme& s = ls.inner;
  const FieldCtx& f = *s.ctx();
  const std::size_t n = s.n();
  const std::size_t need = rho >= n ? 0 : n - rho;
  // rank(X A^T - X' A'^T) = rank [A^T - A'^T ; φ(X̃ - X̃') A^T], which depends
  // on the difference only through the row space of its expansion.
  const CosetTable t = coset_table(s);
  std::map<BitMatrix, bool> spaces;
  for (std::uint64_t i = t.c2; i < t.words.size(); ++i) {
    spaces.emplace(BitSubspace::from_rows(expand_to_base(f, t.words[i])).basis(), true);
  }
  const std::uint64_t total = matrix_count(f.q(), n_out, n, std::uint64_t{1} << 12);
  std::vector<BitMatrix> admissible;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    BitMatrix a = matrix_from_index(f.q(), n_out, n, idx);
    if (rank(a) >= need) admissible.push_back(std::move(a));
  }
  std::size_t best = kInf;
  for (const auto& [phi, unused] : spaces) {
    (void)unused;
    for (const auto& a : admissible) {
      const BitMatrix at = transpose(a);
      const BitMatrix lower = multiply(phi, at);
      for (const auto& a2 : admissible) {
        best = std::min(best, rank(vstack(sub(at, transpose(a2)), lower)));
        if (best == 0) return 0;
      }
    }
  }
  return best;
}

namespace {

std::uint64_t count_admissible_work(std::uint64_t a_total, const CosetTable& t, std::uint64_t errors) {
  const long double w = static_cast<long double>(a_total) * t.messages * t.c2 * errors;
  return w > 1.8e19L ? UINT64_MAX : static_cast<std::uint64_t>(w);
}

struct ChunkResult {
  std::uint64_t trials = 0;
  std::optional<Counterexample> failure;
};

}  // namespace

CapabilityReport capability_report(const NestedScheme& s, std::size_t t, std::size_t rho, CapabilityMode mode,
                                   std::uint64_t budget, std::uint64_t seed, std::size_t n_out,
                                   std::uint64_t trials) {
  const FieldPtr& fp = s.ctx();
  const FieldCtx& f = *fp;
  const std::size_t n = s.n();
  if (n_out == 0) n_out = n;
  const std::size_t need = rho >= n ? 0 : n - rho;
  CapabilityReport rep;

  if (mode == CapabilityMode::Sampled) {
    const std::uint64_t requested = trials == 0 ? budget : trials;
    const std::uint64_t runs = std::min(requested, budget);
    rep.budget_exhausted = requested > budget;
    Rng rng(seed);
    const std::uint64_t messages = message_count(s);
    for (std::uint64_t i = 0; i < runs; ++i) {
      const BitMatrix a = sample_transfer(rng, f.q(), n_out, n, rho);
      const std::uint64_t si = rng.below(messages);
      const ExtVector msg = message_from_index(s, si);
      const ExtVector x = encode(s, msg, rng);
      BitMatrix d;
      ExtVector z;
      sample_error(rng, f, n_out, t, d, z);
      const ExtVector e = error_vector(f, d, z);
      const ExtVector y = vec_add(f, apply_transpose(f, x, a), e);
      const DecodeResult r = decode_coherent(s, a, y);
      ++rep.trials;
      if (r.status != DecodeStatus::Decoded || r.message_index != si) {
        rep.counterexample = Counterexample{a, msg, x, e, r};
        rep.verified = false;
        return rep;
      }
    }
    rep.verified = true;
    return rep;
  }

  const std::uint64_t a_total = matrix_count(f.q(), n_out, n, std::uint64_t{1} << 24);
  const CosetTable table = coset_table(s);
  std::vector<ExtVector> errors;
  {
    ErrorEnumerator it(fp, n_out, t);
    ExtVector e;
    while (it.next(e)) errors.push_back(e);
  }
  const std::uint64_t work = count_admissible_work(a_total, table, errors.size());
  if (work > budget) {
    throw Error(ErrorKind::BudgetExceeded, "exhaustive capability check needs up to " + std::to_string(work) +
                                               " decodes, budget is " + std::to_string(budget));
  }

  const std::size_t workers = thread_count();
  std::vector<ChunkResult> results(std::max<std::size_t>(workers, 1));
  const bool packed = packed_supported(f, std::max(n, n_out));

  parallel_chunks(a_total, workers, [&](std::size_t chunk, std::uint64_t begin, std::uint64_t end) {
    ChunkResult& out = results[chunk];
    const std::uint64_t words = table.words.size();
    if (packed) {
      const PackedRanker ranker(f.m(), n_out);
      std::vector<std::uint64_t> src(words);
      for (std::uint64_t i = 0; i < words; ++i) src[i] = pack(f, table.words[i]);
      std::vector<std::uint64_t> errs(errors.size());
      for (std::size_t i = 0; i < errors.size(); ++i) errs[i] = pack(f, errors[i]);
      std::vector<std::uint64_t> img(words);
      for (std::uint64_t idx = begin; idx < end; ++idx) {
        const auto masks = masks_from_index(idx, n_out, n);
        if (mask_rank(masks) < need) continue;
        for (std::uint64_t i = 0; i < words; ++i) img[i] = packed_apply(src[i], f.m(), n, masks);
        for (std::uint64_t sm = 0; sm < table.messages; ++sm) {
          for (std::uint64_t c = 0; c < table.c2; ++c) {
            const std::uint64_t sent = img[sm * table.c2 + c];
            for (std::size_t ei = 0; ei < errs.size(); ++ei) {
              const std::uint64_t y = sent ^ errs[ei];
              // Unique minimum at the sent message, else failure.
              std::size_t own = kInf;
              for (std::uint64_t c2 = 0; c2 < table.c2; ++c2) own = std::min(own, ranker(y ^ img[sm * table.c2 + c2]));
              bool ok = true;
              for (std::uint64_t other = 0; other < table.messages && ok; ++other) {
                if (other == sm) continue;
                for (std::uint64_t c2 = 0; c2 < table.c2; ++c2) {
                  if (ranker(y ^ img[other * table.c2 + c2]) <= own) {
                    ok = false;
                    break;
                  }
                }
              }
              ++out.trials;
              if (!ok) {
                const BitMatrix a = matrix_from_index(f.q(), n_out, n, idx);
                const ExtVector yv = unpack(f, y, n_out);
                out.failure = Counterexample{a, message_from_index(s, sm), table.words[sm * table.c2 + c], errors[ei],
                                             decode_coherent(s, a, yv)};
                return;
              }
            }
          }
        }
      }
      return;
    }
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      const BitMatrix a = matrix_from_index(f.q(), n_out, n, idx);
      if (rank(a) < need) continue;
      for (std::uint64_t sm = 0; sm < table.messages; ++sm) {
        for (std::uint64_t c = 0; c < table.c2; ++c) {
          const ExtVector sent = apply_transpose(f, table.words[sm * table.c2 + c], a);
          for (const auto& e : errors) {
            const ExtVector y = vec_add(f, sent, e);
            const DecodeResult r = decode_coherent(s, a, y);
            ++out.trials;
            if (r.status != DecodeStatus::Decoded || r.message_index != sm) {
              out.failure = Counterexample{a, message_from_index(s, sm), table.words[sm * table.c2 + c], e, r};
              return;
            }
          }
        }
      }
    }
  });

  for (auto& r : results) {
    rep.trials += r.trials;
    if (r.failure) {
      rep.counterexample = r.failure;
      rep.verified = false;
      return rep;
    }
  }
  rep.verified = true;
  return rep;
}

std::optional<FailureWitness> construct_failure(const NestedScheme& s, std::size_t t, std::size_t rho) {
  const FieldPtr& fp = s.ctx();
  const FieldCtx& f = *fp;
  const std::size_t n = s.n();
  const CosetTable table = coset_table(s);
  std::size_t d = kInf;
  ExtVector v;
  for (std::uint64_t i = table.c2; i < table.words.size(); ++i) {
    const std::size_t w = rank_weight(f, table.words[i]);
    if (w < d) {
      d = w;
      v = table.words[i];
    }
  }
  // Kernel of A: inside the row space of v's expansion, or containing it.
  const BitSubspace rv = BitSubspace::from_rows(expand_to_base(f, v));
  BitMatrix kernel = bit_matrix(f.q(), 0, n);
  for (std::size_t i = 0; i < std::min(rho, rv.dim()); ++i) kernel.append_row(rv.basis().row(i));
  for (std::size_t j = 0; j < n && kernel.rows() < std::min(rho, n); ++j) {
    BitMatrix trial = kernel;
    ExtVector e(n);
    e[j] = ExtElement{1};
    trial.append_row(e);
    if (rank(trial) == trial.rows()) kernel = trial;
  }
  BitMatrix a = bit_matrix(f.q(), n, n);
  if (kernel.rows() == 0) {
    a = BitMatrix::identity(base_field(f.q()), n);
  } else if (kernel.rows() < n) {
    const BitMatrix rows = right_kernel(kernel);
    for (std::size_t i = 0; i < rows.rows(); ++i) a.set_row(i, rows.row(i));
  }
  const ExtVector u = apply_transpose(f, v, a);
  const std::size_t d_prime = rank_weight(f, u);
  const std::size_t half = (d_prime + 1) / 2;
  if (half > t) return std::nullopt;

  // Rank factorisation of the expansion: M_u = C R with R the RREF rows.
  const BitMatrix mu = expand_to_base(f, u);
  const auto rr = rref(mu);
  BitMatrix w_base = bit_matrix(f.q(), f.m(), n);
  if (half > 0) {
    std::vector<std::size_t> cols(rr.pivots.begin(), rr.pivots.begin() + static_cast<std::ptrdiff_t>(half));
    std::vector<std::size_t> rows(half);
    for (std::size_t i = 0; i < half; ++i) rows[i] = i;
    w_base = multiply(select_columns(mu, cols), select_rows(rr.echelon, rows));
  }
  FailureWitness wit;
  wit.a = a;
  wit.message = ExtVector(s.l);
  wit.x = ExtVector(n);
  wit.error = collapse_from_base(f, w_base);
  wit.y = wit.error;
  wit.competitor = v;
  wit.d_prime = d_prime;
  wit.result = decode_coherent(s, a, wit.y);
  return wit;
}

NoncoherentReport noncoherent_trials(const LiftedScheme& ls, std::size_t t, std::size_t rho, std::uint64_t trials,
                                     std::uint64_t seed) {
  const NestedScheme& s = ls.inner;
  const std::size_t n = ls.n();
  const std::uint32_t q = ls.outer->q();
  const std::uint64_t messages = message_count(s);
  Rng rng(seed);
  NoncoherentReport rep;
  for (std::uint64_t i = 0; i < trials; ++i) {
    const BitMatrix a = sample_transfer(rng, q, n, n, rho);
    const std::uint64_t si = rng.below(messages);
    const ExtVector msg = message_from_index(s, si);
    const ExtVector xt = encode(s, msg, rng);
    const BitMatrix x = lift_packets(ls, xt);
    const BitMatrix z = random_bit_matrix(rng, q, ls.m(), t);
    const BitMatrix d = random_bit_matrix(rng, q, n, t);
    BitMatrix y = multiply(x, transpose(a));
    if (t > 0) y = add(y, multiply(z, transpose(d)));
    const DecodeResult r = decode_noncoherent(ls, y, rho);
    ++rep.trials;
    if (r.status != DecodeStatus::Decoded || r.message_index != si) {
      rep.counterexample = Counterexample{a, msg, xt, collapse_from_base(*ls.outer, multiply(z, transpose(d))), r};
      return rep;
    }
  }
  rep.verified = true;
  return rep;
}

}  // namespace rankguard
