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

#include "rankguard/serialize.hpp"

#include <algorithm>

#include "rankguard/error.hpp"

namespace rankguard {
namespace {

[[noreturn]] void invalid(const std::string& field, const std::string& why) {
  throw Error(ErrorKind::InvalidConfig, "config field '" + field + "': " + why);
}

template <class T>
T read_uint(const Json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  const Json& v = j.at(key);
  if (!v.is_number_unsigned()) invalid(key, "expected a non-negative integer");
  return v.get<T>();
}

std::string read_string(const Json& j, const char* key, const std::string& fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_string()) invalid(key, "expected a string");
  return j.at(key).get<std::string>();
}

template <class Tag>
Json matrix_json(const Matrix<Tag>& m, bool ext) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (ext) {
        row.push_back(element_to_json(*m.field(), m(i, j)));
      } else {
        row.push_back(m(i, j).v);
      }
    }
    rows.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

template <class Tag>
Matrix<Tag> matrix_from(const FieldPtr& f, const Json& j, bool ext) {
  const auto rows = j.at("rows").get<std::size_t>();
  const auto cols = j.at("cols").get<std::size_t>();
  const Json& e = j.at("entries");
  if (e.size() != rows) throw Error(ErrorKind::DimensionMismatch, "matrix JSON row count mismatch");
  Matrix<Tag> out(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (e[i].size() != cols) throw Error(ErrorKind::DimensionMismatch, "matrix JSON column count mismatch");
    for (std::size_t c = 0; c < cols; ++c) {
      if (ext) {
        out(i, c) = element_from_json(*f, e[i][c]);
      } else {
        const auto v = e[i][c].get<std::uint32_t>();
        if (v >= f->q()) throw Error(ErrorKind::AmbientMismatch, "matrix entry outside F_q");
        out(i, c) = ExtElement{v};
      }
    }
  }
  return out;
}

}  // namespace

Json element_to_json(const FieldCtx& f, ExtElement a) { return Json(f.coeffs(a)); }

ExtElement element_from_json(const FieldCtx& f, const Json& j) {
  const auto c = j.get<std::vector<std::uint32_t>>();
  if (c.size() > f.m()) throw Error(ErrorKind::DimensionMismatch, "element has more than m coefficients");
  for (auto d : c) {
    if (d >= f.q()) throw Error(ErrorKind::AmbientMismatch, "coefficient outside F_q");
  }
  return f.from_coeffs(c);
}

Json matrix_to_json(const ExtMatrix& m) { return matrix_json(m, true); }
Json matrix_to_json(const BitMatrix& m) { return matrix_json(m, false); }

ExtMatrix ext_matrix_from_json(const FieldPtr& f, const Json& j) { return matrix_from<ExtTag>(f, j, true); }
BitMatrix bit_matrix_from_json(std::uint32_t q, const Json& j) { return matrix_from<BaseTag>(base_field(q), j, false); }

Json field_to_json(const FieldCtx& f) { return Json{{"q", f.q()}, {"m", f.m()}, {"modulus", f.modulus()}}; }

FieldPtr field_from_json(const Json& j) {
  const auto q = j.at("q").get<std::uint32_t>();
  const auto m = j.at("m").get<std::uint32_t>();
  if (j.contains("modulus")) return FieldCtx::create(q, m, j.at("modulus").get<std::vector<std::uint32_t>>());
  return FieldCtx::create_default(q, m);
}

Json code_to_json(const LinearCode& c) {
  Json j = field_to_json(*c.ctx());
  j["n"] = c.n();
  j["k"] = c.k();
  j["generator"] = matrix_to_json(c.gen());
  return j;
}

LinearCode code_from_json(const Json& j) {
  const FieldPtr f = field_from_json(j);
  const ExtMatrix g = ext_matrix_from_json(f, j.at("generator"));
  if (j.contains("n") && j.at("n").get<std::size_t>() != g.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "code length does not match generator");
  }
  if (g.rows() == 0) return LinearCode::zero(f, g.cols());
  return LinearCode(g);
}

Json scheme_to_json(const NestedScheme& s) {
  Json j = field_to_json(*s.ctx());
  j["n"] = s.n();
  j["l"] = s.l;
  j["k"] = s.k();
  j["C1"] = matrix_to_json(s.c1.gen());
  j["C2"] = matrix_to_json(s.c2.gen());
  j["delta_g"] = matrix_to_json(s.delta_g);
  j["seed"] = s.seed;
  return j;
}

NestedScheme scheme_from_json(const Json& j) {
  const FieldPtr f = field_from_json(j);
  const ExtMatrix g1 = ext_matrix_from_json(f, j.at("C1"));
  const ExtMatrix g2 = ext_matrix_from_json(f, j.at("C2"));
  const LinearCode c1 = g1.rows() == 0 ? LinearCode::zero(f, g1.cols()) : LinearCode(g1);
  const LinearCode c2 = g2.rows() == 0 ? LinearCode::zero(f, g2.cols()) : LinearCode(g2);
  const ExtMatrix dg = ext_matrix_from_json(f, j.at("delta_g"));
  return NestedScheme::make(c1, c2, dg, j.value("seed", std::uint64_t{0}));
}

ExperimentConfig config_from_json(const Json& j) {
  if (!j.is_object()) invalid("<root>", "expected a JSON object");
  if (!j.contains("version")) invalid("version", "missing; this build reads version 1");
  if (!j.at("version").is_number_integer() || j.at("version").get<int>() != kConfigVersion) {
    invalid("version", "unsupported; this build reads version 1");
  }
  ExperimentConfig c;
  c.q = read_uint<std::uint32_t>(j, "q", c.q);
  c.m = read_uint<std::uint32_t>(j, "m", c.m);
  if (j.contains("modulus")) {
    if (!j.at("modulus").is_array()) invalid("modulus", "expected an array of coefficients");
    c.modulus = j.at("modulus").get<std::vector<std::uint32_t>>();
  }
  c.l = read_uint<std::size_t>(j, "l", c.l);
  c.n = read_uint<std::size_t>(j, "n", c.n);
  c.k = read_uint<std::size_t>(j, "k", c.k);
  c.mu = read_uint<std::size_t>(j, "mu", c.mu);
  c.t = read_uint<std::size_t>(j, "t", c.t);
  c.rho = read_uint<std::size_t>(j, "rho", c.rho);
  c.n_out = read_uint<std::size_t>(j, "N", c.n_out);
  c.mode = read_string(j, "mode", c.mode);
  c.distribution = read_string(j, "distribution", c.distribution);
  c.seed = read_uint<std::uint64_t>(j, "seed", c.seed);
  c.trials = read_uint<std::uint64_t>(j, "trials", c.trials);
  if (j.contains("scheme")) c.scheme = j.at("scheme");

  if (c.mode != "exhaustive" && c.mode != "sampled") invalid("mode", "expected 'exhaustive' or 'sampled'");
  if (c.distribution != "uniform" && c.distribution != "random") {
    invalid("distribution", "expected 'uniform' or 'random'");
  }
  if (!c.scheme) {
    if (c.l < 1 || c.l > c.k) invalid("l", "need 1 <= l <= k");
    if (c.k > c.n) invalid("k", "need k <= n");
    if (c.m < c.l + c.n) invalid("m", "packet length must satisfy m >= l + n");
  }
  if (c.n_out != 0 && c.n_out < c.n - std::min(c.rho, c.n)) invalid("N", "too few output links for rank n - rho");
  return c;
}

Json config_to_json(const ExperimentConfig& c) {
  Json j{{"version", c.version}, {"q", c.q}, {"m", c.m}};
  if (c.modulus) j["modulus"] = *c.modulus;
  j["l"] = c.l;
  j["n"] = c.n;
  j["k"] = c.k;
  j["mu"] = c.mu;
  j["t"] = c.t;
  j["rho"] = c.rho;
  j["N"] = c.n_out;
  j["mode"] = c.mode;
  j["distribution"] = c.distribution;
  j["seed"] = c.seed;
  j["trials"] = c.trials;
  if (c.scheme) j["scheme"] = *c.scheme;
  return j;
}

FieldPtr config_field(const ExperimentConfig& c) {
  if (c.modulus) return FieldCtx::create(c.q, c.m, *c.modulus);
  return FieldCtx::create_default(c.q, c.m);
}

NestedScheme config_scheme(const ExperimentConfig& c) {
  if (c.scheme) return scheme_from_json(*c.scheme);
  return build_proposed(config_field(c), c.l, c.n, c.k, c.seed);
}

}  // namespace rankguard
