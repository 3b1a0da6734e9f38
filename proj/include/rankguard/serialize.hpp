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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "rankguard/codes.hpp"
#include "rankguard/coset_scheme.hpp"

namespace rankguard {

using Json = nlohmann::ordered_json;

inline constexpr int kConfigVersion = 1;

/// Extension elements are written as base-q coefficient arrays, low degree first.
Json element_to_json(const FieldCtx& f, ExtElement a);
ExtElement element_from_json(const FieldCtx& f, const Json& j);

Json matrix_to_json(const ExtMatrix& m);
Json matrix_to_json(const BitMatrix& m);
ExtMatrix ext_matrix_from_json(const FieldPtr& f, const Json& j);
BitMatrix bit_matrix_from_json(std::uint32_t q, const Json& j);

Json field_to_json(const FieldCtx& f);
FieldPtr field_from_json(const Json& j);

Json code_to_json(const LinearCode& c);
LinearCode code_from_json(const Json& j);

Json scheme_to_json(const NestedScheme& s);
NestedScheme scheme_from_json(const Json& j);

struct ExperimentConfig {
  int version = kConfigVersion;
  std::uint32_t q = 2;
  std::uint32_t m = 4;
  std::optional<std::vector<std::uint32_t>> modulus;
  std::size_t l = 1;
  std::size_t n = 3;
  std::size_t k = 2;
  std::size_t mu = 0;
  std::size_t t = 0;
  std::size_t rho = 0;
  std::size_t n_out = 0;  // 0 means N = n
  std::string mode = "sampled";
  std::string distribution = "uniform";
  std::uint64_t seed = 0;
  std::uint64_t trials = 100;
  std::optional<Json> scheme;  // explicit scheme instead of (l, n, k)
};

/// Throws InvalidConfig naming the offending field.
ExperimentConfig config_from_json(const Json& j);
Json config_to_json(const ExperimentConfig& c);

FieldPtr config_field(const ExperimentConfig& c);
NestedScheme config_scheme(const ExperimentConfig& c);

}  // namespace rankguard
