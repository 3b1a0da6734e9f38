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

#include "doctest.h"
#include "rankguard/error.hpp"
#include "rankguard/serialize.hpp"

using namespace rankguard;

TEST_CASE("scheme JSON round trip") {
  const NestedScheme s = build_proposed(FieldCtx::create_default(2, 5), 2, 3, 2, 4);
  const Json j = scheme_to_json(s);
  const NestedScheme back = scheme_from_json(Json::parse(j.dump()));
  CHECK(back.c1 == s.c1);
  CHECK(back.c2 == s.c2);
  CHECK(back.delta_g == s.delta_g);
  CHECK(back.seed == 4);
  CHECK(scheme_to_json(back).dump() == j.dump());
}

TEST_CASE("code JSON round trip and element encoding") {
  const FieldPtr f = FieldCtx::create_default(3, 2);
  const LinearCode c = gabidulin(f, 2, 1);
  CHECK(code_from_json(code_to_json(c)) == c);
  for (std::uint32_t v = 0; v < f->size(); ++v) CHECK(element_from_json(*f, element_to_json(*f, ExtElement{v})).v == v);
  CHECK_THROWS_AS(element_from_json(*f, Json::array({3})), Error);
}

TEST_CASE("config validation names the offending field") {
  auto reject = [](const char* text, const char* field) {
    try {
      config_from_json(Json::parse(text));
      FAIL("accepted " << text);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InvalidConfig);
      CHECK(std::string(e.what()).find(field) != std::string::npos);
    }
  };
  reject(R"({"q": 2})", "version");
  reject(R"({"version": 2})", "version");
  reject(R"({"version": 1, "m": 3, "l": 1, "n": 3, "k": 2})", "'m'");
  reject(R"({"version": 1, "m": 8, "l": 3, "n": 3, "k": 2})", "'l'");
  reject(R"({"version": 1, "mode": "fast"})", "mode");
  reject(R"({"version": 1, "k": -1})", "'k'");

  const ExperimentConfig c = config_from_json(Json::parse(R"({"version": 1, "m": 5, "l": 1, "n": 4, "k": 1, "seed": 3})"));
  CHECK(config_scheme(c).n() == 4);
  CHECK(config_from_json(config_to_json(c)).seed == 3);
}
