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

#include <iosfwd>
#include <string>
#include <vector>

namespace rankguard {

struct CriterionResult {
  int id = 0;  // 1..11; 0 for the auxiliary bounds sweep
  std::string name;
  bool passed = false;
  std::string expected;
  std::string measured;
  std::string note;
  double seconds = 0.0;
};

/// Registered suite names, in execution order of "all".
const std::vector<std::string>& acceptance_suites();

/// Runs one suite ("all" runs criteria 1..11). Throws SuiteUnknown. When
/// `log` is non-null each result line is written as soon as it is known.
std::vector<CriterionResult> run_acceptance(const std::string& suite, std::ostream* log = nullptr);

std::string format_result(const CriterionResult& r);

}  // namespace rankguard
