// Copyright 2026 The k3count Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace k3 {

struct CheckLine {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckLine> lines;

  bool passed() const;
  std::size_t failures() const;
};

/// published-table, factor-properties, counting-identities, fibonacci,
/// families, pell, twist, numerical-walls.
std::span<const std::string_view> suite_names();

/// Runs a named verification suite. Throws std::invalid_argument for an
/// unknown name.
SuiteResult run_suite(std::string_view name, unsigned jobs = 1);

}  // namespace k3
