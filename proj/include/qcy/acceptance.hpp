// Copyright (c) 2026 The qcy authors
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

#include <string>
#include <vector>

namespace qcy::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

/// Runs the whole verification battery. Deterministic: random draws come
/// from a fixed-seed generator, so two runs render identical text.
std::vector<CriterionResult> run_all();

/// One pass/fail line per criterion.
std::string render(const std::vector<CriterionResult>& results);

}  // namespace qcy::acceptance
