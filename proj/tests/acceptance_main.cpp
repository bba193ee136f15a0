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

// Verification battery runner: one pass/fail line per criterion on stdout,
// timing breakdown on stderr, nonzero exit when anything fails.

#include <iostream>

#include "qcy/acceptance.hpp"

int main() {
  std::vector<qcy::acceptance::CriterionResult> results = qcy::acceptance::run_all();
  std::string rendered = qcy::acceptance::render(results);
  std::cout << rendered;
  int failures = 0;
  double total = 0.0;
  for (const qcy::acceptance::CriterionResult& r : results) {
    std::cerr << "criterion " << r.id << ": " << r.seconds << " s\n";
    total += r.seconds;
    if (!r.pass) ++failures;
  }
  std::cerr << "total: " << total << " s\n";

  // The battery is documented as byte-deterministic; enforce it.
  if (qcy::acceptance::render(qcy::acceptance::run_all()) != rendered) {
    std::cout << "determinism check [FAIL]: a second run rendered different bytes\n";
    ++failures;
  } else {
    std::cout << "determinism check [PASS]: a second run rendered identical bytes\n";
  }
  return failures == 0 ? 0 : 1;
}
