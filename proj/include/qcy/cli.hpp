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

#include <iosfwd>
#include <string>
#include <vector>

namespace qcy::cli {

// Exit codes: 0 success, 1 the computed verdict contradicts --expect,
// 2 input or parse error, 3 broken internal invariant.
constexpr int kOk = 0;
constexpr int kExpectationFailed = 1;
constexpr int kInputError = 2;
constexpr int kInternalError = 3;

/// Runs one CLI invocation (args exclude the program name); all output
/// goes to the given streams.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcy::cli
