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

#include <stdexcept>
#include <string>

namespace qcy {

/// Malformed input data: bad arrow indices, incompatible blocks,
/// non-homogeneous relations, and similar structural defects.
struct structural_error : std::runtime_error {
  explicit structural_error(const std::string& what) : std::runtime_error(what) {}
};

/// Division by zero, inversion of zero, mixed quadratic radicands.
struct arithmetic_error : std::runtime_error {
  explicit arithmetic_error(const std::string& what) : std::runtime_error(what) {}
};

/// A query past the degree up to which a rewriting system is confluent.
struct truncation_error : std::runtime_error {
  explicit truncation_error(const std::string& what) : std::runtime_error(what) {}
};

/// Degenerate mathematical input (zero polynomial, zero relation component).
struct degeneracy_error : std::runtime_error {
  explicit degeneracy_error(const std::string& what) : std::runtime_error(what) {}
};

/// Text that does not parse under the repo formats.
struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

/// A broken internal invariant; never expected on valid input.
struct internal_error : std::logic_error {
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace qcy
