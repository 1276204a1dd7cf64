// Copyright 2026 The tgf authors
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

namespace tgf {

// Malformed circuit text or data file input.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Structurally invalid parameter (lambda out of range, width mismatch, ...).
struct ParamError : std::invalid_argument {
  explicit ParamError(const std::string& msg) : std::invalid_argument(msg) {}
};

// A verification pass ran and the circuit failed it.
struct VerifyError : std::runtime_error {
  explicit VerifyError(const std::string& msg) : std::runtime_error(msg) {}
};

// Simulation request exceeds the configured qubit or branch limits.
struct SimLimitError : std::runtime_error {
  explicit SimLimitError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace tgf
