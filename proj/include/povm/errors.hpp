// Copyright 2026 The povm-order Authors
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

namespace povm {

// Operands live on Hilbert spaces (or outcome sets) of different sizes.
class DimensionError : public std::invalid_argument {
 public:
  explicit DimensionError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Input violates a mathematical precondition (non-Hermitian matrix,
// eigenvalue outside [0,1], efficiency outside its range, ...).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Malformed problem or file structure (wrong lengths, missing keys).
class FormatError : public std::invalid_argument {
 public:
  explicit FormatError(const std::string& msg) : std::invalid_argument(msg) {}
};

// A probe-restricted decision was requested with no probes.
class EmptyProbeSetError : public std::invalid_argument {
 public:
  explicit EmptyProbeSetError(const std::string& msg) : std::invalid_argument(msg) {}
};

// A result failed its own post-hoc certificate check. Indicates a numerical
// breakdown beyond the configured tolerances, never expected at desk scale.
class InternalError : public std::runtime_error {
 public:
  explicit InternalError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace povm
