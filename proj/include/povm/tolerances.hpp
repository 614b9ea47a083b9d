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

#include <cstdint>
#include <string>

namespace povm {

// Numerical tolerances used by all validation and decision routines.
//
// The defaults are calibrated for double precision at Hilbert dimension
// <= 64, where residuals of well-posed instances stay several orders of
// magnitude below every threshold.
struct Tolerances {
  double herm = 1e-10;   // Hermiticity residual, max entry of |A - A*|
  double psd = 1e-9;     // eigenvalue slack for positivity / effect bounds
  double trace = 1e-10;  // unit-trace residual for states
  double sum = 1e-9;     // entrywise residual of POVM normalization
  double prob = 1e-9;    // probability-vector slack
  double eig = 1e-10;    // eigenvalue accuracy vs. a reference solver
  double lp = 1e-8;      // LP feasibility classification threshold
  double ker = 1e-8;     // singular-value threshold for null spaces
  double state = 1e-7;   // distinctness threshold between states

  Tolerances scaled(double factor) const;
};

enum class ToleranceProfile { Default, Strict, Loose };

// Process-wide active tolerances. The profile is meant to be selected once
// at startup (CLI flag); all types validate against the active profile.
const Tolerances& tols();
void set_tolerance_profile(ToleranceProfile profile);
ToleranceProfile parse_tolerance_profile(const std::string& name);

// Seed for the randomized parts of the determination search.
inline constexpr std::uint64_t kDefaultSeed = 0x706f766d;  // "povm"

}  // namespace povm
