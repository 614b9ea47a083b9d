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

#include <optional>
#include <utility>

#include "povm/observable.hpp"

namespace povm {

// Two-outcome observable built from a single effect A: outcome 0 carries
// the complement I - A, outcome 1 carries A.
struct YesNoObservable {
  Effect effect;                  // A
  DiscreteObservable observable;  // effects (I - A, A)
};

YesNoObservable make_yes_no(const Effect& a);

// Mixing weights (t, s) in [0,1]^2 with A = t B + s (I - B), when they
// exist. Existence is equivalent to the yes-no observable of A being a
// fuzzy version of the yes-no observable of B; decided by a 2-variable
// feasibility reduction.
std::optional<std::pair<double, double>> yes_no_fuzzy_parameters(const Effect& a,
                                                                 const Effect& b);

// A yes-no observable admits no strictly finer yes-no observable exactly
// when both ||A|| and ||I - A|| equal 1.
bool yes_no_is_fuzzy_optimal(const Effect& a);

// For a non-optimal, non-trivial effect A (with norms alpha = ||A||,
// beta = ||I - A||), the strictly finer effect
//
//     B = A/(alpha+beta-1) + (beta-1)/(alpha+beta-1) I
//
// satisfies A = alpha B + (1-beta) (I - B) while B differs from both A and
// I - A. Empty when A is optimal or trivial (alpha + beta = 1).
std::optional<Effect> yes_no_dominating_effect(const Effect& a);

// For an optimal A, states nearly realizing A and its complement:
// tr(T1 A) >= 1 - delta and tr(T2 (I - A)) >= 1 - delta (top and bottom
// eigenvector projections).
std::pair<DensityState, DensityState> approximately_actualizable(const Effect& a, double delta);

}  // namespace povm
