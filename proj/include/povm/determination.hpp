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
#include <optional>
#include <string>
#include <vector>

#include "povm/observable.hpp"

namespace povm {

enum class DeterminationStatus { Determined, NotDetermined, ProbablyDetermined };
enum class CertificationLevel { Exact, Heuristic };

// Verdict on whether a state is the unique state with its outcome
// statistics under a given observable.
//
// NotDetermined always carries a witness: a distinct valid state with
// statistics identical within the probability tolerance. Determined with
// Exact certification is issued only when a finite argument closes the
// question; every other non-witnessed outcome is reported as
// ProbablyDetermined with Heuristic certification.
struct DeterminationVerdict {
  DeterminationStatus status = DeterminationStatus::ProbablyDetermined;
  CertificationLevel certification = CertificationLevel::Heuristic;
  std::optional<DensityState> witness;
  std::string method;
};

std::string to_string(DeterminationStatus s);
std::string to_string(CertificationLevel c);

// Decision procedure, in order:
//  1. empty statistics null space  -> Determined/Exact;
//  2. projection-valued E          -> exact characterization (the determined
//     states are exactly the rank-one effects), witness constructed when not;
//  3. diagonal E with injective diagonal-data map and T a basis projection
//     -> Determined/Exact (a PSD matrix with a single unit diagonal entry
//     and zero elsewhere on the diagonal is that basis projection);
//  4. search of the null space for a PSD-preserving perturbation of T:
//     targeted directions (toward the maximally mixed state, directions
//     supported on the range of T) plus all basis directions and seeded
//     random combinations, each line-searched by bisection on the minimal
//     eigenvalue. Witness found -> NotDetermined/Exact; budget exhausted
//     -> ProbablyDetermined/Heuristic.
DeterminationVerdict is_determined(const DensityState& t, const DiscreteObservable& e,
                                   std::uint64_t seed = kDefaultSeed);

// Elementwise is_determined over a probe list.
std::vector<DeterminationVerdict> determined_probes_report(
    const DiscreteObservable& e, const std::vector<DensityState>& probes,
    std::uint64_t seed = kDefaultSeed);

}  // namespace povm
