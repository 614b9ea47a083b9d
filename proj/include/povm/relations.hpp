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
#include <utility>
#include <variant>
#include <vector>

#include "povm/determination.hpp"
#include "povm/kernel_basis.hpp"
#include "povm/lp.hpp"
#include "povm/observable.hpp"

namespace povm {

//=========================================================================
// Relation kinds and verdicts
//=========================================================================

// The four preorders on observables, ordered by strength:
//
//   Fuzzy          F is a classical post-processing of E (Markov kernel);
//   CoarseGraining F's statistics arise from E's by a state-independent
//                  affine map (coincides with Fuzzy on finite outcome sets);
//   Informational  E separates every state pair that F separates;
//   Determination  every state pinned down by F is pinned down by E
//                  (decided relative to an explicit probe set).
enum class RelationKind { Fuzzy, CoarseGraining, Informational, Determination };

std::string to_string(RelationKind k);
RelationKind parse_relation_kind(const std::string& name);

// Certificate for a failed informational comparison: a pair of states with
// identical statistics under E but different statistics under F.
struct WitnessStates {
  DensityState t1;
  DensityState t2;
  int distinguishing_outcome = 0;
};

// Answer plus machine-checkable certificate for a pairwise relation query
// "F below E".
//
//  - Fuzzy / CoarseGraining, holds:   certificate is the witness kernel,
//    reproducing F from E within the lp tolerance;
//  - Fuzzy / CoarseGraining, fails:   infeasibility_gap carries the
//    minimized phase-one residual;
//  - Informational, holds:            certificate is the KernelBasisReport
//    with both kernel dimensions and the inclusion residual;
//  - Informational, fails:            certificate is a WitnessStates pair;
//  - Determination:                   no certificate; the note discloses the
//    probe-restricted semantics and each membership call's certification.
struct RelationVerdict {
  RelationKind kind = RelationKind::Fuzzy;
  bool holds = false;
  std::variant<std::monostate, StochasticKernel, WitnessStates, KernelBasisReport> certificate;
  double infeasibility_gap = 0.0;
  std::string note;
};

//=========================================================================
// Pairwise decisions
//=========================================================================

// Does E produce different statistics on T1 and T2?
bool distinguishes(const DiscreteObservable& e, const DensityState& t1, const DensityState& t2);

// F below E in state distinction power: ker(E) contained in ker(F).
RelationVerdict leq_informational(const DiscreteObservable& f, const DiscreteObservable& e);

// F is a fuzzy version of E: a row-stochastic kernel with
// F_k = sum_j nu(j,k) E_j exists (decided by LP feasibility).
RelationVerdict leq_fuzzy(const DiscreteObservable& f, const DiscreteObservable& e);

// F is a coarse-graining of E. On finite outcome sets this coincides with
// the fuzzy relation, so the decision delegates to leq_fuzzy.
RelationVerdict leq_coarse(const DiscreteObservable& f, const DiscreteObservable& e);

// F below E in state determination power, restricted to the probe set:
// every probe determined by F must be determined by E. A probe counts as
// determined only on an Exact Determined verdict, and as a violation only
// on an Exact NotDetermined verdict on the E side.
RelationVerdict leq_determination(const DiscreteObservable& f, const DiscreteObservable& e,
                                  const std::vector<DensityState>& probes,
                                  std::uint64_t seed = kDefaultSeed);

// Dispatch by kind. Probes are required for Determination.
RelationVerdict leq(const DiscreteObservable& f, const DiscreteObservable& e, RelationKind kind,
                    const std::vector<DensityState>& probes = {},
                    std::uint64_t seed = kDefaultSeed);

// Both directions hold.
bool equivalence(const DiscreteObservable& f, const DiscreteObservable& e, RelationKind kind,
                 const std::vector<DensityState>& probes = {},
                 std::uint64_t seed = kDefaultSeed);

//=========================================================================
// Classification
//=========================================================================

// When every effect is a scalar multiple of the identity, returns the
// defining probability vector; empty otherwise.
std::optional<ProbabilityVector> is_trivial(const DiscreteObservable& e);

// Zero statistics null space: the statistics map is injective on states.
bool is_informationally_complete(const DiscreteObservable& e);

//=========================================================================
// Hierarchy check
//=========================================================================

// Evaluates all four relations on (F, E) and flags any violation of the
// implication chain Fuzzy => CoarseGraining => Informational =>
// Determination(probes). The flag must never be set.
struct HierarchyReport {
  RelationVerdict fuzzy;
  RelationVerdict coarse;
  RelationVerdict informational;
  RelationVerdict determination;
  bool violation = false;
};

HierarchyReport check_hierarchy(const DiscreteObservable& f, const DiscreteObservable& e,
                                const std::vector<DensityState>& probes,
                                std::uint64_t seed = kDefaultSeed);

//=========================================================================
// Catalog poset
//=========================================================================

// Partial order induced on equivalence classes of a finite catalog.
// Classes are strongly connected components of the pairwise verdict
// digraph, listed by their smallest member index; hasse_edges point from
// the lower class to the higher and are transitively reduced; maximal
// classes (no outgoing edge) are the optimal observables of the catalog.
struct PosetReport {
  RelationKind kind = RelationKind::Fuzzy;
  std::vector<std::string> labels;                  // one per catalog entry
  std::vector<std::vector<int>> classes;            // member indices
  std::vector<std::vector<bool>> class_order;       // class_order[a][b]: a below b
  std::vector<std::pair<int, int>> hasse_edges;     // (lower class, higher class)
  std::vector<int> maximal_classes;
};

PosetReport build_poset(const std::vector<DiscreteObservable>& catalog, RelationKind kind,
                        std::vector<std::string> labels = {},
                        const std::vector<DensityState>& probes = {},
                        std::uint64_t seed = kDefaultSeed);

// Default probe family for Determination queries: eigenvector projections
// of every effect of every catalog observable (deduplicated) plus the
// maximally mixed state.
std::vector<DensityState> default_probes(const std::vector<DiscreteObservable>& catalog);

}  // namespace povm
