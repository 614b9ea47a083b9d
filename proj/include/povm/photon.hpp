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
#include <vector>

#include "povm/lp.hpp"
#include "povm/observable.hpp"
#include "povm/relations.hpp"

namespace povm {

// Photon-counting observable of a detector with efficiency eps, truncated
// to the Fock levels {0..d-1}. Effect n is diagonal with
//
//     <m| F_n |m> = C(m,n) eps^n (1-eps)^(m-n)   for n <= m <= d-1,
//
// zero below the diagonal. Rows of the binomial distribution sum to one,
// so normalization is exact on the truncated space. eps = 1 gives the
// number observable, eps = 0 the trivial observable concentrated at 0.
struct PhotonCountingObservable {
  double efficiency = 1.0;
  int trunc_dim = 0;
  DiscreteObservable observable;
};

PhotonCountingObservable make_photon_counting(double eps, int d);

// Sharp number observable: Fock-basis projections.
DiscreteObservable make_number_observable(int d);

// The explicit post-processing kernel taking the eps2-detector to the
// eps1-detector (eps1 <= eps2, eps2 > 0):
//
//     nu(k,n) = C(k,n) (eps1/eps2)^n ((eps2-eps1)/eps2)^(k-n),  k >= n.
//
// Lower-triangular support, row-stochastic; applying it to F^eps2
// reproduces F^eps1 exactly on the truncated space.
StochasticKernel binomial_efficiency_kernel(double eps1, double eps2, int d);

// Both fuzzy directions between F^eps1 and F^eps2, checked against the
// closed-form law "F^eps1 below F^eps2 iff eps1 <= eps2". For an
// infeasible direction, records the phase-one gap and the diagonal
// obstruction value (eps_target/eps_source)^(d-1), which exceeds 1 exactly
// when the direction must fail.
struct EfficiencyOrderingReport {
  double eps1 = 0.0;
  double eps2 = 0.0;
  int dim = 0;
  RelationVerdict forward;   // F^eps1 below F^eps2
  RelationVerdict backward;  // F^eps2 below F^eps1
  double forward_obstruction = 0.0;   // > 1 iff forward must fail
  double backward_obstruction = 0.0;  // > 1 iff backward must fail
  bool matches_theory = false;
  std::string note;
};

EfficiencyOrderingReport verify_efficiency_ordering(double eps1, double eps2, int d);

// Equality of statistics null spaces of F^eps and the number observable on
// the truncated space (both equal the off-diagonal Hermitian directions,
// dimension d^2 - d). The generic SVD route is used when it resolves the
// expected rank; otherwise the decision falls back on the exact structural
// argument (the diagonal-data matrix is triangular with diagonal eps^n > 0),
// which the report notes together with a conditioning estimate.
struct PhotonInfoEquivalenceReport {
  double eps = 0.0;
  int dim = 0;
  int dim_kernel_photon = 0;
  int dim_kernel_number = 0;
  double residual_photon_in_number = 0.0;
  double residual_number_in_photon = 0.0;
  bool equivalent = false;
  bool structural_route = false;
  std::string note;
};

PhotonInfoEquivalenceReport verify_photon_info_equivalence(double eps, int d);

// Per-probe membership in the determined set of F^eps (true = determined).
std::vector<bool> photon_determined_states(double eps, int d,
                                           const std::vector<DensityState>& probes,
                                           std::uint64_t seed = kDefaultSeed);

}  // namespace povm
