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
#include <string>
#include <vector>

#include "povm/operators.hpp"

namespace povm {

//=========================================================================
// DiscreteObservable
//=========================================================================

// A POVM on the outcome set {0..n-1}: an ordered list of effects that sum
// to the identity. Immutable after construction; construction validates
// the normalization entrywise and each element's effect bounds.
class DiscreteObservable {
 public:
  DiscreteObservable(std::vector<Effect> effects, std::vector<std::string> labels = {});

  int dim() const { return dim_; }
  int outcomes() const { return static_cast<int>(effects_.size()); }
  const Effect& effect(int j) const { return effects_[static_cast<size_t>(j)]; }
  const std::vector<Effect>& effects() const { return effects_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(int j) const;

  // True when every effect is idempotent (projection-valued measure).
  bool is_sharp() const;

  // True when every effect is diagonal in the computational basis
  // (entrywise, within the given tolerance).
  bool is_diagonal(double tol = 1e-12) const;

 private:
  int dim_;
  std::vector<Effect> effects_;
  std::vector<std::string> labels_;
};

// Outcome distribution p_j = Re tr(T E_j) of measuring E in state T.
ProbabilityVector statistics_map(const DiscreteObservable& e, const DensityState& t);

// Checks that the statistics map treats the convex combination
// lambda*T1 + (1-lambda)*T2 affinely.
bool affinity_check(const DiscreteObservable& e, const DensityState& t1,
                    const DensityState& t2, double lambda);

// Comparator behind affinity_check, exposed for negative-control tests:
// is p_mix the lambda-combination of p1 and p2 within tol?
bool affine_within(const ProbabilityVector& p_mix, const ProbabilityVector& p1,
                   const ProbabilityVector& p2, double lambda, double tol);

// Identity observable helpers.
DiscreteObservable trivial_observable(const std::vector<double>& m, int dim);

}  // namespace povm
