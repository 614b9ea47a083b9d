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

#include "povm/observable.hpp"

#include <cmath>
#include <sstream>
#include <utility>

namespace povm {

DiscreteObservable::DiscreteObservable(std::vector<Effect> effects,
                                       std::vector<std::string> labels)
    : effects_(std::move(effects)), labels_(std::move(labels)) {
  if (effects_.empty()) throw DimensionError("observable needs at least one outcome");
  dim_ = effects_.front().dim();
  for (const Effect& e : effects_) {
    if (e.dim() != dim_) throw DimensionError("effects live on different Hilbert spaces");
  }
  if (!labels_.empty() && labels_.size() != effects_.size()) {
    throw DimensionError("label count does not match outcome count");
  }
  ComplexMatrix sum = ComplexMatrix::Zero(dim_, dim_);
  for (const Effect& e : effects_) sum += e.matrix();
  const double residual = max_abs_entry(sum - ComplexMatrix::Identity(dim_, dim_));
  if (residual > tols().sum) {
    std::ostringstream msg;
    msg << "effects do not sum to the identity: residual " << residual;
    throw DomainError(msg.str());
  }
}

std::string DiscreteObservable::label(int j) const {
  if (!labels_.empty()) return labels_[static_cast<size_t>(j)];
  return std::to_string(j);
}

bool DiscreteObservable::is_sharp() const {
  for (const Effect& e : effects_) {
    const ComplexMatrix& m = e.matrix();
    if (max_abs_entry(m * m - m) > tols().psd) return false;
  }
  return true;
}

bool DiscreteObservable::is_diagonal(double tol) const {
  for (const Effect& e : effects_) {
    const ComplexMatrix& m = e.matrix();
    for (int i = 0; i < dim_; ++i) {
      for (int j = 0; j < dim_; ++j) {
        if (i != j && std::abs(m(i, j)) > tol) return false;
      }
    }
  }
  return true;
}

ProbabilityVector statistics_map(const DiscreteObservable& e, const DensityState& t) {
  if (e.dim() != t.dim()) throw DimensionError("observable and state dimensions differ");
  std::vector<double> p;
  p.reserve(static_cast<size_t>(e.outcomes()));
  for (int j = 0; j < e.outcomes(); ++j) {
    const Complex tr = (t.matrix() * e.effect(j).matrix()).trace();
    if (std::abs(tr.imag()) > tols().herm) {
      std::ostringstream msg;
      msg << "outcome probability has imaginary residue " << tr.imag();
      throw InternalError(msg.str());
    }
    p.push_back(tr.real());
  }
  return ProbabilityVector(std::move(p));
}

bool affine_within(const ProbabilityVector& p_mix, const ProbabilityVector& p1,
                   const ProbabilityVector& p2, double lambda, double tol) {
  if (p_mix.size() != p1.size() || p1.size() != p2.size()) {
    throw DimensionError("probability vectors differ in length");
  }
  for (int j = 0; j < p_mix.size(); ++j) {
    const double expected = lambda * p1[j] + (1.0 - lambda) * p2[j];
    if (std::abs(p_mix[j] - expected) > tol) return false;
  }
  return true;
}

bool affinity_check(const DiscreteObservable& e, const DensityState& t1,
                    const DensityState& t2, double lambda) {
  if (e.dim() != t1.dim() || t1.dim() != t2.dim()) {
    throw DimensionError("dimension mismatch in affinity check");
  }
  if (lambda < 0.0 || lambda > 1.0) throw DomainError("lambda outside [0,1]");
  const DensityState mix(
      HermitianOperator(lambda * t1.matrix() + (1.0 - lambda) * t2.matrix()));
  return affine_within(statistics_map(e, mix), statistics_map(e, t1), statistics_map(e, t2),
                       lambda, tols().prob);
}

DiscreteObservable trivial_observable(const std::vector<double>& m, int dim) {
  const ProbabilityVector probs(m);  // validates
  std::vector<Effect> effects;
  effects.reserve(m.size());
  for (double mj : m) {
    effects.emplace_back(HermitianOperator(mj * ComplexMatrix::Identity(dim, dim)));
  }
  return DiscreteObservable(std::move(effects));
}

}  // namespace povm
