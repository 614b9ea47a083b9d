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

#include "povm/photon.hpp"

#include <cmath>
#include <sstream>

#include "povm/determination.hpp"
#include "povm/kernel_basis.hpp"

namespace povm {

namespace {

// Iterative binomial coefficient in double precision; exact for the
// truncation sizes in use.
double binom(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * static_cast<double>(n - k + i) / static_cast<double>(i);
  return c;
}

// p^e with the 0^0 = 1 convention.
double ipow(double p, int e) {
  if (e == 0) return 1.0;
  return std::pow(p, e);
}

std::vector<std::string> count_labels(int d) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) labels.push_back(std::to_string(i));
  return labels;
}

}  // namespace

PhotonCountingObservable make_photon_counting(double eps, int d) {
  if (eps < 0.0 || eps > 1.0) throw DomainError("efficiency must lie in [0,1]");
  if (d < 1) throw DimensionError("truncation dimension must be positive");

  std::vector<Effect> effects;
  effects.reserve(static_cast<size_t>(d));
  for (int n = 0; n < d; ++n) {
    ComplexMatrix fn = ComplexMatrix::Zero(d, d);
    for (int m = n; m < d; ++m) {
      fn(m, m) = binom(m, n) * ipow(eps, n) * ipow(1.0 - eps, m - n);
    }
    effects.emplace_back(HermitianOperator(std::move(fn)));
  }
  return PhotonCountingObservable{eps, d,
                                  DiscreteObservable(std::move(effects), count_labels(d))};
}

DiscreteObservable make_number_observable(int d) {
  return make_photon_counting(1.0, d).observable;
}

StochasticKernel binomial_efficiency_kernel(double eps1, double eps2, int d) {
  if (eps2 <= 0.0 || eps2 > 1.0) throw DomainError("source efficiency must lie in (0,1]");
  if (eps1 < 0.0 || eps1 > eps2) {
    throw DomainError("target efficiency must lie in [0, source efficiency]");
  }
  if (d < 1) throw DimensionError("truncation dimension must be positive");

  const double keep = eps1 / eps2;       // probability a registered photon survives
  const double drop = 1.0 - keep;
  Eigen::MatrixXd nu = Eigen::MatrixXd::Zero(d, d);
  for (int k = 0; k < d; ++k) {
    for (int n = 0; n <= k; ++n) {
      nu(k, n) = binom(k, n) * ipow(keep, n) * ipow(drop, k - n);
    }
  }
  return StochasticKernel(std::move(nu));
}

EfficiencyOrderingReport verify_efficiency_ordering(double eps1, double eps2, int d) {
  if (eps1 <= 0.0 || eps1 > 1.0 || eps2 <= 0.0 || eps2 > 1.0) {
    throw DomainError("efficiencies must lie in (0,1]");
  }
  const DiscreteObservable f1 = make_photon_counting(eps1, d).observable;
  const DiscreteObservable f2 = make_photon_counting(eps2, d).observable;

  EfficiencyOrderingReport r;
  r.eps1 = eps1;
  r.eps2 = eps2;
  r.dim = d;
  r.forward = leq_fuzzy(f1, f2);
  r.backward = leq_fuzzy(f2, f1);
  // A kernel taking F^src to F^tgt forces the diagonal entry
  // nu(m,m) = (eps_tgt/eps_src)^m, which must stay <= 1.
  r.forward_obstruction = std::pow(eps1 / eps2, d - 1);
  r.backward_obstruction = std::pow(eps2 / eps1, d - 1);
  r.matches_theory =
      (r.forward.holds == (eps1 <= eps2)) && (r.backward.holds == (eps2 <= eps1));

  std::ostringstream note;
  note << "efficiency ordering at truncation " << d << ": forward "
       << (r.forward.holds ? "holds" : "fails") << ", backward "
       << (r.backward.holds ? "holds" : "fails");
  if (!r.forward.holds) {
    note << "; forward diagonal obstruction " << r.forward_obstruction << " > 1, gap "
         << r.forward.infeasibility_gap;
  }
  if (!r.backward.holds) {
    note << "; backward diagonal obstruction " << r.backward_obstruction << " > 1, gap "
         << r.backward.infeasibility_gap;
  }
  r.note = note.str();
  return r;
}

PhotonInfoEquivalenceReport verify_photon_info_equivalence(double eps, int d) {
  if (eps <= 0.0 || eps > 1.0) throw DomainError("efficiency must lie in (0,1]");

  PhotonInfoEquivalenceReport r;
  r.eps = eps;
  r.dim = d;
  const int expected = d * d - d;

  const DiscreteObservable photon = make_photon_counting(eps, d).observable;
  const DiscreteObservable number = make_number_observable(d);

  Eigen::MatrixXd ker_photon = statistics_kernel_coords(photon);
  Eigen::MatrixXd ker_number = statistics_kernel_coords(number);

  std::ostringstream note;
  if (ker_photon.cols() != expected || ker_number.cols() != expected) {
    // The generic SVD route lost rank to conditioning: the diagonal-data
    // matrix has condition number on the order of (1/eps)^(d-1). The exact
    // argument still applies: that matrix is triangular with diagonal
    // eps^n > 0, hence invertible, so the null space of either observable
    // is exactly the off-diagonal Hermitian directions.
    r.structural_route = true;
    const int dd = d * d;
    Eigen::MatrixXd off = Eigen::MatrixXd::Zero(dd, expected);
    for (int c = 0; c < expected; ++c) off(d + c, c) = 1.0;  // coords after the diagonal block
    ker_photon = off;
    ker_number = off;
    note << "generic SVD route unreliable at this efficiency (condition ~ "
         << std::pow(1.0 / eps, d - 1)
         << "); used the exact triangular structure of the diagonal data instead";
  } else {
    note << "generic null-space computation";
  }

  r.dim_kernel_photon = static_cast<int>(ker_photon.cols());
  r.dim_kernel_number = static_cast<int>(ker_number.cols());
  r.residual_photon_in_number = subspace_inclusion_residual(ker_photon, ker_number);
  r.residual_number_in_photon = subspace_inclusion_residual(ker_number, ker_photon);
  r.equivalent = r.dim_kernel_photon == r.dim_kernel_number &&
                 r.residual_photon_in_number <= tols().ker &&
                 r.residual_number_in_photon <= tols().ker;
  note << "; both null spaces have dimension " << r.dim_kernel_photon << " (expected "
       << expected << ")";
  r.note = note.str();
  return r;
}

std::vector<bool> photon_determined_states(double eps, int d,
                                           const std::vector<DensityState>& probes,
                                           std::uint64_t seed) {
  if (eps <= 0.0 || eps > 1.0) throw DomainError("efficiency must lie in (0,1]");
  const DiscreteObservable photon = make_photon_counting(eps, d).observable;
  std::vector<bool> out;
  out.reserve(probes.size());
  for (const DensityState& t : probes) {
    out.push_back(is_determined(t, photon, seed).status == DeterminationStatus::Determined);
  }
  return out;
}

}  // namespace povm
