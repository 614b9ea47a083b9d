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

#include "povm/observable.hpp"

namespace povm {

// Localization on the cyclic group Z_L: the Hilbert space is C^L with the
// position basis, translations act by the cyclic shift S|x> = |x+1>, and
// "boosts" by the diagonal character unitaries V_p = diag(w^(p x)),
// w = exp(2 pi i / L). This is the finite model of localization on the
// line; findings here do not transfer to the continuum setting.
struct CyclicLocalizationObservable {
  int period = 0;  // L
  DiscreteObservable observable;
  bool covariant = false;
  double covariance_residual = 0.0;  // max entry of |S F_x S* - F_{x+1}|
};

// Wraps an L-outcome observable on C^L, measuring its shift covariance.
CyclicLocalizationObservable make_cyclic_localization(DiscreteObservable obs);

// Sharp position observable: basis projections F_x = |x><x|. Covariant.
CyclicLocalizationObservable make_cyclic_position(int period);

// Convolution smearing F_x = sum_y rho((x-y) mod L) E_y. Preserves
// covariance; the circulant kernel nu(y,x) = rho((x-y) mod L) witnesses
// that the result is a fuzzy version of E.
CyclicLocalizationObservable smear_cyclic(const CyclicLocalizationObservable& e,
                                          const ProbabilityVector& rho);

// Circulant post-processing kernel of smear_cyclic.
Eigen::MatrixXd circulant_kernel(const std::vector<double>& rho);

// Cyclic convolution (rho1 * rho2)(x) = sum_y rho1(y) rho2((x-y) mod L).
std::vector<double> cyclic_convolve(const std::vector<double>& rho1,
                                    const std::vector<double>& rho2);

// Invariance under all diagonal character unitaries; equivalently, every
// effect is diagonal in the position basis.
bool check_boost_invariance(const CyclicLocalizationObservable& f);

// Shift-covariant rank-one POVM from a fiducial vector with flat Fourier
// amplitudes exp(i phases[k])/sqrt(L): F_x = S^x |psi><psi| S^-x. For
// non-linear phase profiles the effects acquire off-diagonal entries, so
// the result is covariant but not boost invariant.
CyclicLocalizationObservable covariant_from_fiducial_phases(const std::vector<double>& phases);

// The four equivalent characterizations of a covariant observable being a
// smeared position: below sharp position informationally, below it as a
// fuzzy version, boost invariant, and of convolution form. They must agree
// on every covariant input; when they hold, rho_x = <0|F_x|0> recovers the
// smearing measure.
struct LocalizationStructureReport {
  bool below_position_informational = false;
  bool below_position_fuzzy = false;
  bool boost_invariant = false;
  bool convolution_form = false;
  bool consistent = false;
  std::optional<ProbabilityVector> rho;
  std::string note;
};

LocalizationStructureReport localization_structure_report(const CyclicLocalizationObservable& f);

}  // namespace povm
