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

#include "povm/localization.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "povm/lp.hpp"
#include "povm/relations.hpp"

namespace povm {

namespace {

ComplexMatrix cyclic_shift(int l) {
  ComplexMatrix s = ComplexMatrix::Zero(l, l);
  for (int x = 0; x < l; ++x) s((x + 1) % l, x) = 1.0;
  return s;
}

std::vector<std::string> position_labels(int l) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(l));
  for (int x = 0; x < l; ++x) labels.push_back(std::to_string(x));
  return labels;
}

}  // namespace

CyclicLocalizationObservable make_cyclic_localization(DiscreteObservable obs) {
  if (obs.dim() != obs.outcomes()) {
    throw DimensionError("cyclic localization needs one outcome per position");
  }
  const int l = obs.dim();
  const ComplexMatrix s = cyclic_shift(l);
  double residual = 0.0;
  for (int x = 0; x < l; ++x) {
    residual = std::max(residual, max_abs_entry(s * obs.effect(x).matrix() * s.adjoint() -
                                                obs.effect((x + 1) % l).matrix()));
  }
  CyclicLocalizationObservable out{l, std::move(obs), residual <= tols().sum, residual};
  return out;
}

CyclicLocalizationObservable make_cyclic_position(int period) {
  if (period < 2) throw DomainError("cyclic position needs period >= 2");
  std::vector<Effect> effects;
  effects.reserve(static_cast<size_t>(period));
  for (int x = 0; x < period; ++x) {
    ComplexMatrix p = ComplexMatrix::Zero(period, period);
    p(x, x) = 1.0;
    effects.emplace_back(HermitianOperator(std::move(p)));
  }
  return make_cyclic_localization(
      DiscreteObservable(std::move(effects), position_labels(period)));
}

Eigen::MatrixXd circulant_kernel(const std::vector<double>& rho) {
  const int l = static_cast<int>(rho.size());
  Eigen::MatrixXd nu(l, l);
  for (int y = 0; y < l; ++y) {
    for (int x = 0; x < l; ++x) nu(y, x) = rho[static_cast<size_t>(((x - y) % l + l) % l)];
  }
  return nu;
}

CyclicLocalizationObservable smear_cyclic(const CyclicLocalizationObservable& e,
                                          const ProbabilityVector& rho) {
  if (rho.size() != e.period) throw DimensionError("smearing measure length differs from period");
  const StochasticKernel nu{circulant_kernel(rho.values())};
  return make_cyclic_localization(
      apply_kernel(e.observable, nu, position_labels(e.period)));
}

std::vector<double> cyclic_convolve(const std::vector<double>& rho1,
                                    const std::vector<double>& rho2) {
  if (rho1.size() != rho2.size()) throw DimensionError("convolution lengths differ");
  const int l = static_cast<int>(rho1.size());
  std::vector<double> out(static_cast<size_t>(l), 0.0);
  for (int x = 0; x < l; ++x) {
    for (int y = 0; y < l; ++y) {
      out[static_cast<size_t>(x)] +=
          rho1[static_cast<size_t>(y)] * rho2[static_cast<size_t>(((x - y) % l + l) % l)];
    }
  }
  return out;
}

bool check_boost_invariance(const CyclicLocalizationObservable& f) {
  // Conjugation by the diagonal characters multiplies entry (a,b) by
  // w^(p(a-b)); invariance for every p is exactly diagonality.
  return f.observable.is_diagonal(tols().sum);
}

CyclicLocalizationObservable covariant_from_fiducial_phases(const std::vector<double>& phases) {
  const int l = static_cast<int>(phases.size());
  if (l < 2) throw DomainError("need at least two phases");

  // Fiducial with flat Fourier amplitudes: psi_x = (1/L) sum_k
  // exp(i phases[k]) exp(2 pi i k x / L).
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(l);
  const double tau = 2.0 * std::numbers::pi / static_cast<double>(l);
  for (int x = 0; x < l; ++x) {
    Complex sum = 0.0;
    for (int k = 0; k < l; ++k) {
      sum += std::polar(1.0, phases[static_cast<size_t>(k)] + tau * k * x);
    }
    psi(x) = sum / static_cast<double>(l);
  }

  const ComplexMatrix s = cyclic_shift(l);
  ComplexMatrix orbit = psi * psi.adjoint();
  std::vector<Effect> effects;
  effects.reserve(static_cast<size_t>(l));
  for (int x = 0; x < l; ++x) {
    effects.emplace_back(HermitianOperator(orbit));
    orbit = s * orbit * s.adjoint();
  }
  return make_cyclic_localization(DiscreteObservable(std::move(effects), position_labels(l)));
}

LocalizationStructureReport localization_structure_report(
    const CyclicLocalizationObservable& f) {
  if (!f.covariant) {
    std::ostringstream msg;
    msg << "observable is not shift covariant (residual " << f.covariance_residual << ")";
    throw DomainError(msg.str());
  }
  const int l = f.period;
  const CyclicLocalizationObservable position = make_cyclic_position(l);

  LocalizationStructureReport r;
  r.below_position_informational =
      leq_informational(f.observable, position.observable).holds;
  r.below_position_fuzzy = leq_fuzzy(f.observable, position.observable).holds;
  r.boost_invariant = check_boost_invariance(f);

  // Convolution form: rho_x = <0|F_x|0> must be a probability vector whose
  // smearing of the sharp position reproduces F.
  std::vector<double> rho_raw(static_cast<size_t>(l), 0.0);
  double mass = 0.0;
  bool rho_ok = true;
  for (int x = 0; x < l; ++x) {
    rho_raw[static_cast<size_t>(x)] = f.observable.effect(x).matrix()(0, 0).real();
    if (rho_raw[static_cast<size_t>(x)] < -tols().prob) rho_ok = false;
    mass += rho_raw[static_cast<size_t>(x)];
  }
  if (std::abs(mass - 1.0) > tols().prob) rho_ok = false;
  if (rho_ok) {
    double residual = 0.0;
    const Eigen::MatrixXd nu = circulant_kernel(rho_raw);
    for (int x = 0; x < l; ++x) {
      ComplexMatrix rec = ComplexMatrix::Zero(l, l);
      for (int y = 0; y < l; ++y) rec += nu(y, x) * position.observable.effect(y).matrix();
      residual = std::max(residual, max_abs_entry(rec - f.observable.effect(x).matrix()));
    }
    rho_ok = residual <= tols().sum;
  }
  r.convolution_form = rho_ok;
  if (rho_ok) r.rho = ProbabilityVector(rho_raw);

  r.consistent = r.below_position_informational == r.below_position_fuzzy &&
                 r.below_position_fuzzy == r.boost_invariant &&
                 r.boost_invariant == r.convolution_form;
  r.note =
      "finite cyclic model: the four characterizations are equivalent on Z_L; findings do "
      "not transfer to localization on the continuum line";
  return r;
}

}  // namespace povm
