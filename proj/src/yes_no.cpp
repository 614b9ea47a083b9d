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

#include "povm/yes_no.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "povm/lp.hpp"

namespace povm {

YesNoObservable make_yes_no(const Effect& a) {
  std::vector<Effect> effects{a.complement(), a};
  return YesNoObservable{a, DiscreteObservable(std::move(effects), {"0", "1"})};
}

std::optional<std::pair<double, double>> yes_no_fuzzy_parameters(const Effect& a,
                                                                 const Effect& b) {
  if (a.dim() != b.dim()) throw DimensionError("effects live on different spaces");
  const int d = a.dim();
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  const ComplexMatrix bprime = id - b.matrix();

  // Near-trivial B spans only the identity direction: A = t B + s B' is
  // then solvable exactly when A is the matching scalar operator, and
  // t = s = that scalar always works.
  const double beta_scalar = b.matrix().trace().real() / static_cast<double>(d);
  if (max_abs_entry(b.matrix() - beta_scalar * id) <= tols().sum) {
    const double alpha_scalar = a.matrix().trace().real() / static_cast<double>(d);
    if (max_abs_entry(a.matrix() - alpha_scalar * id) > tols().sum) return std::nullopt;
    return std::make_pair(alpha_scalar, alpha_scalar);
  }

  // Two-variable least squares over the HS coordinates.
  const Eigen::VectorXd va = hs_coords(a.matrix());
  Eigen::MatrixXd basis(va.size(), 2);
  basis.col(0) = hs_coords(b.matrix());
  basis.col(1) = hs_coords(bprime);
  const Eigen::Vector2d ts = basis.colPivHouseholderQr().solve(va);

  double t = ts(0), s = ts(1);
  const double slack = tols().sum;
  if (t < -slack || t > 1.0 + slack || s < -slack || s > 1.0 + slack) return std::nullopt;
  t = std::clamp(t, 0.0, 1.0);
  s = std::clamp(s, 0.0, 1.0);
  const ComplexMatrix residual = a.matrix() - t * b.matrix() - s * bprime;
  if (operator_norm(HermitianOperator(residual)) > tols().sum) return std::nullopt;
  return std::make_pair(t, s);
}

bool yes_no_is_fuzzy_optimal(const Effect& a) {
  const double norm_a = std::abs(a.max_eig());
  const double norm_comp = 1.0 - a.min_eig();
  return norm_a >= 1.0 - tols().psd && norm_comp >= 1.0 - tols().psd;
}

std::optional<Effect> yes_no_dominating_effect(const Effect& a) {
  const double alpha = a.max_eig();        // ||A||
  const double beta = 1.0 - a.min_eig();   // ||I - A||
  if (alpha >= 1.0 - tols().psd && beta >= 1.0 - tols().psd) return std::nullopt;
  if (alpha + beta <= 1.0 + tols().psd) return std::nullopt;  // scalar effect

  const int d = a.dim();
  const double denom = alpha + beta - 1.0;
  const ComplexMatrix b =
      a.matrix() / denom + ((beta - 1.0) / denom) * ComplexMatrix::Identity(d, d);
  return Effect(HermitianOperator(b));
}

std::pair<DensityState, DensityState> approximately_actualizable(const Effect& a,
                                                                 double delta) {
  if (delta <= 0.0) throw DomainError("delta must be positive");
  if (!yes_no_is_fuzzy_optimal(a)) {
    throw DomainError("effect is not optimal: both norms must be one");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(a.matrix());
  const int d = a.dim();
  const DensityState t1 = pure_state(es.eigenvectors().col(d - 1));
  const DensityState t2 = pure_state(es.eigenvectors().col(0));
  const double hit1 = (t1.matrix() * a.matrix()).trace().real();
  const double hit2 = 1.0 - (t2.matrix() * a.matrix()).trace().real();
  if (hit1 < 1.0 - delta || hit2 < 1.0 - delta) {
    throw DomainError("requested delta is below the achievable approximation");
  }
  return {t1, t2};
}

}  // namespace povm
