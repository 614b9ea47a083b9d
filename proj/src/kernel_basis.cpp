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

#include "povm/kernel_basis.hpp"

#include <Eigen/SVD>

namespace povm {

Eigen::MatrixXd statistics_kernel_coords(const DiscreteObservable& e) {
  const int d = e.dim();
  const int n = e.outcomes();
  const int dd = d * d;

  // Rows: HS coordinates of each effect, plus the identity for the
  // traceless condition. tr(H E_j) = coords(E_j) . coords(H).
  Eigen::MatrixXd rows(n + 1, dd);
  for (int j = 0; j < n; ++j) rows.row(j) = hs_coords(e.effect(j).matrix()).transpose();
  rows.row(n) = hs_coords(ComplexMatrix::Identity(d, d)).transpose();

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(rows, Eigen::ComputeFullV);
  const Eigen::VectorXd& sv = svd.singularValues();
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i) {
    if (sv(i) > tols().ker) ++rank;
  }
  return svd.matrixV().rightCols(dd - rank);
}

KernelBasisReport statistics_kernel_basis(const DiscreteObservable& e) {
  const Eigen::MatrixXd coords = statistics_kernel_coords(e);
  KernelBasisReport report;
  report.dim_kernel_e = static_cast<int>(coords.cols());
  report.basis_e.reserve(static_cast<size_t>(coords.cols()));
  for (int c = 0; c < coords.cols(); ++c) {
    report.basis_e.emplace_back(hs_coords_to_matrix(coords.col(c), e.dim()));
  }
  return report;
}

double subspace_inclusion_residual(const Eigen::MatrixXd& sub, const Eigen::MatrixXd& space) {
  if (sub.cols() == 0) return 0.0;
  if (sub.rows() != space.rows()) throw DimensionError("subspace ambient dimensions differ");
  double worst = 0.0;
  for (int c = 0; c < sub.cols(); ++c) {
    const Eigen::VectorXd v = sub.col(c);
    Eigen::VectorXd residual = v;
    if (space.cols() > 0) residual -= space * (space.transpose() * v);
    worst = std::max(worst, residual.norm());
  }
  return worst;
}

}  // namespace povm
