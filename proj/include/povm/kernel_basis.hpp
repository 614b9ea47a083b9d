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

#include <Eigen/Dense>
#include <vector>

#include "povm/observable.hpp"

namespace povm {

// Null space of the statistics map of an observable E, over traceless
// Hermitian operators:
//
//     ker(E) = { H = H*, tr H = 0, tr(H E_j) = 0 for all j } .
//
// Two states T1, T2 produce identical statistics under E exactly when
// T1 - T2 lies in ker(E), so this subspace carries the full state
// distinction content of E.
//
// basis_e is orthonormal under the Hilbert-Schmidt inner product. The
// dim_kernel_f / inclusion_residual fields are populated only by pairwise
// comparisons (see relations): for a query "F below E", dim_kernel_f is
// the kernel dimension of F and inclusion_residual the largest distance
// of a ker(E) basis element from ker(F).
struct KernelBasisReport {
  int dim_kernel_e = 0;
  int dim_kernel_f = 0;
  std::vector<HermitianOperator> basis_e;
  double inclusion_residual = 0.0;
};

// Orthonormal basis of ker(E), found by singular-value thresholding on the
// (n+1) x d^2 matrix whose rows are the HS coordinates of the effects and
// of the identity.
KernelBasisReport statistics_kernel_basis(const DiscreteObservable& e);

// Same null space as a d^2 x r matrix of orthonormal coordinate columns.
Eigen::MatrixXd statistics_kernel_coords(const DiscreteObservable& e);

// Largest residual of the columns of `sub` after projection onto the column
// span of `space` (columns of both orthonormal). Zero columns in `sub`
// are not allowed.
double subspace_inclusion_residual(const Eigen::MatrixXd& sub, const Eigen::MatrixXd& space);

}  // namespace povm
