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
#include <complex>
#include <string>
#include <vector>

#include "povm/errors.hpp"
#include "povm/tolerances.hpp"

namespace povm {

// Carrier for all operators on the finite-dimensional Hilbert space.
using ComplexMatrix = Eigen::MatrixXcd;
using Complex = std::complex<double>;

double max_abs_entry(const ComplexMatrix& m);

//=========================================================================
// HermitianOperator
//=========================================================================

// A validated d x d Hermitian matrix. Construction rejects matrices whose
// anti-Hermitian part exceeds the hermiticity tolerance; the stored matrix
// is the exactly Hermitian average (A + A*)/2.
class HermitianOperator {
 public:
  explicit HermitianOperator(ComplexMatrix m);

  int dim() const { return static_cast<int>(mat_.rows()); }
  const ComplexMatrix& matrix() const { return mat_; }
  double trace_real() const { return mat_.trace().real(); }

 private:
  ComplexMatrix mat_;
};

// Smallest eigenvalue of a Hermitian operator.
double min_eigenvalue(const HermitianOperator& a);

// Largest eigenvalue of a Hermitian operator.
double max_eigenvalue(const HermitianOperator& a);

// Operator norm, i.e. max |eigenvalue|.
double operator_norm(const HermitianOperator& a);

// Real Hilbert-Schmidt coordinates of a Hermitian matrix: d diagonal
// entries followed by sqrt(2)*Re and sqrt(2)*Im of each strict upper
// entry. The map is an isometry: <A,B>_HS = coords(A) . coords(B).
Eigen::VectorXd hs_coords(const ComplexMatrix& herm);
ComplexMatrix hs_coords_to_matrix(const Eigen::VectorXd& v, int dim);

//=========================================================================
// Effect and DensityState
//=========================================================================

// Operator A with 0 <= A <= I; one POVM element.
class Effect {
 public:
  explicit Effect(HermitianOperator op);
  explicit Effect(ComplexMatrix m) : Effect(HermitianOperator(std::move(m))) {}

  int dim() const { return op_.dim(); }
  const HermitianOperator& op() const { return op_; }
  const ComplexMatrix& matrix() const { return op_.matrix(); }
  double min_eig() const { return min_eig_; }
  double max_eig() const { return max_eig_; }

  Effect complement() const;  // I - A

 private:
  HermitianOperator op_;
  double min_eig_;
  double max_eig_;
};

// Positive Hermitian operator of unit trace.
class DensityState {
 public:
  explicit DensityState(HermitianOperator op);
  explicit DensityState(ComplexMatrix m) : DensityState(HermitianOperator(std::move(m))) {}

  int dim() const { return op_.dim(); }
  const HermitianOperator& op() const { return op_; }
  const ComplexMatrix& matrix() const { return op_.matrix(); }

 private:
  HermitianOperator op_;
};

// Rank-one state |v><v| from a (normalized) vector.
DensityState pure_state(const Eigen::VectorXcd& v);

// I/d.
DensityState maximally_mixed(int dim);

//=========================================================================
// ProbabilityVector
//=========================================================================

class ProbabilityVector {
 public:
  explicit ProbabilityVector(std::vector<double> p);

  int size() const { return static_cast<int>(p_.size()); }
  double operator[](int i) const { return p_[static_cast<size_t>(i)]; }
  const std::vector<double>& values() const { return p_; }

 private:
  std::vector<double> p_;
};

double linf_distance(const ProbabilityVector& a, const ProbabilityVector& b);

}  // namespace povm
