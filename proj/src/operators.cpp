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

#include "povm/operators.hpp"

#include <cmath>
#include <sstream>

namespace povm {

double max_abs_entry(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

namespace {

Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix& m) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw InternalError("hermitian eigensolver did not converge");
  }
  return solver.eigenvalues();
}

}  // namespace

//=========================================================================
// HermitianOperator
//=========================================================================

HermitianOperator::HermitianOperator(ComplexMatrix m) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    throw DimensionError("Hermitian operator requires a nonempty square matrix");
  }
  const double residual = max_abs_entry(m - m.adjoint());
  if (residual > tols().herm) {
    std::ostringstream msg;
    msg << "matrix is not Hermitian: residual " << residual;
    throw DomainError(msg.str());
  }
  mat_ = 0.5 * (m + m.adjoint().eval());
}

double min_eigenvalue(const HermitianOperator& a) {
  return hermitian_eigenvalues(a.matrix()).minCoeff();
}

double max_eigenvalue(const HermitianOperator& a) {
  return hermitian_eigenvalues(a.matrix()).maxCoeff();
}

double operator_norm(const HermitianOperator& a) {
  const Eigen::VectorXd ev = hermitian_eigenvalues(a.matrix());
  return std::max(std::abs(ev.minCoeff()), std::abs(ev.maxCoeff()));
}

//=========================================================================
// Hilbert-Schmidt coordinates
//=========================================================================

Eigen::VectorXd hs_coords(const ComplexMatrix& herm) {
  const int d = static_cast<int>(herm.rows());
  Eigen::VectorXd v(d * d);
  int idx = 0;
  for (int i = 0; i < d; ++i) v(idx++) = herm(i, i).real();
  const double s = std::sqrt(2.0);
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      v(idx++) = s * herm(i, j).real();
      v(idx++) = s * herm(i, j).imag();
    }
  }
  return v;
}

ComplexMatrix hs_coords_to_matrix(const Eigen::VectorXd& v, int dim) {
  if (v.size() != static_cast<Eigen::Index>(dim) * dim) {
    throw DimensionError("coordinate vector length does not match dimension");
  }
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  int idx = 0;
  for (int i = 0; i < dim; ++i) m(i, i) = v(idx++);
  const double s = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j) {
      const double re = v(idx++) * s;
      const double im = v(idx++) * s;
      m(i, j) = Complex(re, im);
      m(j, i) = Complex(re, -im);
    }
  }
  return m;
}

//=========================================================================
// Effect
//=========================================================================

Effect::Effect(HermitianOperator op) : op_(std::move(op)) {
  const Eigen::VectorXd ev = hermitian_eigenvalues(op_.matrix());
  min_eig_ = ev.minCoeff();
  max_eig_ = ev.maxCoeff();
  if (min_eig_ < -tols().psd) {
    std::ostringstream msg;
    msg << "effect has negative eigenvalue " << min_eig_;
    throw DomainError(msg.str());
  }
  if (max_eig_ > 1.0 + tols().psd) {
    std::ostringstream msg;
    msg << "effect has eigenvalue above one: " << max_eig_;
    throw DomainError(msg.str());
  }
}

Effect Effect::complement() const {
  return Effect(HermitianOperator(ComplexMatrix::Identity(dim(), dim()) - matrix()));
}

//=========================================================================
// DensityState
//=========================================================================

DensityState::DensityState(HermitianOperator op) : op_(std::move(op)) {
  const double mn = min_eigenvalue(op_);
  if (mn < -tols().psd) {
    std::ostringstream msg;
    msg << "state has negative eigenvalue " << mn;
    throw DomainError(msg.str());
  }
  const double tr = op_.trace_real();
  if (std::abs(tr - 1.0) > tols().trace) {
    std::ostringstream msg;
    msg << "state trace " << tr << " is not one";
    throw DomainError(msg.str());
  }
}

DensityState pure_state(const Eigen::VectorXcd& v) {
  const double n = v.norm();
  if (n == 0.0) throw DomainError("cannot build a state from the zero vector");
  const Eigen::VectorXcd u = v / n;
  return DensityState(HermitianOperator(u * u.adjoint()));
}

DensityState maximally_mixed(int dim) {
  if (dim < 1) throw DimensionError("dimension must be positive");
  return DensityState(
      HermitianOperator(ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim)));
}

//=========================================================================
// ProbabilityVector
//=========================================================================

ProbabilityVector::ProbabilityVector(std::vector<double> p) : p_(std::move(p)) {
  if (p_.empty()) throw DimensionError("probability vector must be nonempty");
  double sum = 0.0;
  for (double x : p_) {
    if (x < -tols().prob || x > 1.0 + tols().prob) {
      std::ostringstream msg;
      msg << "probability entry " << x << " outside [0,1]";
      throw DomainError(msg.str());
    }
    sum += x;
  }
  if (std::abs(sum - 1.0) > tols().prob) {
    std::ostringstream msg;
    msg << "probabilities sum to " << sum;
    throw DomainError(msg.str());
  }
}

double linf_distance(const ProbabilityVector& a, const ProbabilityVector& b) {
  if (a.size() != b.size()) throw DimensionError("probability vectors differ in length");
  double d = 0.0;
  for (int i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace povm
