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
#include <optional>
#include <utility>
#include <vector>

#include "povm/observable.hpp"

namespace povm {

//=========================================================================
// StochasticKernel
//=========================================================================

// Finite Markov kernel: a row-stochastic matrix nu with nu(j,k) = the
// probability of reporting outcome k given source outcome j.
//
// Index convention (fixed throughout the project): rows are indexed by the
// outcomes of the observable being post-processed (the finer observable E),
// columns by the outcomes of the resulting observable F, so that
//
//     F_k = sum_j nu(j,k) E_j .
//
// Each ROW sums to 1. Note this is the transpose of the column-stochastic
// convention common for Markov chains.
class StochasticKernel {
 public:
  explicit StochasticKernel(Eigen::MatrixXd nu, double tol_scale = 1.0);

  int rows() const { return static_cast<int>(nu_.rows()); }  // source outcomes
  int cols() const { return static_cast<int>(nu_.cols()); }  // target outcomes
  double operator()(int j, int k) const { return nu_(j, k); }
  const Eigen::MatrixXd& matrix() const { return nu_; }

  static StochasticKernel identity(int n);

 private:
  Eigen::MatrixXd nu_;
};

// Chained post-processing. nu1 takes an intermediate observable to the
// final one and nu2 takes the source observable to the intermediate one;
// the result takes the source directly to the final observable:
//
//     compose(nu1, nu2) = nu2 * nu1   (matrix product),
//
// i.e. result(i,k) = sum_j nu2(i,j) nu1(j,k). Requires
// nu2.cols() == nu1.rows().
StochasticKernel compose_kernels(const StochasticKernel& nu1, const StochasticKernel& nu2);

// F with F_k = sum_j nu(j,k) E_j. Requires nu.rows() == E.outcomes().
DiscreteObservable apply_kernel(const DiscreteObservable& e, const StochasticKernel& nu,
                                std::vector<std::string> labels = {});

// Max complex-entrywise residual of the reconstruction F_k = sum_j nu(j,k) E_j.
double kernel_residual(const DiscreteObservable& f, const DiscreteObservable& e,
                       const StochasticKernel& nu);

//=========================================================================
// LP feasibility
//=========================================================================

struct LpEquality {
  std::vector<double> coeffs;
  double rhs = 0.0;
};

// Equality-constrained feasibility problem over box-bounded variables.
struct LpProblem {
  int num_vars = 0;
  std::vector<LpEquality> equalities;
  std::vector<std::pair<double, double>> bounds;  // [lo, hi] per variable

  void validate() const;  // throws FormatError
};

enum class LpStatus { Feasible, Infeasible };

struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  std::vector<double> witness;      // meaningful iff Feasible
  double infeasibility_gap = 0.0;   // minimized phase-one residual iff Infeasible
  int iterations = 0;
};

// Decides feasibility by a phase-one primal simplex on the bounded-variable
// formulation with Bland's anti-cycling rule. A Feasible outcome carries a
// witness re-validated against every constraint; an Infeasible outcome
// carries the minimized total constraint violation (> lp tolerance).
LpOutcome solve_feasibility(const LpProblem& problem);

// Encodes "F is a post-processing of E": variables nu(j,k) in [0,1] with
// row-sum equalities and, per target outcome k, the d^2 real equations of
// the Hermitian identity F_k = sum_j nu(j,k) E_j.
LpProblem encode_fuzzy_instance(const DiscreteObservable& f, const DiscreteObservable& e);

// Variable order used by encode_fuzzy_instance: nu(j,k) -> j*F.outcomes() + k.
int fuzzy_var_index(int j, int k, int f_outcomes);

// Reshapes a feasibility witness of encode_fuzzy_instance into the kernel.
StochasticKernel kernel_from_witness(const std::vector<double>& witness, int e_outcomes,
                                     int f_outcomes);

}  // namespace povm
