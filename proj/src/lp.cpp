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

#include "povm/lp.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace povm {

//=========================================================================
// StochasticKernel
//=========================================================================

StochasticKernel::StochasticKernel(Eigen::MatrixXd nu, double tol_scale) : nu_(std::move(nu)) {
  if (nu_.rows() < 1 || nu_.cols() < 1) throw DimensionError("kernel must be nonempty");
  const double tol = tols().lp * tol_scale;
  for (int j = 0; j < nu_.rows(); ++j) {
    double row_sum = 0.0;
    for (int k = 0; k < nu_.cols(); ++k) {
      const double v = nu_(j, k);
      if (v < -tol || v > 1.0 + tol) {
        std::ostringstream msg;
        msg << "kernel entry (" << j << "," << k << ") = " << v << " outside [0,1]";
        throw DomainError(msg.str());
      }
      row_sum += v;
    }
    if (std::abs(row_sum - 1.0) > tol) {
      std::ostringstream msg;
      msg << "kernel row " << j << " sums to " << row_sum;
      throw DomainError(msg.str());
    }
  }
}

StochasticKernel StochasticKernel::identity(int n) {
  return StochasticKernel(Eigen::MatrixXd::Identity(n, n));
}

StochasticKernel compose_kernels(const StochasticKernel& nu1, const StochasticKernel& nu2) {
  if (nu2.cols() != nu1.rows()) {
    throw DimensionError("kernel chain mismatch: nu2 targets " + std::to_string(nu2.cols()) +
                         " outcomes but nu1 post-processes " + std::to_string(nu1.rows()));
  }
  return StochasticKernel(nu2.matrix() * nu1.matrix(), 2.0);
}

DiscreteObservable apply_kernel(const DiscreteObservable& e, const StochasticKernel& nu,
                                std::vector<std::string> labels) {
  if (nu.rows() != e.outcomes()) {
    throw DimensionError("kernel expects " + std::to_string(nu.rows()) +
                         " source outcomes, observable has " + std::to_string(e.outcomes()));
  }
  const int d = e.dim();
  std::vector<Effect> effects;
  effects.reserve(static_cast<size_t>(nu.cols()));
  for (int k = 0; k < nu.cols(); ++k) {
    ComplexMatrix fk = ComplexMatrix::Zero(d, d);
    for (int j = 0; j < nu.rows(); ++j) fk += nu(j, k) * e.effect(j).matrix();
    effects.emplace_back(HermitianOperator(std::move(fk)));
  }
  return DiscreteObservable(std::move(effects), std::move(labels));
}

double kernel_residual(const DiscreteObservable& f, const DiscreteObservable& e,
                       const StochasticKernel& nu) {
  if (f.dim() != e.dim()) throw DimensionError("observables live on different spaces");
  if (nu.rows() != e.outcomes() || nu.cols() != f.outcomes()) {
    throw DimensionError("kernel shape does not match the observable pair");
  }
  const int d = e.dim();
  double residual = 0.0;
  for (int k = 0; k < f.outcomes(); ++k) {
    ComplexMatrix rec = ComplexMatrix::Zero(d, d);
    for (int j = 0; j < e.outcomes(); ++j) rec += nu(j, k) * e.effect(j).matrix();
    residual = std::max(residual, max_abs_entry(rec - f.effect(k).matrix()));
  }
  return residual;
}

//=========================================================================
// LpProblem
//=========================================================================

void LpProblem::validate() const {
  if (num_vars < 1) throw FormatError("LP needs at least one variable");
  if (bounds.size() != static_cast<size_t>(num_vars)) {
    throw FormatError("bounds count does not match variable count");
  }
  for (const auto& [lo, hi] : bounds) {
    if (!(lo <= hi)) throw FormatError("variable bound has lo > hi");
    if (!std::isfinite(lo) || !std::isfinite(hi)) {
      throw FormatError("structural variable bounds must be finite");
    }
  }
  for (const LpEquality& eq : equalities) {
    if (eq.coeffs.size() != static_cast<size_t>(num_vars)) {
      throw FormatError("equality coefficient vector has wrong length");
    }
    if (!std::isfinite(eq.rhs)) throw FormatError("equality rhs must be finite");
  }
}

//=========================================================================
// Phase-one bounded-variable simplex
//=========================================================================

namespace {

constexpr double kPivotEps = 1e-10;    // smallest usable pivot magnitude
constexpr double kReducedEps = 1e-9;   // reduced-cost significance
constexpr double kZeroRowEps = 1e-13;  // presolve: all-zero coefficient row
constexpr double kInf = std::numeric_limits<double>::infinity();

// Minimizes the total artificial-variable mass for Ax = b, lo <= x <= hi.
// Dense tableau, Bland's entering/leaving rule, bound flips for box
// variables. Artificial variables are fixed at zero once they leave the
// basis and never re-enter.
class PhaseOneSimplex {
 public:
  PhaseOneSimplex(const LpProblem& p, const std::vector<int>& keep_rows)
      : n_(p.num_vars),
        m_(static_cast<int>(keep_rows.size())),
        total_(n_ + m_),
        tab_(static_cast<size_t>(m_) * static_cast<size_t>(total_), 0.0),
        rhs_(static_cast<size_t>(m_), 0.0),
        dual_(static_cast<size_t>(total_), 0.0),
        lo_(static_cast<size_t>(total_), 0.0),
        hi_(static_cast<size_t>(total_), 0.0),
        basis_(static_cast<size_t>(m_), -1),
        row_of_(static_cast<size_t>(total_), -1),
        at_upper_(static_cast<size_t>(total_), 0),
        fixed_(static_cast<size_t>(total_), 0) {
    for (int j = 0; j < n_; ++j) {
      lo_[static_cast<size_t>(j)] = p.bounds[static_cast<size_t>(j)].first;
      hi_[static_cast<size_t>(j)] = p.bounds[static_cast<size_t>(j)].second;
      if (hi_[static_cast<size_t>(j)] - lo_[static_cast<size_t>(j)] <= 0.0) {
        fixed_[static_cast<size_t>(j)] = 1;  // pinned box variable
      }
    }
    for (int i = 0; i < m_; ++i) {
      lo_[static_cast<size_t>(n_ + i)] = 0.0;
      hi_[static_cast<size_t>(n_ + i)] = kInf;
    }
    // Start structural variables at their lower bounds; one artificial per
    // row carries the residual. Rows are sign-normalized so residuals are
    // nonnegative and every artificial column is +1.
    for (int i = 0; i < m_; ++i) {
      const LpEquality& eq = p.equalities[static_cast<size_t>(keep_rows[static_cast<size_t>(i)])];
      double resid = eq.rhs;
      for (int j = 0; j < n_; ++j) resid -= eq.coeffs[static_cast<size_t>(j)] * lo_[static_cast<size_t>(j)];
      const double sign = resid >= 0.0 ? 1.0 : -1.0;
      for (int j = 0; j < n_; ++j) at(i, j) = sign * eq.coeffs[static_cast<size_t>(j)];
      at(i, n_ + i) = 1.0;
      rhs_[static_cast<size_t>(i)] = sign * resid;
      basis_[static_cast<size_t>(i)] = n_ + i;
      row_of_[static_cast<size_t>(n_ + i)] = i;
    }
    // Phase-one reduced costs: cost 1 on artificials, 0 on structurals.
    for (int j = 0; j < n_; ++j) {
      double s = 0.0;
      for (int i = 0; i < m_; ++i) s += at(i, j);
      dual_[static_cast<size_t>(j)] = -s;
    }
  }

  // Runs to optimality; returns the phase-one objective (total residual).
  double run(int& iterations) {
    const long max_iter = 20000L + 50L * total_;
    long iter = 0;
    while (true) {
      if (++iter > max_iter) {
        throw InternalError("simplex exceeded its iteration budget");
      }
      const int q = entering();
      if (q < 0) break;
      step(q);
    }
    iterations = static_cast<int>(iter);
    double obj = 0.0;
    for (int i = 0; i < m_; ++i) {
      if (basis_[static_cast<size_t>(i)] >= n_) obj += std::max(rhs_[static_cast<size_t>(i)], 0.0);
    }
    return obj;
  }

  std::vector<double> structural_values() const {
    std::vector<double> x(static_cast<size_t>(n_), 0.0);
    for (int j = 0; j < n_; ++j) {
      const int r = row_of_[static_cast<size_t>(j)];
      if (r >= 0) {
        x[static_cast<size_t>(j)] = rhs_[static_cast<size_t>(r)];
      } else {
        x[static_cast<size_t>(j)] = at_upper_[static_cast<size_t>(j)] ? hi_[static_cast<size_t>(j)]
                                                                      : lo_[static_cast<size_t>(j)];
      }
    }
    return x;
  }

 private:
  double& at(int i, int j) { return tab_[static_cast<size_t>(i) * static_cast<size_t>(total_) + static_cast<size_t>(j)]; }
  double at(int i, int j) const { return tab_[static_cast<size_t>(i) * static_cast<size_t>(total_) + static_cast<size_t>(j)]; }

  // Bland: the improving nonbasic column of smallest index.
  int entering() const {
    for (int j = 0; j < total_; ++j) {
      if (row_of_[static_cast<size_t>(j)] >= 0 || fixed_[static_cast<size_t>(j)]) continue;
      const double d = dual_[static_cast<size_t>(j)];
      if (!at_upper_[static_cast<size_t>(j)] && d < -kReducedEps) return j;
      if (at_upper_[static_cast<size_t>(j)] && d > kReducedEps) return j;
    }
    return -1;
  }

  void step(int q) {
    const double sigma = at_upper_[static_cast<size_t>(q)] ? -1.0 : 1.0;

    // Ratio test: how far can the entering variable move?
    double t_best = hi_[static_cast<size_t>(q)] - lo_[static_cast<size_t>(q)];  // bound flip
    int leave_row = -1;
    bool leave_at_upper = false;
    for (int i = 0; i < m_; ++i) {
      const double w = sigma * at(i, q);
      const int b = basis_[static_cast<size_t>(i)];
      double t;
      bool hits_upper;
      if (w > kPivotEps) {
        t = (rhs_[static_cast<size_t>(i)] - lo_[static_cast<size_t>(b)]) / w;
        hits_upper = false;
      } else if (w < -kPivotEps) {
        if (hi_[static_cast<size_t>(b)] == kInf) continue;
        t = (hi_[static_cast<size_t>(b)] - rhs_[static_cast<size_t>(i)]) / (-w);
        hits_upper = true;
      } else {
        continue;
      }
      t = std::max(t, 0.0);
      if (t < t_best - 1e-12 ||
          (t < t_best + 1e-12 && leave_row >= 0 &&
           basis_[static_cast<size_t>(i)] < basis_[static_cast<size_t>(leave_row)])) {
        t_best = t;
        leave_row = i;
        leave_at_upper = hits_upper;
      }
    }

    if (t_best == kInf || !std::isfinite(t_best)) {
      throw InternalError("phase-one simplex reported an unbounded direction");
    }

    if (leave_row < 0) {
      // Bound flip: entering variable jumps to its other bound.
      for (int i = 0; i < m_; ++i) rhs_[static_cast<size_t>(i)] -= sigma * t_best * at(i, q);
      at_upper_[static_cast<size_t>(q)] ^= 1u;
      return;
    }

    // Basis change on (leave_row, q).
    const double enter_val =
        (at_upper_[static_cast<size_t>(q)] ? hi_[static_cast<size_t>(q)] : lo_[static_cast<size_t>(q)]) +
        sigma * t_best;
    for (int i = 0; i < m_; ++i) {
      if (i != leave_row) rhs_[static_cast<size_t>(i)] -= sigma * t_best * at(i, q);
    }

    const int leaving = basis_[static_cast<size_t>(leave_row)];
    row_of_[static_cast<size_t>(leaving)] = -1;
    at_upper_[static_cast<size_t>(leaving)] = leave_at_upper ? 1u : 0u;
    if (leaving >= n_) fixed_[static_cast<size_t>(leaving)] = 1;  // artificial never returns

    const double piv = at(leave_row, q);
    const double inv = 1.0 / piv;
    for (int j = 0; j < total_; ++j) at(leave_row, j) *= inv;
    at(leave_row, q) = 1.0;
    rhs_[static_cast<size_t>(leave_row)] = enter_val;

    for (int i = 0; i < m_; ++i) {
      if (i == leave_row) continue;
      const double f = at(i, q);
      if (f == 0.0) continue;
      for (int j = 0; j < total_; ++j) at(i, j) -= f * at(leave_row, j);
      at(i, q) = 0.0;
    }
    const double fd = dual_[static_cast<size_t>(q)];
    if (fd != 0.0) {
      for (int j = 0; j < total_; ++j) dual_[static_cast<size_t>(j)] -= fd * at(leave_row, j);
      dual_[static_cast<size_t>(q)] = 0.0;
    }

    basis_[static_cast<size_t>(leave_row)] = q;
    row_of_[static_cast<size_t>(q)] = leave_row;
    at_upper_[static_cast<size_t>(q)] = 0;
  }

  int n_, m_, total_;
  std::vector<double> tab_, rhs_, dual_, lo_, hi_;
  std::vector<int> basis_, row_of_;
  std::vector<uint8_t> at_upper_, fixed_;
};

double equality_residual(const LpProblem& p, const std::vector<double>& x) {
  double worst = 0.0;
  for (const LpEquality& eq : p.equalities) {
    double v = -eq.rhs;
    for (int j = 0; j < p.num_vars; ++j) v += eq.coeffs[static_cast<size_t>(j)] * x[static_cast<size_t>(j)];
    worst = std::max(worst, std::abs(v));
  }
  return worst;
}

}  // namespace

LpOutcome solve_feasibility(const LpProblem& problem) {
  problem.validate();
  const double tol = tols().lp;

  // Presolve: rows with no usable coefficients either vanish or contribute
  // an irreducible residual to the phase-one objective.
  std::vector<int> keep;
  double base_gap = 0.0;
  for (int r = 0; r < static_cast<int>(problem.equalities.size()); ++r) {
    const LpEquality& eq = problem.equalities[static_cast<size_t>(r)];
    double max_coeff = 0.0;
    for (double c : eq.coeffs) max_coeff = std::max(max_coeff, std::abs(c));
    if (max_coeff <= kZeroRowEps) {
      base_gap += std::abs(eq.rhs);
    } else {
      keep.push_back(r);
    }
  }

  LpOutcome out;
  double phase_one = 0.0;
  if (!keep.empty()) {
    PhaseOneSimplex simplex(problem, keep);
    phase_one = simplex.run(out.iterations);
    out.witness = simplex.structural_values();
  } else {
    out.witness.assign(static_cast<size_t>(problem.num_vars), 0.0);
    for (int j = 0; j < problem.num_vars; ++j) {
      out.witness[static_cast<size_t>(j)] = problem.bounds[static_cast<size_t>(j)].first;
    }
  }

  const double gap = base_gap + phase_one;
  if (gap <= tol) {
    // Contract: a Feasible answer is re-validated against the original
    // problem before being returned.
    const double resid = equality_residual(problem, out.witness);
    if (resid > tol) {
      std::ostringstream msg;
      msg << "simplex reported feasibility but the witness violates an equality by " << resid;
      throw InternalError(msg.str());
    }
    for (int j = 0; j < problem.num_vars; ++j) {
      const auto& [lo, hi] = problem.bounds[static_cast<size_t>(j)];
      const double x = out.witness[static_cast<size_t>(j)];
      if (x < lo - tol || x > hi + tol) {
        throw InternalError("simplex witness violates a variable bound");
      }
    }
    out.status = LpStatus::Feasible;
    out.infeasibility_gap = 0.0;
  } else {
    out.status = LpStatus::Infeasible;
    out.infeasibility_gap = gap;
    out.witness.clear();
  }
  return out;
}

//=========================================================================
// Fuzzy-relation encoding
//=========================================================================

int fuzzy_var_index(int j, int k, int f_outcomes) { return j * f_outcomes + k; }

LpProblem encode_fuzzy_instance(const DiscreteObservable& f, const DiscreteObservable& e) {
  if (f.dim() != e.dim()) throw DimensionError("observables live on different Hilbert spaces");
  const int d = e.dim();
  const int ne = e.outcomes();
  const int nf = f.outcomes();

  LpProblem p;
  p.num_vars = ne * nf;
  p.bounds.assign(static_cast<size_t>(p.num_vars), {0.0, 1.0});

  // Row-stochasticity: sum_k nu(j,k) = 1 for each source outcome j.
  for (int j = 0; j < ne; ++j) {
    LpEquality eq;
    eq.coeffs.assign(static_cast<size_t>(p.num_vars), 0.0);
    for (int k = 0; k < nf; ++k) eq.coeffs[static_cast<size_t>(fuzzy_var_index(j, k, nf))] = 1.0;
    eq.rhs = 1.0;
    p.equalities.push_back(std::move(eq));
  }

  // Operator identities F_k = sum_j nu(j,k) E_j, one real equation per
  // independent Hermitian component: diagonal and real upper triangle,
  // then imaginary strict upper triangle.
  for (int k = 0; k < nf; ++k) {
    const ComplexMatrix& fk = f.effect(k).matrix();
    for (int a = 0; a < d; ++a) {
      for (int b = a; b < d; ++b) {
        LpEquality re_eq;
        re_eq.coeffs.assign(static_cast<size_t>(p.num_vars), 0.0);
        for (int j = 0; j < ne; ++j) {
          re_eq.coeffs[static_cast<size_t>(fuzzy_var_index(j, k, nf))] =
              e.effect(j).matrix()(a, b).real();
        }
        re_eq.rhs = fk(a, b).real();
        p.equalities.push_back(std::move(re_eq));
        if (b > a) {
          LpEquality im_eq;
          im_eq.coeffs.assign(static_cast<size_t>(p.num_vars), 0.0);
          for (int j = 0; j < ne; ++j) {
            im_eq.coeffs[static_cast<size_t>(fuzzy_var_index(j, k, nf))] =
                e.effect(j).matrix()(a, b).imag();
          }
          im_eq.rhs = fk(a, b).imag();
          p.equalities.push_back(std::move(im_eq));
        }
      }
    }
  }
  return p;
}

StochasticKernel kernel_from_witness(const std::vector<double>& witness, int e_outcomes,
                                     int f_outcomes) {
  if (witness.size() != static_cast<size_t>(e_outcomes) * static_cast<size_t>(f_outcomes)) {
    throw DimensionError("witness length does not match kernel shape");
  }
  Eigen::MatrixXd nu(e_outcomes, f_outcomes);
  for (int j = 0; j < e_outcomes; ++j) {
    for (int k = 0; k < f_outcomes; ++k) {
      nu(j, k) = witness[static_cast<size_t>(fuzzy_var_index(j, k, f_outcomes))];
    }
  }
  return StochasticKernel(std::move(nu));
}

}  // namespace povm
