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

#include <doctest.h>

#include "povm/photon.hpp"
#include "povm/yes_no.hpp"
#include "test_support.hpp"

using namespace povm;
using namespace povm_test;

namespace {

double residual_against(const LpProblem& p, const std::vector<double>& x) {
  double worst = 0.0;
  for (const LpEquality& eq : p.equalities) {
    double v = -eq.rhs;
    for (int j = 0; j < p.num_vars; ++j) v += eq.coeffs[static_cast<size_t>(j)] * x[static_cast<size_t>(j)];
    worst = std::max(worst, std::abs(v));
  }
  return worst;
}

}  // namespace

TEST_CASE("single-variable feasibility") {
  LpProblem p;
  p.num_vars = 1;
  p.bounds = {{0.0, 1.0}};
  p.equalities = {{{1.0}, 0.5}};
  const LpOutcome ok = solve_feasibility(p);
  REQUIRE(ok.status == LpStatus::Feasible);
  CHECK(ok.witness[0] == doctest::Approx(0.5));

  p.equalities = {{{1.0}, 2.0}};
  const LpOutcome bad = solve_feasibility(p);
  REQUIRE(bad.status == LpStatus::Infeasible);
  CHECK(bad.infeasibility_gap == doctest::Approx(1.0));
}

TEST_CASE("stochastic kernel validation") {
  Eigen::MatrixXd negative(2, 2);
  negative << 1.2, -0.2, 0.5, 0.5;
  CHECK_THROWS_AS(StochasticKernel{negative}, DomainError);
  Eigen::MatrixXd short_row(2, 2);
  short_row << 0.5, 0.4, 0.5, 0.5;
  CHECK_THROWS_AS(StochasticKernel{short_row}, DomainError);
}

TEST_CASE("encoding rejects mismatched Hilbert spaces") {
  std::mt19937_64 g(20);
  CHECK_THROWS_AS(encode_fuzzy_instance(random_observable(2, 2, g), random_observable(3, 2, g)),
                  DimensionError);
}

TEST_CASE("malformed problems are rejected") {
  LpProblem p;
  p.num_vars = 2;
  p.bounds = {{0.0, 1.0}};  // wrong length
  CHECK_THROWS_AS(solve_feasibility(p), FormatError);
  p.bounds = {{0.0, 1.0}, {1.0, 0.0}};  // lo > hi
  CHECK_THROWS_AS(solve_feasibility(p), FormatError);
  p.bounds = {{0.0, 1.0}, {0.0, 1.0}};
  p.equalities = {{{1.0}, 0.0}};  // short coefficient vector
  CHECK_THROWS_AS(solve_feasibility(p), FormatError);
}

TEST_CASE("yes-no pair with known mixing weights is feasible") {
  std::mt19937_64 g(21);
  const Effect b = random_effect(3, g);
  const ComplexMatrix a =
      0.7 * b.matrix() + 0.2 * (ComplexMatrix::Identity(3, 3) - b.matrix());
  const DiscreteObservable ea = make_yes_no(Effect(HermitianOperator(a))).observable;
  const DiscreteObservable eb = make_yes_no(b).observable;

  const LpProblem p = encode_fuzzy_instance(ea, eb);
  const LpOutcome out = solve_feasibility(p);
  REQUIRE(out.status == LpStatus::Feasible);
  const StochasticKernel nu = kernel_from_witness(out.witness, 2, 2);
  CHECK(kernel_residual(ea, eb, nu) < 1e-10);
  // Generic B has linearly independent effects, so the kernel is unique
  // and the mixing weights are read off directly.
  CHECK(nu(1, 1) == doctest::Approx(0.7).epsilon(1e-8));
  CHECK(nu(0, 1) == doctest::Approx(0.2).epsilon(1e-8));
}

TEST_CASE("encode: identical observables admit the identity kernel") {
  std::mt19937_64 g(22);
  const DiscreteObservable e = random_observable(2, 3, g);
  const LpOutcome out = solve_feasibility(encode_fuzzy_instance(e, e));
  REQUIRE(out.status == LpStatus::Feasible);
  const StochasticKernel nu = kernel_from_witness(out.witness, 3, 3);
  CHECK(kernel_residual(e, e, nu) < tols().lp);
  // The constructed delta kernel is itself a witness.
  CHECK(kernel_residual(e, e, StochasticKernel::identity(3)) == 0.0);
}

TEST_CASE("encode: trivial target is solved by the constant-row kernel") {
  std::mt19937_64 g(23);
  const DiscreteObservable f = trivial_observable({0.25, 0.75}, 2);
  const DiscreteObservable e = random_observable(2, 3, g);
  const LpOutcome out = solve_feasibility(encode_fuzzy_instance(f, e));
  REQUIRE(out.status == LpStatus::Feasible);

  Eigen::MatrixXd constant(3, 2);
  for (int j = 0; j < 3; ++j) {
    constant(j, 0) = 0.25;
    constant(j, 1) = 0.75;
  }
  CHECK(kernel_residual(f, e, StochasticKernel(constant)) < 1e-12);
}

TEST_CASE("encode: sharp source against a diagonal smearing") {
  // E sharp on the z basis, F the yes-no observable of diag(0.9, 0.2):
  // the kernel is unique and determined entrywise.
  const DiscreteObservable e = sharp_z();
  ComplexMatrix a = ComplexMatrix::Zero(2, 2);
  a(0, 0) = 0.9;
  a(1, 1) = 0.2;
  const DiscreteObservable f = make_yes_no(Effect(HermitianOperator(a))).observable;
  const LpOutcome out = solve_feasibility(encode_fuzzy_instance(f, e));
  REQUIRE(out.status == LpStatus::Feasible);
  const StochasticKernel nu = kernel_from_witness(out.witness, 2, 2);
  // F_0 = I - A = diag(0.1, 0.8), F_1 = A: row j holds the distribution of
  // reported outcomes given the sharp outcome j.
  CHECK(nu(0, 0) == doctest::Approx(0.1));
  CHECK(nu(0, 1) == doctest::Approx(0.9));
  CHECK(nu(1, 0) == doctest::Approx(0.8));
  CHECK(nu(1, 1) == doctest::Approx(0.2));
}

TEST_CASE("feasible witnesses always satisfy the constraints") {
  std::mt19937_64 g(24);
  int feasible_seen = 0;
  for (int i = 0; i < 20; ++i) {
    const int d = 2 + static_cast<int>(g() % 2);
    const DiscreteObservable e = random_observable(d, 3, g);
    const DiscreteObservable f =
        (i % 2 == 0) ? apply_kernel(e, random_kernel(3, 2, g)) : random_observable(d, 2, g);
    const LpProblem p = encode_fuzzy_instance(f, e);
    const LpOutcome out = solve_feasibility(p);
    if (out.status == LpStatus::Feasible) {
      ++feasible_seen;
      CHECK(residual_against(p, out.witness) <= tols().lp);
      for (double x : out.witness) {
        CHECK(x >= -tols().lp);
        CHECK(x <= 1.0 + tols().lp);
      }
    } else {
      CHECK(out.infeasibility_gap > tols().lp);
    }
  }
  CHECK(feasible_seen >= 10);  // every constructed pair must come back feasible
}

TEST_CASE("feasibility status is invariant under permuting target outcomes") {
  std::mt19937_64 g(25);
  const DiscreteObservable e = sharp_z();
  ComplexMatrix a = ComplexMatrix::Zero(2, 2);
  a(0, 0) = 0.85;
  a(1, 1) = 0.35;
  const DiscreteObservable f = make_yes_no(Effect(HermitianOperator(a))).observable;
  std::vector<Effect> swapped{f.effect(1), f.effect(0)};
  const DiscreteObservable f_perm(std::move(swapped));

  const LpOutcome out = solve_feasibility(encode_fuzzy_instance(f, e));
  const LpOutcome out_perm = solve_feasibility(encode_fuzzy_instance(f_perm, e));
  REQUIRE(out.status == LpStatus::Feasible);
  REQUIRE(out_perm.status == LpStatus::Feasible);

  // The kernel here is unique, so the permuted witness is exactly the
  // column-permuted witness.
  const StochasticKernel nu = kernel_from_witness(out.witness, 2, 2);
  const StochasticKernel nu_perm = kernel_from_witness(out_perm.witness, 2, 2);
  for (int j = 0; j < 2; ++j) {
    CHECK(nu_perm(j, 0) == doctest::Approx(nu(j, 1)).epsilon(1e-9));
    CHECK(nu_perm(j, 1) == doctest::Approx(nu(j, 0)).epsilon(1e-9));
  }

  // An infeasible pair stays infeasible under permutation.
  const DiscreteObservable sharp = sharp_z();
  const DiscreteObservable triv = trivial_observable({0.5, 0.5}, 2);
  const LpOutcome inf1 = solve_feasibility(encode_fuzzy_instance(sharp, triv));
  std::vector<Effect> sharp_swapped{sharp.effect(1), sharp.effect(0)};
  const LpOutcome inf2 =
      solve_feasibility(encode_fuzzy_instance(DiscreteObservable(std::move(sharp_swapped)), triv));
  CHECK(inf1.status == LpStatus::Infeasible);
  CHECK(inf2.status == LpStatus::Infeasible);
  CHECK(inf1.infeasibility_gap == doctest::Approx(inf2.infeasibility_gap).epsilon(1e-6));
}

TEST_CASE("kernel composition") {
  SUBCASE("identity on the right leaves the kernel unchanged") {
    std::mt19937_64 g(26);
    const StochasticKernel nu = random_kernel(3, 3, g);
    const StochasticKernel composed = compose_kernels(nu, StochasticKernel::identity(3));
    CHECK((composed.matrix() - nu.matrix()).cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("absorbing uniform kernel") {
    Eigen::MatrixXd uniform(2, 2);
    uniform.setConstant(0.5);
    const StochasticKernel composed =
        compose_kernels(StochasticKernel::identity(2), StochasticKernel(uniform));
    CHECK(composed.matrix()(0, 0) == doctest::Approx(0.5));
    CHECK(composed.matrix()(1, 1) == doctest::Approx(0.5));
  }
  SUBCASE("binomial kernels compose along efficiencies") {
    const StochasticKernel k12 = binomial_efficiency_kernel(0.2, 0.5, 8);
    const StochasticKernel k23 = binomial_efficiency_kernel(0.5, 0.8, 8);
    const StochasticKernel k13 = binomial_efficiency_kernel(0.2, 0.8, 8);
    const StochasticKernel chained = compose_kernels(k12, k23);
    CHECK((chained.matrix() - k13.matrix()).cwiseAbs().maxCoeff() < 1e-12);
  }
  SUBCASE("composition is associative") {
    std::mt19937_64 g(27);
    const StochasticKernel a = random_kernel(3, 4, g);  // applied last
    const StochasticKernel b = random_kernel(4, 3, g);
    const StochasticKernel c = random_kernel(5, 4, g);  // applied first
    const StochasticKernel left = compose_kernels(compose_kernels(a, b), c);
    const StochasticKernel right = compose_kernels(a, compose_kernels(b, c));
    CHECK((left.matrix() - right.matrix()).cwiseAbs().maxCoeff() < 4.0 * tols().lp);
  }
  SUBCASE("shape mismatch is rejected") {
    std::mt19937_64 g(28);
    CHECK_THROWS_AS(compose_kernels(random_kernel(3, 2, g), random_kernel(3, 2, g)),
                    DimensionError);
  }
}

TEST_CASE("composed kernels stay row stochastic") {
  std::mt19937_64 g(29);
  for (int i = 0; i < 10; ++i) {
    const StochasticKernel nu1 = random_kernel(4, 3, g);
    const StochasticKernel nu2 = random_kernel(5, 4, g);
    const StochasticKernel composed = compose_kernels(nu1, nu2);  // validates on construction
    for (int j = 0; j < composed.rows(); ++j) {
      CHECK(composed.matrix().row(j).sum() == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}
