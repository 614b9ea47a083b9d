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

#include "povm/relations.hpp"
#include "povm/yes_no.hpp"
#include "test_support.hpp"

using namespace povm;
using namespace povm_test;

namespace {

ComplexMatrix diag3(double a, double b, double c) {
  ComplexMatrix m = ComplexMatrix::Zero(3, 3);
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  return m;
}

}  // namespace

TEST_CASE("make_yes_no") {
  SUBCASE("identity effect gives the deterministic trivial observable") {
    const YesNoObservable y = make_yes_no(Effect(HermitianOperator(ComplexMatrix::Identity(2, 2))));
    const auto m = is_trivial(y.observable);
    REQUIRE(m.has_value());
    CHECK((*m)[0] == doctest::Approx(0.0));
    CHECK((*m)[1] == doctest::Approx(1.0));
  }
  SUBCASE("non-projection effect is accepted") {
    const YesNoObservable y = make_yes_no(Effect(HermitianOperator(diag3(1.0, 0.6, 0.0))));
    CHECK(y.observable.outcomes() == 2);
    CHECK_FALSE(is_trivial(y.observable).has_value());
  }
  SUBCASE("scalar effect gives a trivial observable") {
    const YesNoObservable y = make_yes_no(Effect(HermitianOperator(0.5 * ComplexMatrix::Identity(2, 2))));
    REQUIRE(is_trivial(y.observable).has_value());
  }
}

TEST_CASE("mixing-weight recovery") {
  std::mt19937_64 g(61);
  SUBCASE("A equals B") {
    const Effect b = random_effect(3, g);
    const auto ts = yes_no_fuzzy_parameters(b, b);
    REQUIRE(ts.has_value());
    CHECK(ts->first == doctest::Approx(1.0));
    CHECK(ts->second == doctest::Approx(0.0).epsilon(1e-9));
  }
  SUBCASE("A equals the complement of B") {
    const Effect b = random_effect(3, g);
    const auto ts = yes_no_fuzzy_parameters(b.complement(), b);
    REQUIRE(ts.has_value());
    CHECK(ts->first == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(ts->second == doctest::Approx(1.0));
  }
  SUBCASE("diagonal pair solves the two-by-two system") {
    ComplexMatrix b = ComplexMatrix::Zero(2, 2);
    b(0, 0) = 1.0;
    ComplexMatrix a = ComplexMatrix::Zero(2, 2);
    a(0, 0) = 0.7;
    a(1, 1) = 0.2;
    const auto ts = yes_no_fuzzy_parameters(Effect(HermitianOperator(a)),
                                            Effect(HermitianOperator(b)));
    REQUIRE(ts.has_value());
    CHECK(ts->first == doctest::Approx(0.7));
    CHECK(ts->second == doctest::Approx(0.2));
  }
  SUBCASE("random constructions are recovered") {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 20; ++i) {
      const Effect b = random_effect(3, g);
      const double t = u(g), s = u(g);
      const ComplexMatrix a =
          t * b.matrix() + s * (ComplexMatrix::Identity(3, 3) - b.matrix());
      const auto ts = yes_no_fuzzy_parameters(Effect(HermitianOperator(a)), b);
      REQUIRE(ts.has_value());
      const ComplexMatrix rec = ts->first * b.matrix() +
                                ts->second * (ComplexMatrix::Identity(3, 3) - b.matrix());
      CHECK(operator_norm(HermitianOperator(a - rec)) < 1e-9);
    }
  }
  SUBCASE("scalar B only represents matching scalars") {
    const Effect b(HermitianOperator(0.4 * ComplexMatrix::Identity(2, 2)));
    const auto hit = yes_no_fuzzy_parameters(
        Effect(HermitianOperator(0.3 * ComplexMatrix::Identity(2, 2))), b);
    REQUIRE(hit.has_value());
    CHECK(hit->first == doctest::Approx(0.3));
    CHECK_FALSE(yes_no_fuzzy_parameters(Effect(HermitianOperator(diag3(1, 0.5, 0).topLeftCorner(2, 2))),
                                        b)
                    .has_value());
  }
  SUBCASE("existence agrees with the fuzzy relation") {
    std::mt19937_64 h(62);
    for (int i = 0; i < 15; ++i) {
      const Effect a = random_effect(2, h);
      const Effect b = random_effect(2, h);
      const bool params = yes_no_fuzzy_parameters(a, b).has_value();
      const bool rel = leq_fuzzy(make_yes_no(a).observable, make_yes_no(b).observable).holds;
      CHECK(params == rel);
    }
  }
}

TEST_CASE("optimality of yes-no observables") {
  std::mt19937_64 g(63);
  SUBCASE("projections are optimal") {
    CHECK(yes_no_is_fuzzy_optimal(random_projection(3, 1, g)));
    CHECK(yes_no_is_fuzzy_optimal(random_projection(4, 2, g)));
  }
  SUBCASE("norm-one non-projections are optimal") {
    CHECK(yes_no_is_fuzzy_optimal(Effect(HermitianOperator(diag3(1.0, 0.6, 0.0)))));
  }
  SUBCASE("scalar effects are not optimal") {
    CHECK_FALSE(yes_no_is_fuzzy_optimal(
        Effect(HermitianOperator(0.5 * ComplexMatrix::Identity(2, 2)))));
  }
}

TEST_CASE("dominating effect from the closed form") {
  SUBCASE("diag(0.8, 0.1) is dominated by diag(1, 0)") {
    ComplexMatrix a = ComplexMatrix::Zero(2, 2);
    a(0, 0) = 0.8;
    a(1, 1) = 0.1;
    const Effect ea{HermitianOperator(a)};
    const auto b = yes_no_dominating_effect(ea);
    REQUIRE(b.has_value());
    CHECK(b->matrix()(0, 0).real() == doctest::Approx(1.0));
    CHECK(b->matrix()(1, 1).real() == doctest::Approx(0.0).epsilon(1e-9));
    // A = alpha B + (1 - beta) B' with alpha = 0.8, beta = 0.9.
    const ComplexMatrix rec =
        0.8 * b->matrix() + 0.1 * (ComplexMatrix::Identity(2, 2) - b->matrix());
    CHECK(max_abs_entry(a - rec) < 1e-12);
  }
  SUBCASE("optimal effects have no dominator") {
    std::mt19937_64 g(64);
    CHECK_FALSE(yes_no_dominating_effect(random_projection(3, 1, g)).has_value());
  }
  SUBCASE("scalar effects have no dominator") {
    CHECK_FALSE(yes_no_dominating_effect(
                    Effect(HermitianOperator(0.3 * ComplexMatrix::Identity(2, 2))))
                    .has_value());
  }
  SUBCASE("non-optimal effects are strictly dominated, never equivalent") {
    std::mt19937_64 g(65);
    int dominated = 0;
    for (int i = 0; i < 15; ++i) {
      const Effect a = random_effect(3, g);
      if (yes_no_is_fuzzy_optimal(a)) continue;
      const auto b = yes_no_dominating_effect(a);
      REQUIRE(b.has_value());
      ++dominated;
      const DiscreteObservable ea = make_yes_no(a).observable;
      const DiscreteObservable eb = make_yes_no(*b).observable;
      CHECK(leq_fuzzy(ea, eb).holds);
      CHECK_FALSE(equivalence(ea, eb, RelationKind::Fuzzy));
    }
    CHECK(dominated >= 10);  // random spectra are almost never optimal
  }
}

TEST_CASE("approximate actualization") {
  std::mt19937_64 g(66);
  SUBCASE("projections are realized exactly") {
    const Effect p = random_projection(3, 1, g);
    const auto [t1, t2] = approximately_actualizable(p, 0.01);
    CHECK((t1.matrix() * p.matrix()).trace().real() == doctest::Approx(1.0));
    CHECK((t2.matrix() * p.complement().matrix()).trace().real() == doctest::Approx(1.0));
  }
  SUBCASE("diagonal optimal effect picks its extreme eigenvectors") {
    const Effect a(HermitianOperator(diag3(1.0, 0.5, 0.0)));
    const auto [t1, t2] = approximately_actualizable(a, 0.1);
    CHECK(t1.matrix()(0, 0).real() == doctest::Approx(1.0));
    CHECK(t2.matrix()(2, 2).real() == doctest::Approx(1.0));
  }
  SUBCASE("random optimal effects meet a tight delta") {
    // Unitary conjugate of a spectrum pinned at both ends.
    const ComplexMatrix q = random_unitary(4, g);
    ComplexMatrix spec = ComplexMatrix::Zero(4, 4);
    spec(0, 0) = 1.0;
    spec(1, 1) = 0.8;
    spec(2, 2) = 0.3;
    const Effect a(HermitianOperator(q * spec * q.adjoint()));
    const auto [t1, t2] = approximately_actualizable(a, 1e-3);
    CHECK((t1.matrix() * a.matrix()).trace().real() >= 1.0 - 1e-3);
    CHECK((t2.matrix() * a.complement().matrix()).trace().real() >= 1.0 - 1e-3);
  }
  SUBCASE("non-optimal input is rejected") {
    CHECK_THROWS_AS(approximately_actualizable(
                        Effect(HermitianOperator(0.5 * ComplexMatrix::Identity(2, 2))), 0.01),
                    DomainError);
  }
}
