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

#include "povm/determination.hpp"
#include "povm/photon.hpp"
#include "povm/relations.hpp"
#include "test_support.hpp"

using namespace povm;
using namespace povm_test;

namespace {

// Re-validates the NotDetermined contract independently of the module.
void check_witness_contract(const DeterminationVerdict& v, const DensityState& t,
                            const DiscreteObservable& e) {
  REQUIRE(v.status == DeterminationStatus::NotDetermined);
  REQUIRE(v.witness.has_value());
  CHECK(linf_distance(statistics_map(e, *v.witness), statistics_map(e, t)) <= tols().prob);
  CHECK(operator_norm(HermitianOperator(v.witness->matrix() - t.matrix())) > tols().state);
}

}  // namespace

TEST_CASE("informationally complete observables determine every state") {
  std::mt19937_64 g(51);
  const DiscreteObservable ic = qubit_ic_povm();
  for (int i = 0; i < 5; ++i) {
    const DeterminationVerdict v = is_determined(random_density(2, g), ic);
    CHECK(v.status == DeterminationStatus::Determined);
    CHECK(v.certification == CertificationLevel::Exact);
  }
}

TEST_CASE("sharp observables determine exactly their rank-one effects") {
  const DiscreteObservable z = sharp_z();

  SUBCASE("eigenstates are determined") {
    for (int k = 0; k < 2; ++k) {
      const DeterminationVerdict v = is_determined(basis_state(2, k), z);
      CHECK(v.status == DeterminationStatus::Determined);
      CHECK(v.certification == CertificationLevel::Exact);
    }
  }
  SUBCASE("the maximally mixed state is not determined") {
    const DensityState t = maximally_mixed(2);
    const DeterminationVerdict v = is_determined(t, z);
    check_witness_contract(v, t, z);
    CHECK(v.certification == CertificationLevel::Exact);
  }
  SUBCASE("superpositions are not determined") {
    const DensityState t = plus_state();
    check_witness_contract(is_determined(t, z), t, z);
  }
  SUBCASE("degenerate blocks leave every state undetermined") {
    ComplexMatrix p0 = ComplexMatrix::Zero(4, 4);
    p0(0, 0) = p0(1, 1) = 1.0;
    ComplexMatrix p1 = ComplexMatrix::Zero(4, 4);
    p1(2, 2) = p1(3, 3) = 1.0;
    const DiscreteObservable degenerate(
        {Effect(HermitianOperator(p0)), Effect(HermitianOperator(p1))});
    std::mt19937_64 g(52);
    for (const DensityState& t :
         {basis_state(4, 0), maximally_mixed(4), random_density(4, g)}) {
      check_witness_contract(is_determined(t, degenerate), t, degenerate);
    }
  }
}

TEST_CASE("lossy photon counters determine the occupation eigenstates") {
  const int d = 5;
  const DiscreteObservable photon = make_photon_counting(0.7, d).observable;

  SUBCASE("basis projections are determined exactly") {
    for (int n = 0; n < d; ++n) {
      const DeterminationVerdict v = is_determined(basis_state(d, n), photon);
      CHECK(v.status == DeterminationStatus::Determined);
      CHECK(v.certification == CertificationLevel::Exact);
    }
  }
  SUBCASE("the maximally mixed state has a diagonal-preserving witness") {
    const DensityState t = maximally_mixed(d);
    check_witness_contract(is_determined(t, photon), t, photon);
  }
  SUBCASE("a rank-two boundary mixture has a coherence witness") {
    ComplexMatrix m = ComplexMatrix::Zero(d, d);
    m(0, 0) = m(1, 1) = 0.5;
    const DensityState t{HermitianOperator(m)};
    check_witness_contract(is_determined(t, photon), t, photon);
  }
  SUBCASE("non-basis pure states are dephased") {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(d);
    v(0) = 1.0;
    v(2) = 1.0;
    const DensityState t = pure_state(v);
    check_witness_contract(is_determined(t, photon), t, photon);
  }
}

TEST_CASE("trivial observables determine nothing") {
  const DiscreteObservable triv = trivial_observable({0.3, 0.7}, 3);
  std::mt19937_64 g(53);
  for (const DensityState& t : {basis_state(3, 0), maximally_mixed(3), random_density(3, g)}) {
    check_witness_contract(is_determined(t, triv), t, triv);
  }
}

TEST_CASE("full-rank states under a non-complete observable always yield a witness") {
  std::mt19937_64 g(54);
  for (int i = 0; i < 10; ++i) {
    const int d = 2 + static_cast<int>(g() % 3);
    // d effects on a d-level system can never be informationally complete
    // (d^2 > d independent directions are needed).
    const DiscreteObservable e = random_observable(d, 2, g);
    const DensityState t = random_density(d, g);  // full rank almost surely
    check_witness_contract(is_determined(t, e), t, e);
  }
}

TEST_CASE("determination is consistent with the informational order") {
  std::mt19937_64 g(55);
  for (int i = 0; i < 6; ++i) {
    const DiscreteObservable e = random_observable(2, 4, g);
    const DiscreteObservable f = apply_kernel(e, random_kernel(4, 3, g));
    REQUIRE(leq_informational(f, e).holds);
    for (const DensityState& t : default_probes({f})) {
      const DeterminationVerdict vf = is_determined(t, f);
      if (vf.status == DeterminationStatus::Determined) {
        CHECK(is_determined(t, e).status != DeterminationStatus::NotDetermined);
      }
    }
  }
}

TEST_CASE("probe reports match elementwise calls") {
  std::mt19937_64 g(56);
  const DiscreteObservable e = make_photon_counting(0.6, 4).observable;
  const std::vector<DensityState> probes{basis_state(4, 1), maximally_mixed(4),
                                         random_density(4, g)};
  const std::vector<DeterminationVerdict> report = determined_probes_report(e, probes);
  REQUIRE(report.size() == probes.size());
  for (size_t i = 0; i < probes.size(); ++i) {
    CHECK(report[i].status == is_determined(probes[i], e).status);
  }
}

TEST_CASE("uncertifiable uniqueness is reported as heuristic, not overclaimed") {
  // Trine-style qubit POVM in the x-z plane: the statistics null space is
  // the sigma_y direction. A basis state admits no positive perturbation
  // along it, so it is genuinely determined, but none of the exact
  // arguments (complete kernel, sharpness, diagonal data) applies.
  std::vector<Effect> effects;
  for (int k = 0; k < 3; ++k) {
    const double angle = 2.0 * 3.14159265358979323846 * k / 3.0;
    Eigen::VectorXcd v(2);
    v << std::cos(angle / 2.0), std::sin(angle / 2.0);
    effects.emplace_back(HermitianOperator((2.0 / 3.0) * (v * v.adjoint())));
  }
  const DiscreteObservable trine(std::move(effects));
  REQUIRE(statistics_kernel_basis(trine).dim_kernel_e == 1);

  const DeterminationVerdict v = is_determined(basis_state(2, 0), trine);
  CHECK(v.status == DeterminationStatus::ProbablyDetermined);
  CHECK(v.certification == CertificationLevel::Heuristic);
  CHECK_FALSE(v.witness.has_value());

  // The maximally mixed state under the same POVM does have a witness.
  const DensityState mixed = maximally_mixed(2);
  const DeterminationVerdict vm = is_determined(mixed, trine);
  CHECK(vm.status == DeterminationStatus::NotDetermined);
}

TEST_CASE("verdicts are reproducible under a fixed seed") {
  std::mt19937_64 g(57);
  const DiscreteObservable e = random_observable(3, 3, g);
  const DensityState t = random_density(3, g);
  const DeterminationVerdict v1 = is_determined(t, e, 123);
  const DeterminationVerdict v2 = is_determined(t, e, 123);
  CHECK(v1.status == v2.status);
  CHECK(v1.method == v2.method);
  if (v1.witness && v2.witness) {
    CHECK(max_abs_entry(v1.witness->matrix() - v2.witness->matrix()) == 0.0);
  }
}
