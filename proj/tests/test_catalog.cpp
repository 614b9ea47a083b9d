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

#include "povm/catalog.hpp"
#include "povm/localization.hpp"
#include "povm/photon.hpp"
#include "povm/yes_no.hpp"
#include "test_support.hpp"

using namespace povm;
using namespace povm_test;

namespace {

CatalogFile three_case_studies() {
  CatalogFile catalog;
  catalog.hilbert_dim = 6;
  catalog.observables.push_back({"photon-0.5", make_photon_counting(0.5, 6).observable});
  ComplexMatrix a = ComplexMatrix::Zero(6, 6);
  a(0, 0) = 1.0;
  a(1, 1) = 0.6;
  catalog.observables.push_back({"yes-no", make_yes_no(Effect(HermitianOperator(a))).observable});
  catalog.observables.push_back({"position", make_cyclic_position(6).observable});
  catalog.probes.push_back({"mixed", maximally_mixed(6)});
  return catalog;
}

}  // namespace

TEST_CASE("round trip is exact") {
  std::mt19937_64 g(91);
  CatalogFile catalog;
  catalog.hilbert_dim = 3;
  catalog.observables.push_back({"generic", random_observable(3, 4, g)});
  catalog.observables.push_back({"diagonal", make_photon_counting(0.37, 3).observable});
  catalog.probes.push_back({"probe", random_density(3, g)});

  const std::string text = catalog_to_text(catalog);
  const CatalogFile parsed = parse_catalog_text(text);
  REQUIRE(parsed.observables.size() == 2);
  REQUIRE(parsed.probes.size() == 1);
  for (size_t i = 0; i < catalog.observables.size(); ++i) {
    const DiscreteObservable& a = catalog.observables[i].observable;
    const DiscreteObservable& b = parsed.observables[i].observable;
    REQUIRE(a.outcomes() == b.outcomes());
    for (int j = 0; j < a.outcomes(); ++j) {
      CHECK(max_abs_entry(a.effect(j).matrix() - b.effect(j).matrix()) == 0.0);
    }
  }
  CHECK(max_abs_entry(catalog.probes[0].state.matrix() - parsed.probes[0].state.matrix()) == 0.0);
  // Serialization is canonical: a second pass is byte-identical.
  CHECK(catalog_to_text(parsed) == text);
}

TEST_CASE("diagonal shorthand is used for diagonal effects") {
  CatalogFile catalog;
  catalog.hilbert_dim = 4;
  catalog.observables.push_back({"photon", make_photon_counting(0.5, 4).observable});
  const std::string text = catalog_to_text(catalog);
  CHECK(text.find("\"diagonal\"") != std::string::npos);
  CHECK(text.find("\"matrix\"") == std::string::npos);
}

TEST_CASE("broken normalization is rejected with a diagnostic") {
  const std::string text = R"({
    "version": "povm-catalog/1",
    "hilbert_dim": 2,
    "observables": [
      {"name": "broken", "effects": [{"diagonal": [0.5, 0.5]}, {"diagonal": [0.49, 0.49]}]}
    ]
  })";
  try {
    parse_catalog_text(text);
    FAIL("expected CatalogInvariantError");
  } catch (const CatalogInvariantError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("broken") != std::string::npos);
    CHECK(msg.find("identity") != std::string::npos);
  }
}

TEST_CASE("schema violations are distinguished from invariant violations") {
  CHECK_THROWS_AS(parse_catalog_text("not json"), SchemaError);
  CHECK_THROWS_AS(parse_catalog_text(R"({"hilbert_dim": 2, "observables": []})"), SchemaError);
  CHECK_THROWS_AS(parse_catalog_text(R"({
    "version": "povm-catalog/1", "hilbert_dim": 2,
    "observables": [{"name": "x", "effects": [{"diagonal": [1.0]}]}]
  })"),
                  SchemaError);
  CHECK_THROWS_AS(parse_catalog_text(R"({
    "version": "povm-catalog/1", "hilbert_dim": 2,
    "observables": [
      {"name": "a", "effects": [{"diagonal": [1.0, 1.0]}]},
      {"name": "a", "effects": [{"diagonal": [1.0, 1.0]}]}
    ]
  })"),
                  SchemaError);
  CHECK_THROWS_AS(parse_catalog("/nonexistent/path/catalog.json"), IoError);
  // Negative effect: schema fine, invariant violated.
  CHECK_THROWS_AS(parse_catalog_text(R"({
    "version": "povm-catalog/1", "hilbert_dim": 2,
    "observables": [
      {"name": "neg", "effects": [{"diagonal": [1.5, 0.5]}, {"diagonal": [-0.5, 0.5]}]}
    ]
  })"),
                  CatalogInvariantError);
}

TEST_CASE("case-study catalog survives the file layer") {
  const CatalogFile catalog = three_case_studies();
  const CatalogFile parsed = parse_catalog_text(catalog_to_text(catalog));
  CHECK(parsed.observables.size() == 3);
  CHECK(parsed.find("photon-0.5") != nullptr);
  CHECK(parsed.find("position") != nullptr);
  CHECK(parsed.find("missing") == nullptr);
}

TEST_CASE("poset DOT output is deterministic and transitively reduced") {
  const int d = 5;
  const std::vector<DiscreteObservable> catalog{
      make_photon_counting(0.2, d).observable, make_photon_counting(0.5, d).observable,
      make_photon_counting(1.0, d).observable};
  const PosetReport r1 = build_poset(catalog, RelationKind::Fuzzy, {"F0.2", "F0.5", "F1.0"});
  const PosetReport r2 = build_poset(catalog, RelationKind::Fuzzy, {"F0.2", "F0.5", "F1.0"});
  const std::string dot1 = poset_to_dot(r1);
  CHECK(dot1 == poset_to_dot(r2));
  // The chain has exactly its two covering edges, no shortcut.
  CHECK(dot1.find("c0 -> c1;") != std::string::npos);
  CHECK(dot1.find("c1 -> c2;") != std::string::npos);
  CHECK(dot1.find("c0 -> c2;") == std::string::npos);
  CHECK(dot1.find("F1.0 (optimal)") != std::string::npos);
}
