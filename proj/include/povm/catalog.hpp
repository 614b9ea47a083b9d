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

#include <string>
#include <vector>

#include "povm/observable.hpp"
#include "povm/relations.hpp"

namespace povm {

// Catalog I/O errors, each mapped to a distinct CLI exit code.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};
class SchemaError : public std::runtime_error {
 public:
  explicit SchemaError(const std::string& msg) : std::runtime_error(msg) {}
};
// Well-formed file whose numbers violate an observable/state invariant;
// the message names the entry, the invariant, and the residual.
class CatalogInvariantError : public std::runtime_error {
 public:
  explicit CatalogInvariantError(const std::string& msg) : std::runtime_error(msg) {}
};

struct CatalogEntry {
  std::string name;
  DiscreteObservable observable;
};

struct CatalogProbe {
  std::string name;
  DensityState state;
};

// On-disk catalog: a version tag, one Hilbert dimension, named observables
// and optional probe states. JSON; complex entries as [re, im] pairs,
// matrices row-major, diagonal real effects in a shorthand form.
struct CatalogFile {
  std::string version = "povm-catalog/1";
  int hilbert_dim = 0;
  std::vector<CatalogEntry> observables;
  std::vector<CatalogProbe> probes;

  const CatalogEntry* find(const std::string& name) const;
};

CatalogFile parse_catalog(const std::string& path);
CatalogFile parse_catalog_text(const std::string& text);

std::string catalog_to_text(const CatalogFile& catalog);
void write_catalog(const CatalogFile& catalog, const std::string& path);

// Deterministic DOT rendering of a poset report: one node per equivalence
// class (maximal classes marked "optimal"), edges from lower to higher.
std::string poset_to_dot(const PosetReport& report);

}  // namespace povm
