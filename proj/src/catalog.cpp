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

#include "povm/catalog.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace povm {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kVersion = "povm-catalog/1";

ComplexMatrix matrix_from_json(const json& j, int dim, const std::string& where) {
  if (!j.is_array() || j.size() != static_cast<size_t>(dim)) {
    throw SchemaError(where + ": expected " + std::to_string(dim) + " matrix rows");
  }
  ComplexMatrix m(dim, dim);
  for (int r = 0; r < dim; ++r) {
    const json& row = j[static_cast<size_t>(r)];
    if (!row.is_array() || row.size() != static_cast<size_t>(dim)) {
      throw SchemaError(where + ": row " + std::to_string(r) + " has wrong length");
    }
    for (int c = 0; c < dim; ++c) {
      const json& entry = row[static_cast<size_t>(c)];
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
          !entry[1].is_number()) {
        throw SchemaError(where + ": entry (" + std::to_string(r) + "," + std::to_string(c) +
                          ") is not a [re, im] pair");
      }
      m(r, c) = Complex(entry[0].get<double>(), entry[1].get<double>());
    }
  }
  return m;
}

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) {
      row.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix effect_matrix_from_json(const json& j, int dim, const std::string& where) {
  if (!j.is_object()) throw SchemaError(where + ": effect must be an object");
  const bool has_matrix = j.contains("matrix");
  const bool has_diagonal = j.contains("diagonal");
  if (has_matrix == has_diagonal) {
    throw SchemaError(where + ": effect needs exactly one of 'matrix' or 'diagonal'");
  }
  if (has_matrix) return matrix_from_json(j.at("matrix"), dim, where);
  const json& diag = j.at("diagonal");
  if (!diag.is_array() || diag.size() != static_cast<size_t>(dim)) {
    throw SchemaError(where + ": diagonal needs " + std::to_string(dim) + " entries");
  }
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) {
    if (!diag[static_cast<size_t>(i)].is_number()) {
      throw SchemaError(where + ": diagonal entries must be real numbers");
    }
    m(i, i) = diag[static_cast<size_t>(i)].get<double>();
  }
  return m;
}

bool exactly_diagonal_real(const ComplexMatrix& m) {
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      if (r == c ? m(r, c).imag() != 0.0 : m(r, c) != Complex(0.0, 0.0)) return false;
    }
  }
  return true;
}

json effect_to_json(const ComplexMatrix& m) {
  json out = json::object();
  if (exactly_diagonal_real(m)) {
    json diag = json::array();
    for (int i = 0; i < m.rows(); ++i) diag.push_back(m(i, i).real());
    out["diagonal"] = std::move(diag);
  } else {
    out["matrix"] = matrix_to_json(m);
  }
  return out;
}

}  // namespace

const CatalogEntry* CatalogFile::find(const std::string& name) const {
  for (const CatalogEntry& e : observables) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

CatalogFile parse_catalog_text(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& err) {
    throw SchemaError(std::string("catalog is not valid JSON: ") + err.what());
  }
  if (!root.is_object()) throw SchemaError("catalog root must be an object");
  if (!root.contains("version") || !root["version"].is_string()) {
    throw SchemaError("catalog needs a string 'version'");
  }
  CatalogFile catalog;
  catalog.version = root["version"].get<std::string>();
  if (catalog.version != kVersion) {
    throw SchemaError("unsupported catalog version '" + catalog.version + "'");
  }
  if (!root.contains("hilbert_dim") || !root["hilbert_dim"].is_number_integer()) {
    throw SchemaError("catalog needs an integer 'hilbert_dim'");
  }
  catalog.hilbert_dim = root["hilbert_dim"].get<int>();
  if (catalog.hilbert_dim < 1) throw SchemaError("hilbert_dim must be positive");
  if (!root.contains("observables") || !root["observables"].is_array()) {
    throw SchemaError("catalog needs an 'observables' array");
  }

  std::set<std::string> seen;
  for (const json& jobs : root["observables"]) {
    if (!jobs.is_object() || !jobs.contains("name") || !jobs["name"].is_string()) {
      throw SchemaError("each observable needs a string 'name'");
    }
    const std::string name = jobs["name"].get<std::string>();
    if (!seen.insert(name).second) throw SchemaError("duplicate observable name '" + name + "'");
    if (!jobs.contains("effects") || !jobs["effects"].is_array() || jobs["effects"].empty()) {
      throw SchemaError("observable '" + name + "' needs a nonempty 'effects' array");
    }
    std::vector<std::string> labels;
    if (jobs.contains("labels")) {
      if (!jobs["labels"].is_array()) throw SchemaError("'labels' must be an array");
      for (const json& l : jobs["labels"]) {
        if (!l.is_string()) throw SchemaError("labels must be strings");
        labels.push_back(l.get<std::string>());
      }
      if (labels.size() != jobs["effects"].size()) {
        throw SchemaError("observable '" + name + "': label count differs from effect count");
      }
    }
    std::vector<Effect> effects;
    int idx = 0;
    for (const json& je : jobs["effects"]) {
      const std::string where = "observable '" + name + "' effect " + std::to_string(idx);
      try {
        effects.emplace_back(
            HermitianOperator(effect_matrix_from_json(je, catalog.hilbert_dim, where)));
      } catch (const DomainError& err) {
        throw CatalogInvariantError(where + ": " + err.what());
      }
      ++idx;
    }
    try {
      catalog.observables.push_back(
          CatalogEntry{name, DiscreteObservable(std::move(effects), std::move(labels))});
    } catch (const DomainError& err) {
      throw CatalogInvariantError("observable '" + name + "': " + std::string(err.what()));
    } catch (const DimensionError& err) {
      throw CatalogInvariantError("observable '" + name + "': " + std::string(err.what()));
    }
  }

  if (root.contains("probes")) {
    if (!root["probes"].is_array()) throw SchemaError("'probes' must be an array");
    for (const json& jp : root["probes"]) {
      if (!jp.is_object() || !jp.contains("name") || !jp["name"].is_string() ||
          !jp.contains("matrix")) {
        throw SchemaError("each probe needs 'name' and 'matrix'");
      }
      const std::string name = jp["name"].get<std::string>();
      try {
        catalog.probes.push_back(CatalogProbe{
            name, DensityState(HermitianOperator(matrix_from_json(
                      jp["matrix"], catalog.hilbert_dim, "probe '" + name + "'")))});
      } catch (const DomainError& err) {
        throw CatalogInvariantError("probe '" + name + "': " + std::string(err.what()));
      }
    }
  }
  return catalog;
}

CatalogFile parse_catalog(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open catalog file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("read failure on '" + path + "'");
  return parse_catalog_text(buffer.str());
}

std::string catalog_to_text(const CatalogFile& catalog) {
  json root = json::object();
  root["version"] = kVersion;
  root["hilbert_dim"] = catalog.hilbert_dim;
  json observables = json::array();
  for (const CatalogEntry& entry : catalog.observables) {
    json jobs = json::object();
    jobs["name"] = entry.name;
    if (!entry.observable.labels().empty()) jobs["labels"] = entry.observable.labels();
    json effects = json::array();
    for (const Effect& e : entry.observable.effects()) effects.push_back(effect_to_json(e.matrix()));
    jobs["effects"] = std::move(effects);
    observables.push_back(std::move(jobs));
  }
  root["observables"] = std::move(observables);
  if (!catalog.probes.empty()) {
    json probes = json::array();
    for (const CatalogProbe& p : catalog.probes) {
      json jp = json::object();
      jp["name"] = p.name;
      jp["matrix"] = matrix_to_json(p.state.matrix());
      probes.push_back(std::move(jp));
    }
    root["probes"] = std::move(probes);
  }
  return root.dump(2) + "\n";
}

void write_catalog(const CatalogFile& catalog, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << catalog_to_text(catalog);
  if (!out) throw IoError("write failure on '" + path + "'");
}

std::string poset_to_dot(const PosetReport& report) {
  std::ostringstream dot;
  dot << "digraph poset {\n";
  dot << "  rankdir=BT;\n";
  dot << "  node [shape=box];\n";
  for (size_t c = 0; c < report.classes.size(); ++c) {
    dot << "  c" << c << " [label=\"";
    for (size_t i = 0; i < report.classes[c].size(); ++i) {
      if (i > 0) dot << ", ";
      dot << report.labels[static_cast<size_t>(report.classes[c][i])];
    }
    const bool maximal =
        std::find(report.maximal_classes.begin(), report.maximal_classes.end(),
                  static_cast<int>(c)) != report.maximal_classes.end();
    if (maximal) dot << " (optimal)";
    dot << "\"];\n";
  }
  for (const auto& [lo, hi] : report.hasse_edges) {
    dot << "  c" << lo << " -> c" << hi << ";\n";
  }
  dot << "}\n";
  return dot.str();
}

}  // namespace povm
