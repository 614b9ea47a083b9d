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

// Command-line surface: construct case-study observables into JSON
// catalogs, decide the four relations with printed certificates, render
// catalog posets as DOT, and validate catalog files.
//
// Exit codes: 0 success / relation holds, 2 usage or I/O error, 3 relation
// does not hold, 4 catalog schema violation, 5 catalog invariant or
// internal tolerance violation.

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "povm/catalog.hpp"
#include "povm/localization.hpp"
#include "povm/photon.hpp"
#include "povm/relations.hpp"
#include "povm/yes_no.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace povm;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitRelationFails = 3;
constexpr int kExitSchema = 4;
constexpr int kExitInvariant = 5;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::vector<double> parse_reals(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t pos = 0;
      out.push_back(std::stod(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw FormatError("cannot parse number '" + item + "'");
    }
  }
  if (out.empty()) throw FormatError("empty number list");
  return out;
}

json matrix_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

void print_matrix(const ComplexMatrix& m, const std::string& indent) {
  for (int r = 0; r < m.rows(); ++r) {
    std::cout << indent;
    for (int c = 0; c < m.cols(); ++c) {
      std::cout << "(" << fmt(m(r, c).real()) << "," << fmt(m(r, c).imag()) << ") ";
    }
    std::cout << "\n";
  }
}

json verdict_json(const RelationVerdict& v, const std::string& name_f,
                  const std::string& name_e) {
  json out = json::object();
  out["relation"] = to_string(v.kind);
  out["query"] = name_f + " <= " + name_e;
  out["holds"] = v.holds;
  out["note"] = v.note;
  if (const auto* kernel = std::get_if<StochasticKernel>(&v.certificate)) {
    json rows = json::array();
    for (int j = 0; j < kernel->rows(); ++j) {
      json row = json::array();
      for (int k = 0; k < kernel->cols(); ++k) row.push_back((*kernel)(j, k));
      rows.push_back(std::move(row));
    }
    out["kernel"] = std::move(rows);
  } else if (const auto* ws = std::get_if<WitnessStates>(&v.certificate)) {
    out["witness_t1"] = matrix_json(ws->t1.matrix());
    out["witness_t2"] = matrix_json(ws->t2.matrix());
    out["distinguishing_outcome"] = ws->distinguishing_outcome;
  } else if (const auto* kb = std::get_if<KernelBasisReport>(&v.certificate)) {
    out["dim_kernel_e"] = kb->dim_kernel_e;
    out["dim_kernel_f"] = kb->dim_kernel_f;
    out["inclusion_residual"] = kb->inclusion_residual;
  }
  if (!v.holds && (v.kind == RelationKind::Fuzzy || v.kind == RelationKind::CoarseGraining)) {
    out["infeasibility_gap"] = v.infeasibility_gap;
  }
  return out;
}

void print_verdict(const RelationVerdict& v, const std::string& name_f,
                   const std::string& name_e) {
  std::cout << to_string(v.kind) << ": " << name_f << " <= " << name_e << " "
            << (v.holds ? "holds" : "does not hold") << "\n";
  std::cout << "  note: " << v.note << "\n";
  if (const auto* kernel = std::get_if<StochasticKernel>(&v.certificate)) {
    std::cout << "  certificate: stochastic kernel (" << kernel->rows() << "x" << kernel->cols()
              << "), rows = outcomes of " << name_e << "\n";
    for (int j = 0; j < kernel->rows(); ++j) {
      std::cout << "    ";
      for (int k = 0; k < kernel->cols(); ++k) std::cout << fmt((*kernel)(j, k)) << " ";
      std::cout << "\n";
    }
  } else if (const auto* ws = std::get_if<WitnessStates>(&v.certificate)) {
    std::cout << "  certificate: state pair separated by " << name_f << " at outcome "
              << ws->distinguishing_outcome << " but not by " << name_e << "\n";
    std::cout << "    T1:\n";
    print_matrix(ws->t1.matrix(), "      ");
    std::cout << "    T2:\n";
    print_matrix(ws->t2.matrix(), "      ");
  } else if (const auto* kb = std::get_if<KernelBasisReport>(&v.certificate)) {
    std::cout << "  certificate: null-space inclusion, dim ker(" << name_e
              << ") = " << kb->dim_kernel_e << ", dim ker(" << name_f
              << ") = " << kb->dim_kernel_f << ", residual " << fmt(kb->inclusion_residual)
              << "\n";
  }
  if (!v.holds && (v.kind == RelationKind::Fuzzy || v.kind == RelationKind::CoarseGraining)) {
    std::cout << "  infeasibility gap: " << fmt(v.infeasibility_gap) << "\n";
  }
}

struct Common {
  std::string catalog_path;
  std::string out_path;
  std::uint64_t seed = kDefaultSeed;
  bool seed_given = false;
  std::string profile = "default";
};

void add_common(CLI::App* cmd, Common& common, bool catalog_required) {
  auto* cat = cmd->add_option("--catalog", common.catalog_path, "catalog JSON file");
  if (catalog_required) cat->required();
  cmd->add_option("--out", common.out_path, "output file");
  cmd->add_option("--seed", common.seed, "seed for determination searches")
      ->each([&common](const std::string&) { common.seed_given = true; });
  cmd->add_option("--tolerance-profile", common.profile,
                  "tolerance profile: default|strict|loose");
}

void apply_common(const Common& common, std::uint64_t& seed) {
  set_tolerance_profile(parse_tolerance_profile(common.profile));
  seed = kDefaultSeed;
  if (const char* env = std::getenv("POVM_ORDER_SEED")) {
    seed = std::strtoull(env, nullptr, 10);
  }
  if (common.seed_given) seed = common.seed;
}

std::vector<DensityState> resolve_probes(const CatalogFile& catalog,
                                         const std::string& probe_csv) {
  std::vector<DensityState> probes;
  if (!probe_csv.empty()) {
    std::stringstream ss(probe_csv);
    std::string name;
    while (std::getline(ss, name, ',')) {
      bool found = false;
      for (const CatalogProbe& p : catalog.probes) {
        if (p.name == name) {
          probes.push_back(p.state);
          found = true;
          break;
        }
      }
      if (!found) throw FormatError("unknown probe '" + name + "'");
    }
    return probes;
  }
  if (!catalog.probes.empty()) {
    for (const CatalogProbe& p : catalog.probes) probes.push_back(p.state);
    return probes;
  }
  std::vector<DiscreteObservable> all;
  for (const CatalogEntry& e : catalog.observables) all.push_back(e.observable);
  return default_probes(all);
}

//-------------------------------------------------------------------------
// construct
//-------------------------------------------------------------------------

struct ConstructArgs {
  std::string kind;
  std::string name;
  double eps = 0.5;
  int dim = 12;
  int period = 6;
  bool period_given = false;
  std::string diag;
  std::string probs;
  std::string rho;
};

int run_construct(const Common& common, const ConstructArgs& args) {
  std::optional<DiscreteObservable> obs;
  std::string default_name;

  if (args.kind == "photon") {
    obs = make_photon_counting(args.eps, args.dim).observable;
    default_name = "photon-" + fmt(args.eps) + "-d" + std::to_string(args.dim);
  } else if (args.kind == "number") {
    obs = make_number_observable(args.dim);
    default_name = "number-d" + std::to_string(args.dim);
  } else if (args.kind == "trivial") {
    if (args.probs.empty()) throw FormatError("trivial needs --probs");
    obs = trivial_observable(parse_reals(args.probs), args.dim);
    default_name = "trivial-d" + std::to_string(args.dim);
  } else if (args.kind == "yes-no") {
    if (args.diag.empty()) throw FormatError("yes-no needs --diag (effect eigenvalues)");
    const std::vector<double> diag = parse_reals(args.diag);
    ComplexMatrix a = ComplexMatrix::Zero(static_cast<int>(diag.size()),
                                          static_cast<int>(diag.size()));
    for (size_t i = 0; i < diag.size(); ++i) a(static_cast<int>(i), static_cast<int>(i)) = diag[i];
    obs = make_yes_no(Effect(HermitianOperator(std::move(a)))).observable;
    default_name = "yes-no-d" + std::to_string(diag.size());
  } else if (args.kind == "cyclic-position") {
    obs = make_cyclic_position(args.period).observable;
    default_name = "position-L" + std::to_string(args.period);
  } else if (args.kind == "smeared-position") {
    if (args.rho.empty()) throw FormatError("smeared-position needs --rho");
    const std::vector<double> rho = parse_reals(args.rho);
    if (args.period_given && args.period != static_cast<int>(rho.size())) {
      throw FormatError("--L disagrees with the length of --rho");
    }
    obs = smear_cyclic(make_cyclic_position(static_cast<int>(rho.size())),
                       ProbabilityVector(rho))
              .observable;
    default_name = "smeared-L" + std::to_string(rho.size());
  } else {
    throw FormatError("unknown construct kind '" + args.kind +
                      "' (yes-no|photon|number|trivial|cyclic-position|smeared-position)");
  }

  CatalogFile catalog;
  if (!common.catalog_path.empty()) {
    catalog = parse_catalog(common.catalog_path);
    if (catalog.hilbert_dim != obs->dim()) {
      throw FormatError("constructed observable has dimension " + std::to_string(obs->dim()) +
                        " but the catalog uses " + std::to_string(catalog.hilbert_dim));
    }
  } else {
    catalog.hilbert_dim = obs->dim();
  }

  const std::string name = args.name.empty() ? default_name : args.name;
  if (catalog.find(name)) throw FormatError("catalog already has an observable '" + name + "'");
  catalog.observables.push_back(CatalogEntry{name, *obs});

  const std::string out =
      !common.out_path.empty() ? common.out_path : common.catalog_path;
  if (out.empty()) throw FormatError("construct needs --out (or --catalog to extend in place)");
  write_catalog(catalog, out);
  std::cout << "added '" << name << "' (" << obs->outcomes() << " outcomes, dim "
            << obs->dim() << ") to " << out << "\n";
  return kExitOk;
}

//-------------------------------------------------------------------------
// check
//-------------------------------------------------------------------------

int run_check(const Common& common, const std::string& name_f, const std::string& name_e,
              const std::string& relation, const std::string& probe_csv, bool emit_json,
              std::uint64_t seed) {
  const CatalogFile catalog = parse_catalog(common.catalog_path);
  const CatalogEntry* f = catalog.find(name_f);
  const CatalogEntry* e = catalog.find(name_e);
  if (!f) throw FormatError("unknown observable '" + name_f + "'");
  if (!e) throw FormatError("unknown observable '" + name_e + "'");

  json machine = json::object();
  int exit_code = kExitOk;

  if (relation == "all") {
    const std::vector<DensityState> probes = resolve_probes(catalog, probe_csv);
    const HierarchyReport report = check_hierarchy(f->observable, e->observable, probes, seed);
    for (const RelationVerdict* v :
         {&report.fuzzy, &report.coarse, &report.informational, &report.determination}) {
      print_verdict(*v, name_f, name_e);
    }
    std::cout << "hierarchy violation: " << (report.violation ? "YES (defect!)" : "none")
              << "\n";
    machine["relation"] = "all";
    machine["query"] = name_f + " <= " + name_e;
    machine["fuzzy"] = report.fuzzy.holds;
    machine["coarse"] = report.coarse.holds;
    machine["info"] = report.informational.holds;
    machine["det"] = report.determination.holds;
    machine["violation"] = report.violation;
    exit_code = report.violation ? kExitInvariant : kExitOk;
  } else {
    const RelationKind kind = parse_relation_kind(relation);
    std::vector<DensityState> probes;
    if (kind == RelationKind::Determination) probes = resolve_probes(catalog, probe_csv);
    const RelationVerdict v = leq(f->observable, e->observable, kind, probes, seed);
    print_verdict(v, name_f, name_e);
    machine = verdict_json(v, name_f, name_e);
    exit_code = v.holds ? kExitOk : kExitRelationFails;
  }

  if (emit_json) std::cout << machine.dump(2) << "\n";
  if (!common.out_path.empty()) {
    std::ofstream out(common.out_path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + common.out_path + "' for writing");
    out << machine.dump(2) << "\n";
  }
  return exit_code;
}

//-------------------------------------------------------------------------
// poset
//-------------------------------------------------------------------------

int run_poset(const Common& common, const std::string& relation, const std::string& out_dot,
              const std::string& probe_csv, bool emit_json, std::uint64_t seed) {
  const CatalogFile catalog = parse_catalog(common.catalog_path);
  if (catalog.observables.empty()) throw FormatError("catalog has no observables");
  const RelationKind kind = parse_relation_kind(relation);

  std::vector<DiscreteObservable> observables;
  std::vector<std::string> labels;
  for (const CatalogEntry& entry : catalog.observables) {
    observables.push_back(entry.observable);
    labels.push_back(entry.name);
  }
  std::vector<DensityState> probes;
  if (kind == RelationKind::Determination) probes = resolve_probes(catalog, probe_csv);

  const PosetReport report = build_poset(observables, kind, labels, probes, seed);

  std::cout << "poset under '" << relation << "': " << report.classes.size()
            << " equivalence class(es)\n";
  for (size_t c = 0; c < report.classes.size(); ++c) {
    std::cout << "  class " << c << ": ";
    for (size_t i = 0; i < report.classes[c].size(); ++i) {
      if (i > 0) std::cout << ", ";
      std::cout << report.labels[static_cast<size_t>(report.classes[c][i])];
    }
    const bool maximal =
        std::find(report.maximal_classes.begin(), report.maximal_classes.end(),
                  static_cast<int>(c)) != report.maximal_classes.end();
    if (maximal) std::cout << "  [optimal]";
    std::cout << "\n";
  }
  for (const auto& [lo, hi] : report.hasse_edges) {
    std::cout << "  edge: class " << lo << " -> class " << hi << "\n";
  }

  const std::string dot = poset_to_dot(report);
  const std::string dot_path = !out_dot.empty() ? out_dot : common.out_path;
  if (!dot_path.empty()) {
    std::ofstream out(dot_path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + dot_path + "' for writing");
    out << dot;
    std::cout << "DOT written to " << dot_path << "\n";
  }

  if (emit_json) {
    json machine = json::object();
    machine["relation"] = relation;
    machine["classes"] = report.classes;
    machine["hasse_edges"] = report.hasse_edges;
    machine["maximal_classes"] = report.maximal_classes;
    machine["labels"] = report.labels;
    std::cout << machine.dump(2) << "\n";
  }
  return kExitOk;
}

//-------------------------------------------------------------------------
// validate
//-------------------------------------------------------------------------

int run_validate(const Common& common) {
  const CatalogFile catalog = parse_catalog(common.catalog_path);
  std::cout << "catalog OK: version " << catalog.version << ", dim " << catalog.hilbert_dim
            << ", " << catalog.observables.size() << " observable(s), " << catalog.probes.size()
            << " probe(s)\n";
  for (const CatalogEntry& e : catalog.observables) {
    std::cout << "  " << e.name << ": " << e.observable.outcomes() << " outcomes\n";
  }
  if (!common.out_path.empty()) write_catalog(catalog, common.out_path);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"povm-order: post-processing order between finite-dimensional observables"};
  app.require_subcommand(1);

  Common c_construct, c_check, c_poset, c_validate;
  ConstructArgs construct_args;
  std::string check_f, check_e, check_relation = "fuzzy", check_probes;
  bool check_json = false;
  std::string poset_relation = "fuzzy", poset_dot, poset_probes;
  bool poset_json = false;

  CLI::App* cmd_construct =
      app.add_subcommand("construct", "build a case-study observable into a catalog");
  cmd_construct->add_option("kind", construct_args.kind,
                            "yes-no|photon|number|trivial|cyclic-position|smeared-position")
      ->required();
  cmd_construct->add_option("--name", construct_args.name, "observable name");
  cmd_construct->add_option("--eps", construct_args.eps, "detector efficiency");
  cmd_construct->add_option("--dim", construct_args.dim, "Hilbert / truncation dimension");
  cmd_construct->add_option("--L", construct_args.period, "cyclic period")
      ->each([&construct_args](const std::string&) { construct_args.period_given = true; });
  cmd_construct->add_option("--diag", construct_args.diag, "effect eigenvalues (yes-no)");
  cmd_construct->add_option("--probs", construct_args.probs, "trivial outcome probabilities");
  cmd_construct->add_option("--rho", construct_args.rho, "smearing measure");
  add_common(cmd_construct, c_construct, false);

  CLI::App* cmd_check = app.add_subcommand("check", "decide a relation between two observables");
  cmd_check->add_option("F", check_f, "candidate lower observable")->required();
  cmd_check->add_option("E", check_e, "candidate upper observable")->required();
  cmd_check->add_option("--relation", check_relation, "fuzzy|coarse|info|det|all");
  cmd_check->add_option("--probes", check_probes, "comma-separated probe names (det)");
  cmd_check->add_flag("--json", check_json, "append a machine-readable block");
  add_common(cmd_check, c_check, true);

  CLI::App* cmd_poset = app.add_subcommand("poset", "order a whole catalog");
  cmd_poset->add_option("--relation", poset_relation, "fuzzy|coarse|info|det");
  cmd_poset->add_option("--out-dot", poset_dot, "DOT output path");
  cmd_poset->add_option("--probes", poset_probes, "comma-separated probe names (det)");
  cmd_poset->add_flag("--json", poset_json, "append a machine-readable block");
  add_common(cmd_poset, c_poset, true);

  CLI::App* cmd_validate = app.add_subcommand("validate", "parse and validate a catalog");
  add_common(cmd_validate, c_validate, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    std::uint64_t seed = kDefaultSeed;
    if (cmd_construct->parsed()) {
      apply_common(c_construct, seed);
      return run_construct(c_construct, construct_args);
    }
    if (cmd_check->parsed()) {
      apply_common(c_check, seed);
      return run_check(c_check, check_f, check_e, check_relation, check_probes, check_json,
                       seed);
    }
    if (cmd_poset->parsed()) {
      apply_common(c_poset, seed);
      return run_poset(c_poset, poset_relation, poset_dot, poset_probes, poset_json, seed);
    }
    if (cmd_validate->parsed()) {
      apply_common(c_validate, seed);
      return run_validate(c_validate);
    }
    return kExitUsage;
  } catch (const SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSchema;
  } catch (const CatalogInvariantError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
