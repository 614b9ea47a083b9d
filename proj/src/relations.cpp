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

#include "povm/relations.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace povm {

std::string to_string(RelationKind k) {
  switch (k) {
    case RelationKind::Fuzzy: return "fuzzy";
    case RelationKind::CoarseGraining: return "coarse";
    case RelationKind::Informational: return "info";
    case RelationKind::Determination: return "det";
  }
  return "?";
}

RelationKind parse_relation_kind(const std::string& name) {
  if (name == "fuzzy") return RelationKind::Fuzzy;
  if (name == "coarse") return RelationKind::CoarseGraining;
  if (name == "info") return RelationKind::Informational;
  if (name == "det") return RelationKind::Determination;
  throw FormatError("unknown relation '" + name + "' (fuzzy|coarse|info|det)");
}

bool distinguishes(const DiscreteObservable& e, const DensityState& t1,
                   const DensityState& t2) {
  if (e.dim() != t1.dim() || t1.dim() != t2.dim()) {
    throw DimensionError("dimension mismatch in distinguishes");
  }
  return linf_distance(statistics_map(e, t1), statistics_map(e, t2)) > tols().prob;
}

//=========================================================================
// Informational order
//=========================================================================

RelationVerdict leq_informational(const DiscreteObservable& f, const DiscreteObservable& e) {
  if (f.dim() != e.dim()) throw DimensionError("observables live on different spaces");
  const int d = e.dim();

  const Eigen::MatrixXd ker_e = statistics_kernel_coords(e);
  const Eigen::MatrixXd ker_f = statistics_kernel_coords(f);

  RelationVerdict v;
  v.kind = RelationKind::Informational;

  // F below E exactly when ker(E) is contained in ker(F): any state pair E
  // cannot separate is a difference in ker(E), which then lies in ker(F).
  double worst = 0.0;
  int worst_col = -1;
  for (int c = 0; c < ker_e.cols(); ++c) {
    Eigen::VectorXd residual = ker_e.col(c);
    if (ker_f.cols() > 0) residual -= ker_f * (ker_f.transpose() * ker_e.col(c));
    const double norm = residual.norm();
    if (norm > worst) {
      worst = norm;
      worst_col = c;
    }
  }

  if (worst <= tols().ker) {
    v.holds = true;
    KernelBasisReport cert;
    cert.dim_kernel_e = static_cast<int>(ker_e.cols());
    cert.dim_kernel_f = static_cast<int>(ker_f.cols());
    cert.inclusion_residual = worst;
    cert.basis_e.reserve(static_cast<size_t>(ker_e.cols()));
    for (int c = 0; c < ker_e.cols(); ++c) {
      cert.basis_e.emplace_back(hs_coords_to_matrix(ker_e.col(c), d));
    }
    v.certificate = std::move(cert);
    std::ostringstream note;
    note << "null-space inclusion: dim ker = " << ker_e.cols() << " (E) vs " << ker_f.cols()
         << " (F), residual " << worst;
    v.note = note.str();
    return v;
  }

  // Witness pair: mix the violating direction into the maximally mixed
  // state with a margin that keeps both mixtures positive.
  const ComplexMatrix h = hs_coords_to_matrix(ker_e.col(worst_col), d);
  const double c = 0.9 / (static_cast<double>(d) * operator_norm(HermitianOperator(h)));
  const ComplexMatrix center = ComplexMatrix::Identity(d, d) / static_cast<double>(d);
  WitnessStates ws{DensityState(HermitianOperator(center + c * h)),
                   DensityState(HermitianOperator(center - c * h)), 0};

  const ProbabilityVector pf1 = statistics_map(f, ws.t1);
  const ProbabilityVector pf2 = statistics_map(f, ws.t2);
  double best = 0.0;
  for (int k = 0; k < pf1.size(); ++k) {
    const double diff = std::abs(pf1[k] - pf2[k]);
    if (diff > best) {
      best = diff;
      ws.distinguishing_outcome = k;
    }
  }
  if (best <= tols().prob ||
      linf_distance(statistics_map(e, ws.t1), statistics_map(e, ws.t2)) > tols().prob) {
    throw InternalError("informational witness failed its own certificate check");
  }

  v.holds = false;
  std::ostringstream note;
  note << "states built from a statistics-null direction of E separate F at outcome "
       << f.label(ws.distinguishing_outcome) << " by " << best;
  v.note = note.str();
  v.certificate = std::move(ws);
  return v;
}

//=========================================================================
// Fuzzy / coarse-graining order
//=========================================================================

RelationVerdict leq_fuzzy(const DiscreteObservable& f, const DiscreteObservable& e) {
  if (f.dim() != e.dim()) throw DimensionError("observables live on different spaces");

  const LpOutcome out = solve_feasibility(encode_fuzzy_instance(f, e));
  RelationVerdict v;
  v.kind = RelationKind::Fuzzy;
  if (out.status == LpStatus::Feasible) {
    StochasticKernel nu = kernel_from_witness(out.witness, e.outcomes(), f.outcomes());
    const double residual = kernel_residual(f, e, nu);
    if (residual > tols().lp) {
      throw InternalError("fuzzy certificate exceeds the lp tolerance");
    }
    v.holds = true;
    std::ostringstream note;
    note << "post-processing kernel found; reconstruction residual " << residual;
    v.note = note.str();
    v.certificate = std::move(nu);
  } else {
    v.holds = false;
    v.infeasibility_gap = out.infeasibility_gap;
    std::ostringstream note;
    note << "no row-stochastic kernel exists; phase-one gap " << out.infeasibility_gap;
    v.note = note.str();
  }
  return v;
}

RelationVerdict leq_coarse(const DiscreteObservable& f, const DiscreteObservable& e) {
  RelationVerdict v = leq_fuzzy(f, e);
  v.kind = RelationKind::CoarseGraining;
  v.note += "; on finite outcome sets coarse-graining coincides with the fuzzy relation";
  return v;
}

//=========================================================================
// Determination order (probe-restricted)
//=========================================================================

RelationVerdict leq_determination(const DiscreteObservable& f, const DiscreteObservable& e,
                                  const std::vector<DensityState>& probes,
                                  std::uint64_t seed) {
  if (f.dim() != e.dim()) throw DimensionError("observables live on different spaces");
  if (probes.empty()) throw EmptyProbeSetError("determination comparison needs probes");

  RelationVerdict v;
  v.kind = RelationKind::Determination;
  v.holds = true;
  std::ostringstream note;
  note << "probe-restricted semantics: membership checked on " << probes.size()
       << " probe state(s) only; probe verdicts (F|E):";
  for (size_t i = 0; i < probes.size(); ++i) {
    const DeterminationVerdict vf = is_determined(probes[i], f, seed);
    const DeterminationVerdict ve = is_determined(probes[i], e, seed);
    const bool in_f = vf.status == DeterminationStatus::Determined;
    const bool out_e = ve.status == DeterminationStatus::NotDetermined;
    if (in_f && out_e) v.holds = false;
    note << " #" << i << " " << to_string(vf.status) << "/" << to_string(vf.certification)
         << "|" << to_string(ve.status) << "/" << to_string(ve.certification);
  }
  v.note = note.str();
  return v;
}

RelationVerdict leq(const DiscreteObservable& f, const DiscreteObservable& e, RelationKind kind,
                    const std::vector<DensityState>& probes, std::uint64_t seed) {
  switch (kind) {
    case RelationKind::Fuzzy: return leq_fuzzy(f, e);
    case RelationKind::CoarseGraining: return leq_coarse(f, e);
    case RelationKind::Informational: return leq_informational(f, e);
    case RelationKind::Determination: return leq_determination(f, e, probes, seed);
  }
  throw DomainError("unknown relation kind");
}

bool equivalence(const DiscreteObservable& f, const DiscreteObservable& e, RelationKind kind,
                 const std::vector<DensityState>& probes, std::uint64_t seed) {
  return leq(f, e, kind, probes, seed).holds && leq(e, f, kind, probes, seed).holds;
}

//=========================================================================
// Classification
//=========================================================================

std::optional<ProbabilityVector> is_trivial(const DiscreteObservable& e) {
  const int d = e.dim();
  std::vector<double> m;
  m.reserve(static_cast<size_t>(e.outcomes()));
  for (int j = 0; j < e.outcomes(); ++j) {
    const ComplexMatrix& ej = e.effect(j).matrix();
    const double mj = ej.trace().real() / static_cast<double>(d);
    if (max_abs_entry(ej - mj * ComplexMatrix::Identity(d, d)) > tols().sum) {
      return std::nullopt;
    }
    m.push_back(mj);
  }
  return ProbabilityVector(std::move(m));
}

bool is_informationally_complete(const DiscreteObservable& e) {
  return statistics_kernel_coords(e).cols() == 0;
}

//=========================================================================
// Hierarchy
//=========================================================================

HierarchyReport check_hierarchy(const DiscreteObservable& f, const DiscreteObservable& e,
                                const std::vector<DensityState>& probes,
                                std::uint64_t seed) {
  HierarchyReport r;
  r.fuzzy = leq_fuzzy(f, e);
  r.coarse = r.fuzzy;  // same decision problem on finite outcome sets
  r.coarse.kind = RelationKind::CoarseGraining;
  r.coarse.note += "; on finite outcome sets coarse-graining coincides with the fuzzy relation";
  r.informational = leq_informational(f, e);
  r.determination = leq_determination(f, e, probes, seed);
  r.violation = (r.fuzzy.holds && !r.coarse.holds) ||
                (r.coarse.holds && !r.informational.holds) ||
                (r.informational.holds && !r.determination.holds);
  return r;
}

//=========================================================================
// Catalog poset
//=========================================================================

namespace {

// Iterative Tarjan over the pairwise verdict digraph; components come out
// in reverse topological order, then get renumbered by smallest member.
std::vector<std::vector<int>> strongly_connected_components(
    const std::vector<std::vector<bool>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> index(static_cast<size_t>(n), -1), low(static_cast<size_t>(n), 0);
  std::vector<bool> on_stack(static_cast<size_t>(n), false);
  std::vector<int> stack;
  std::vector<std::vector<int>> components;
  int counter = 0;

  std::function<void(int)> strongconnect = [&](int v) {
    index[static_cast<size_t>(v)] = low[static_cast<size_t>(v)] = counter++;
    stack.push_back(v);
    on_stack[static_cast<size_t>(v)] = true;
    for (int w = 0; w < n; ++w) {
      if (w == v || !adj[static_cast<size_t>(v)][static_cast<size_t>(w)]) continue;
      if (index[static_cast<size_t>(w)] < 0) {
        strongconnect(w);
        low[static_cast<size_t>(v)] = std::min(low[static_cast<size_t>(v)], low[static_cast<size_t>(w)]);
      } else if (on_stack[static_cast<size_t>(w)]) {
        low[static_cast<size_t>(v)] = std::min(low[static_cast<size_t>(v)], index[static_cast<size_t>(w)]);
      }
    }
    if (low[static_cast<size_t>(v)] == index[static_cast<size_t>(v)]) {
      std::vector<int> comp;
      while (true) {
        const int w = stack.back();
        stack.pop_back();
        on_stack[static_cast<size_t>(w)] = false;
        comp.push_back(w);
        if (w == v) break;
      }
      std::sort(comp.begin(), comp.end());
      components.push_back(std::move(comp));
    }
  };

  for (int v = 0; v < n; ++v) {
    if (index[static_cast<size_t>(v)] < 0) strongconnect(v);
  }
  std::sort(components.begin(), components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return components;
}

}  // namespace

std::vector<DensityState> default_probes(const std::vector<DiscreteObservable>& catalog) {
  std::vector<DensityState> probes;
  for (const DiscreteObservable& obs : catalog) {
    for (const Effect& eff : obs.effects()) {
      Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(eff.matrix());
      for (int c = 0; c < es.eigenvectors().cols(); ++c) {
        const Eigen::VectorXcd v = es.eigenvectors().col(c);
        const ComplexMatrix proj = v * v.adjoint();
        bool duplicate = false;
        for (const DensityState& p : probes) {
          if (max_abs_entry(p.matrix() - proj) <= 1e-9) {
            duplicate = true;
            break;
          }
        }
        if (!duplicate) probes.emplace_back(HermitianOperator(proj));
      }
    }
  }
  if (!catalog.empty()) probes.push_back(maximally_mixed(catalog.front().dim()));
  return probes;
}

PosetReport build_poset(const std::vector<DiscreteObservable>& catalog, RelationKind kind,
                        std::vector<std::string> labels,
                        const std::vector<DensityState>& probes, std::uint64_t seed) {
  if (catalog.empty()) throw DomainError("poset needs at least one observable");
  const int n = static_cast<int>(catalog.size());
  for (const DiscreteObservable& obs : catalog) {
    if (obs.dim() != catalog.front().dim()) {
      throw DimensionError("catalog mixes Hilbert dimensions");
    }
  }
  std::vector<DensityState> det_probes = probes;
  if (kind == RelationKind::Determination && det_probes.empty()) {
    det_probes = default_probes(catalog);
  }

  PosetReport report;
  report.kind = kind;
  if (labels.empty()) {
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  }
  if (labels.size() != static_cast<size_t>(n)) {
    throw DimensionError("label count does not match catalog size");
  }
  report.labels = std::move(labels);

  // Pairwise verdicts. The diagonal is true by reflexivity and not
  // re-derived.
  std::vector<std::vector<bool>> below(static_cast<size_t>(n),
                                       std::vector<bool>(static_cast<size_t>(n), false));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      below[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          i == j || leq(catalog[static_cast<size_t>(i)], catalog[static_cast<size_t>(j)], kind,
                        det_probes, seed)
                        .holds;
    }
  }

  report.classes = strongly_connected_components(below);
  const int k = static_cast<int>(report.classes.size());

  report.class_order.assign(static_cast<size_t>(k), std::vector<bool>(static_cast<size_t>(k), false));
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      const int ra = report.classes[static_cast<size_t>(a)].front();
      const int rb = report.classes[static_cast<size_t>(b)].front();
      report.class_order[static_cast<size_t>(a)][static_cast<size_t>(b)] =
          below[static_cast<size_t>(ra)][static_cast<size_t>(rb)];
    }
  }

  // Hasse edges: the transitive reduction of the strict class order.
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      if (a == b || !report.class_order[static_cast<size_t>(a)][static_cast<size_t>(b)]) continue;
      bool covered = false;
      for (int c = 0; c < k && !covered; ++c) {
        if (c == a || c == b) continue;
        covered = report.class_order[static_cast<size_t>(a)][static_cast<size_t>(c)] &&
                  report.class_order[static_cast<size_t>(c)][static_cast<size_t>(b)];
      }
      if (!covered) report.hasse_edges.emplace_back(a, b);
    }
  }
  std::sort(report.hasse_edges.begin(), report.hasse_edges.end());

  for (int a = 0; a < k; ++a) {
    bool maximal = true;
    for (int b = 0; b < k && maximal; ++b) {
      if (a != b && report.class_order[static_cast<size_t>(a)][static_cast<size_t>(b)]) {
        maximal = false;
      }
    }
    if (maximal) report.maximal_classes.push_back(a);
  }
  return report;
}

}  // namespace povm
