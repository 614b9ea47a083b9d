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

#include "povm/determination.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>
#include <random>

#include "povm/kernel_basis.hpp"

namespace povm {

std::string to_string(DeterminationStatus s) {
  switch (s) {
    case DeterminationStatus::Determined: return "determined";
    case DeterminationStatus::NotDetermined: return "not-determined";
    case DeterminationStatus::ProbablyDetermined: return "probably-determined";
  }
  return "?";
}

std::string to_string(CertificationLevel c) {
  return c == CertificationLevel::Exact ? "exact" : "heuristic";
}

namespace {

double operator_norm_mat(const ComplexMatrix& m) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = es.eigenvalues();
  return std::max(std::abs(ev.minCoeff()), std::abs(ev.maxCoeff()));
}

double min_eig_mat(const ComplexMatrix& m) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

// A usable witness has the same statistics as T within the probability
// tolerance, is a valid state, and differs from T by more than the
// distinctness threshold.
std::optional<DensityState> validate_witness(const ComplexMatrix& candidate,
                                             const DensityState& t,
                                             const DiscreteObservable& e) {
  if (operator_norm_mat(candidate - t.matrix()) <= tols().state) return std::nullopt;
  if (min_eig_mat(candidate) < -tols().psd) return std::nullopt;
  DensityState w{HermitianOperator(candidate)};
  if (linf_distance(statistics_map(e, w), statistics_map(e, t)) > tols().prob) {
    return std::nullopt;
  }
  return w;
}

//-------------------------------------------------------------------------
// Sharp (projection-valued) observables
//-------------------------------------------------------------------------

// The determined states of a projection-valued measure are exactly its
// rank-one effects. For everything else one of three constructions yields
// a distinct state with identical statistics:
//   - the pinching sum_j E_j T E_j when T carries cross-block coherences;
//   - reshuffling one block of mass inside a rank >= 2 effect;
//   - adding a coherence between the top eigenvectors of two occupied
//     blocks.
std::optional<DeterminationVerdict> sharp_decision(const DensityState& t,
                                                   const DiscreteObservable& e) {
  const int d = e.dim();
  const int n = e.outcomes();

  for (int j = 0; j < n; ++j) {
    const ComplexMatrix& ej = e.effect(j).matrix();
    const int rank = static_cast<int>(std::lround(ej.trace().real()));
    if (rank == 1 && operator_norm_mat(t.matrix() - ej) <= tols().state) {
      DeterminationVerdict v;
      v.status = DeterminationStatus::Determined;
      v.certification = CertificationLevel::Exact;
      v.method = "sharp observable: state matches the rank-one effect of outcome " +
                 e.label(j);
      return v;
    }
  }

  // Pinching candidate.
  ComplexMatrix pinched = ComplexMatrix::Zero(d, d);
  for (int j = 0; j < n; ++j) {
    pinched += e.effect(j).matrix() * t.matrix() * e.effect(j).matrix();
  }
  if (auto w = validate_witness(pinched, t, e)) {
    DeterminationVerdict v;
    v.status = DeterminationStatus::NotDetermined;
    v.certification = CertificationLevel::Exact;
    v.witness = *w;
    v.method = "sharp observable: pinched state has identical statistics";
    return v;
  }

  // Per-block data: orthonormal range basis U_j, restricted block
  // M_j = U_j* T U_j, its top/bottom eigenpairs.
  struct Block {
    int outcome = 0;
    Eigen::MatrixXcd range;  // d x r_j
    double mass = 0.0;       // tr M_j
    double top_val = 0.0;
    Eigen::VectorXcd top_vec;  // ambient
    double bot_val = 0.0;
    Eigen::VectorXcd bot_vec;  // ambient
    int rank = 0;
  };
  std::vector<Block> blocks;
  for (int j = 0; j < n; ++j) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(e.effect(j).matrix());
    std::vector<int> range_cols;
    for (int i = 0; i < d; ++i) {
      if (es.eigenvalues()(i) > 0.5) range_cols.push_back(i);
    }
    if (range_cols.empty()) continue;
    Block blk;
    blk.outcome = j;
    blk.rank = static_cast<int>(range_cols.size());
    blk.range.resize(d, blk.rank);
    for (int c = 0; c < blk.rank; ++c) blk.range.col(c) = es.eigenvectors().col(range_cols[static_cast<size_t>(c)]);
    const Eigen::MatrixXcd m = blk.range.adjoint() * t.matrix() * blk.range;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> bs(m);
    blk.mass = m.trace().real();
    blk.top_val = bs.eigenvalues()(blk.rank - 1);
    blk.top_vec = blk.range * bs.eigenvectors().col(blk.rank - 1);
    blk.bot_val = bs.eigenvalues()(0);
    blk.bot_vec = blk.range * bs.eigenvectors().col(0);
    blocks.push_back(std::move(blk));
  }

  // Intra-block reshuffle on the heaviest rank >= 2 block.
  const Block* fat = nullptr;
  for (const Block& b : blocks) {
    if (b.rank >= 2 && (!fat || b.mass > fat->mass)) fat = &b;
  }
  if (fat) {
    const Eigen::MatrixXcd mj = fat->range.adjoint() * t.matrix() * fat->range;
    ComplexMatrix candidate = pinched - fat->range * mj * fat->range.adjoint() +
                              fat->mass * (fat->bot_vec * fat->bot_vec.adjoint());
    if (auto w = validate_witness(candidate, t, e)) {
      DeterminationVerdict v;
      v.status = DeterminationStatus::NotDetermined;
      v.certification = CertificationLevel::Exact;
      v.witness = *w;
      v.method = "sharp observable: block mass of outcome " + e.label(fat->outcome) +
                 " redistributed inside a degenerate eigenspace";
      return v;
    }
  }

  // Cross-block coherence between the two heaviest blocks.
  const Block* first = nullptr;
  const Block* second = nullptr;
  for (const Block& b : blocks) {
    if (b.top_val <= 0.0) continue;
    if (!first || b.top_val > first->top_val) {
      second = first;
      first = &b;
    } else if (!second || b.top_val > second->top_val) {
      second = &b;
    }
  }
  if (first && second) {
    const double c = 0.5 * std::sqrt(first->top_val * second->top_val);
    ComplexMatrix candidate = pinched +
                              c * (first->top_vec * second->top_vec.adjoint() +
                                   second->top_vec * first->top_vec.adjoint());
    if (auto w = validate_witness(candidate, t, e)) {
      DeterminationVerdict v;
      v.status = DeterminationStatus::NotDetermined;
      v.certification = CertificationLevel::Exact;
      v.witness = *w;
      v.method = "sharp observable: coherence added between outcomes " +
                 e.label(first->outcome) + " and " + e.label(second->outcome);
      return v;
    }
  }

  return std::nullopt;  // fall through to the general search
}

//-------------------------------------------------------------------------
// Diagonal observables with injective diagonal data
//-------------------------------------------------------------------------

bool diagonal_data_injective(const DiscreteObservable& e) {
  const int d = e.dim();
  const int n = e.outcomes();
  Eigen::MatrixXd data(n, d);
  for (int j = 0; j < n; ++j) {
    for (int m = 0; m < d; ++m) data(j, m) = e.effect(j).matrix()(m, m).real();
  }
  if (n == d) {
    // Triangular with nonzero diagonal is injective exactly, regardless of
    // conditioning.
    bool upper = true, lower = true;
    for (int j = 0; j < d; ++j) {
      if (data(j, j) == 0.0) {
        upper = lower = false;
        break;
      }
      for (int m = 0; m < j; ++m) {
        if (data(j, m) != 0.0) upper = false;
      }
      for (int m = j + 1; m < d; ++m) {
        if (data(j, m) != 0.0) lower = false;
      }
    }
    if (upper || lower) return true;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(data);
  return svd.singularValues().size() >= d && svd.singularValues()(d - 1) > tols().ker;
}

std::optional<DeterminationVerdict> diagonal_decision(const DensityState& t,
                                                      const DiscreteObservable& e) {
  if (!e.is_diagonal()) return std::nullopt;
  if (!diagonal_data_injective(e)) return std::nullopt;
  const int d = e.dim();
  for (int m = 0; m < d; ++m) {
    ComplexMatrix proj = ComplexMatrix::Zero(d, d);
    proj(m, m) = 1.0;
    if (operator_norm_mat(t.matrix() - proj) <= tols().state) {
      DeterminationVerdict v;
      v.status = DeterminationStatus::Determined;
      v.certification = CertificationLevel::Exact;
      v.method =
          "diagonal observable with injective diagonal data: the statistics fix the "
          "diagonal, and a positive matrix whose diagonal is a single basis entry is "
          "that basis projection (level " + std::to_string(m) + ")";
      return v;
    }
  }
  return std::nullopt;
}

//-------------------------------------------------------------------------
// General null-space search
//-------------------------------------------------------------------------

DeterminationVerdict search_decision(const DensityState& t, const DiscreteObservable& e,
                                     const Eigen::MatrixXd& kernel, std::uint64_t seed) {
  const int d = t.dim();
  const int r = static_cast<int>(kernel.cols());

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(t.matrix());
  std::vector<int> null_cols;
  for (int i = 0; i < d; ++i) {
    if (es.eigenvalues()(i) <= tols().psd) null_cols.push_back(i);
  }
  Eigen::MatrixXcd null_basis(d, static_cast<int>(null_cols.size()));
  for (int c = 0; c < null_basis.cols(); ++c) {
    null_basis.col(c) = es.eigenvectors().col(null_cols[static_cast<size_t>(c)]);
  }
  const int nn = static_cast<int>(null_basis.cols());

  std::vector<Eigen::VectorXd> directions;  // coefficients in the kernel basis

  // Toward the maximally mixed state.
  {
    const ComplexMatrix center = ComplexMatrix::Identity(d, d) / static_cast<double>(d);
    Eigen::VectorXd c = kernel.transpose() * hs_coords(center - t.matrix());
    if (c.norm() > 1e-12) directions.push_back(c.normalized());
  }

  // Directions supported on the range of T: null space of c -> P_N H(c).
  if (nn > 0 && r > 0) {
    Eigen::MatrixXd restr(2 * nn * d, r);
    for (int i = 0; i < r; ++i) {
      const ComplexMatrix h = hs_coords_to_matrix(kernel.col(i), d);
      const Eigen::MatrixXcd proj = null_basis.adjoint() * h;  // nn x d
      int row = 0;
      for (int a = 0; a < nn; ++a) {
        for (int b = 0; b < d; ++b) {
          restr(row++, i) = proj(a, b).real();
          restr(row++, i) = proj(a, b).imag();
        }
      }
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(restr, Eigen::ComputeFullV);
    const Eigen::VectorXd& sv = svd.singularValues();
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i) {
      if (sv(i) > 1e-10) ++rank;
    }
    for (int c = rank; c < r; ++c) directions.push_back(svd.matrixV().col(c));
  }

  // All signed basis directions.
  for (int i = 0; i < r; ++i) {
    Eigen::VectorXd c = Eigen::VectorXd::Zero(r);
    c(i) = 1.0;
    directions.push_back(c);
    directions.push_back(-c);
  }

  // Seeded random unit combinations.
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int s = 0; s < 200; ++s) {
    Eigen::VectorXd c(r);
    for (int i = 0; i < r; ++i) c(i) = gauss(rng);
    if (c.norm() > 1e-12) directions.push_back(c.normalized());
  }

  // The line search decides cone membership at a floor just above
  // eigensolver rounding, not at the loose state tolerance: with a floor
  // of -tau_psd, a tangential direction admits drift of order
  // sqrt(tau_psd) ~ 3e-5 past the boundary, which would read as a witness
  // for a state that is exactly determined. With the strict floor such
  // drift stays below sqrt(1e-14) ~ 1e-7, and the acceptance distance
  // below keeps an order of magnitude above it.
  constexpr double kStrictPsdFloor = -1e-14;
  const double min_distance = std::max(tols().state, 1e-6);
  for (const Eigen::VectorXd& c : directions) {
    const ComplexMatrix h = hs_coords_to_matrix(kernel * c, d);

    // A positive step requires H to be positive on the null space of T.
    if (nn > 0) {
      const Eigen::MatrixXcd hnn = null_basis.adjoint() * h * null_basis;
      if (min_eig_mat(hnn) < -1e-11) continue;
    }

    double lo = 0.0, hi = static_cast<double>(d) + 2.0;
    if (min_eig_mat(t.matrix() + hi * h) >= kStrictPsdFloor) {
      lo = hi;
    } else {
      while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        if (min_eig_mat(t.matrix() + mid * h) >= kStrictPsdFloor) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
    }
    const double step = 0.9 * lo;
    if (step <= 0.0) continue;
    if (operator_norm_mat(step * h) <= min_distance) continue;
    if (auto w = validate_witness(t.matrix() + step * h, t, e)) {
      DeterminationVerdict v;
      v.status = DeterminationStatus::NotDetermined;
      v.certification = CertificationLevel::Exact;
      v.witness = *w;
      v.method = "null-space line search: positive step of length " + std::to_string(step) +
                 " along a statistics-preserving direction";
      return v;
    }
  }

  DeterminationVerdict v;
  v.status = DeterminationStatus::ProbablyDetermined;
  v.certification = CertificationLevel::Heuristic;
  v.method = "no statistics-preserving positive perturbation found (" +
             std::to_string(directions.size()) +
             " directions searched); uniqueness not certified";
  return v;
}

}  // namespace

DeterminationVerdict is_determined(const DensityState& t, const DiscreteObservable& e,
                                   std::uint64_t seed) {
  if (t.dim() != e.dim()) throw DimensionError("state and observable dimensions differ");

  const Eigen::MatrixXd kernel = statistics_kernel_coords(e);
  if (kernel.cols() == 0) {
    DeterminationVerdict v;
    v.status = DeterminationStatus::Determined;
    v.certification = CertificationLevel::Exact;
    v.method = "informationally complete: the statistics map is injective on states";
    return v;
  }

  if (e.is_sharp()) {
    if (auto v = sharp_decision(t, e)) return *v;
  }

  if (auto v = diagonal_decision(t, e)) return *v;

  return search_decision(t, e, kernel, seed);
}

std::vector<DeterminationVerdict> determined_probes_report(
    const DiscreteObservable& e, const std::vector<DensityState>& probes, std::uint64_t seed) {
  std::vector<DeterminationVerdict> out;
  out.reserve(probes.size());
  for (const DensityState& t : probes) out.push_back(is_determined(t, e, seed));
  return out;
}

}  // namespace povm
