// Copyright 2026 the lsechain authors
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

#include "lse/population.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include <Eigen/Eigenvalues>

#include "lse/errors.hpp"
#include "lse/tridiag.hpp"

namespace lse {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

Eigen::MatrixXd build_population_generator(const Model& model) {
  const int n = model.n_sites();
  Eigen::MatrixXd gen = Eigen::MatrixXd::Zero(n, n);
  for (int m = 0; m < n; ++m) gen(m, m) = -model.out_rate[m];
  for (int bond = 1; bond < n; ++bond) {
    gen(bond - 1, bond) += model.hop_left[bond - 1];   // n -> n-1
    gen(bond, bond - 1) += model.hop_right[bond - 1];  // n-1 -> n
  }
  return gen;
}

PopulationSector::PopulationSector(const Model& model)
    : model_(model), n_(model.n_sites()) {
  symmetric_ = model.fully_connected();
  diag_ = -model.out_rate;
  offdiag_.resize(std::max(n_ - 1, 0));
  for (int i = 0; i < n_ - 1; ++i) {
    offdiag_[i] = std::sqrt(model.hop_left[i] * model.hop_right[i]);
  }
  if (symmetric_) {
    eigenvalues_ = tridiag_eigenvalues(diag_, offdiag_);
  } else {
    // one-way or missing bonds: dense nonsymmetric route; the spectrum of a
    // birth-death generator is still real
    eigenvalues_ = general_modes()
                       .eigenvalues.real()
                       .reverse();  // descending -> ascending
  }
}

double PopulationSector::gap() const {
  if (n_ < 2) {
    throw InvalidModelError("Liouvillian gap is undefined for a single site");
  }
  return -eigenvalues_[n_ - 2];
}

const Eigen::VectorXd& PopulationSector::steady_log() const {
  if (steady_log_) return *steady_log_;
  const auto& jl = model_.hop_left;
  const auto& jr = model_.hop_right;
  const bool all_left = (n_ == 1) || (jl.size() > 0 && jl.minCoeff() > 0.0);
  const bool all_right = (n_ == 1) || (jr.size() > 0 && jr.minCoeff() > 0.0);
  Eigen::VectorXd log_p(n_);
  if (all_left) {
    // forward detailed balance: ln p_n = sum_{m<=n} ln(J_{m,R}/J_{m,L})
    double acc = 0.0;
    log_p[0] = 0.0;
    for (int m = 1; m < n_; ++m) {
      acc += std::log(jr[m - 1]) - std::log(jl[m - 1]);
      log_p[m] = acc;
    }
  } else if (all_right) {
    // anchored at the right boundary instead
    double acc = 0.0;
    log_p[n_ - 1] = 0.0;
    for (int m = n_ - 1; m >= 1; --m) {
      acc += std::log(jl[m - 1]) - std::log(jr[m - 1]);
      log_p[m - 1] = acc;
    }
  } else {
    throw DisconnectedChainError(
        "steady state is not unique: chain has bonds with no rate in either "
        "direction (or mixed one-way bonds); require all J_L > 0 or all "
        "J_R > 0");
  }
  log_p.array() -= log_sum_exp(log_p);
  steady_log_ = std::move(log_p);
  return *steady_log_;
}

Eigen::VectorXd PopulationSector::steady_probs() const {
  return steady_log().array().exp();
}

const Eigen::VectorXd& PopulationSector::boundary_log_amplitudes() const {
  if (boundary_log_amp_) return *boundary_log_amp_;
  if (!symmetric_) {
    throw ConditioningError(
        "boundary amplitudes need the symmetric form (all bond rates > 0)");
  }
  Eigen::VectorXd lna(n_);
  for (int k = 0; k < n_; ++k) {
    if (n_ == 1) {
      lna[k] = 0.0;
      continue;
    }
    // profile is anchored with u[N-1] = 1, so a_k = 1 / ||u||^2
    const LogModeProfile prof =
        tridiag_mode_profile(diag_, offdiag_, eigenvalues_[k]);
    lna[k] = -prof.norm_log2();
  }
  boundary_log_amp_ = std::move(lna);
  return *boundary_log_amp_;
}

double PopulationSector::boundary_deviation_log(double t) const {
  const Eigen::VectorXd& lna = boundary_log_amplitudes();
  if (n_ < 2) return -kInf;
  // steady mode is the top eigenvalue (last, ascending); drop it
  Eigen::VectorXd terms(n_ - 1);
  for (int k = 0; k < n_ - 1; ++k) terms[k] = lna[k] + eigenvalues_[k] * t;
  return log_sum_exp(terms);
}

double PopulationSector::slow_mode_overlap_log() const {
  if (n_ < 2) {
    throw InvalidModelError("no decaying mode in a single-site chain");
  }
  if (symmetric_) {
    const double lambda1 = eigenvalues_[n_ - 2];
    const LogModeProfile prof =
        tridiag_mode_profile(diag_, offdiag_, lambda1);
    const Eigen::VectorXd& lp = steady_log();
    // right mode v = D^{1/2} u, left mode w = D^{-1/2} u with D = diag(p_s);
    // metric = ln(||v||_1 ||w||_1 / ||u||_2^2), trace norm of a diagonal
    // mode being the l1 norm of its diagonal.
    const double l1_right = log_sum_exp(prof.log_abs + 0.5 * lp);
    const double l1_left = log_sum_exp(prof.log_abs - 0.5 * lp);
    return l1_right + l1_left - prof.norm_log2();
  }
  const GeneralModes& gm = general_modes();
  const Eigen::VectorXcd v = gm.right.col(1) / gm.right.col(1).cwiseAbs().sum();
  const Eigen::VectorXcd w = gm.left.col(1) / gm.left.col(1).cwiseAbs().sum();
  const double overlap = std::abs(w.adjoint().dot(v.conjugate()));
  return -std::log(overlap);
}

const Eigen::MatrixXd& PopulationSector::symmetric_vectors() const {
  if (sym_vectors_) return *sym_vectors_;
  if (!symmetric_) {
    throw ConditioningError(
        "symmetric eigenvectors need all bond rates positive");
  }
  if (n_ == 1) {
    sym_vectors_ = Eigen::MatrixXd::Ones(1, 1);
    return *sym_vectors_;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag_, offdiag_, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw EigensolverError("tridiagonal eigenvector iteration failed");
  }
  sym_vectors_ = solver.eigenvectors();
  return *sym_vectors_;
}

namespace {

// Sort eigenpairs by (Re desc, Im asc) and return the permutation.
std::vector<int> sorted_order(const Eigen::VectorXcd& ev) {
  std::vector<int> idx(ev.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    if (ev[a].real() != ev[b].real()) return ev[a].real() > ev[b].real();
    return ev[a].imag() < ev[b].imag();
  });
  return idx;
}

}  // namespace

const PopulationSector::GeneralModes& PopulationSector::general_modes() const {
  if (general_) return *general_;
  auto gm = std::make_shared<GeneralModes>();
  const Eigen::MatrixXd gen = build_population_generator(model_);

  Eigen::EigenSolver<Eigen::MatrixXd> right_solver(gen, true);
  Eigen::EigenSolver<Eigen::MatrixXd> left_solver(gen.transpose(), true);
  if (right_solver.info() != Eigen::Success ||
      left_solver.info() != Eigen::Success) {
    throw EigensolverError("population-generator eigendecomposition failed");
  }

  const auto r_ord = sorted_order(right_solver.eigenvalues());
  const auto l_ord = sorted_order(left_solver.eigenvalues());
  gm->eigenvalues.resize(n_);
  gm->right.resize(n_, n_);
  gm->left.resize(n_, n_);
  for (int k = 0; k < n_; ++k) {
    gm->eigenvalues[k] = right_solver.eigenvalues()[r_ord[k]];
    gm->right.col(k) = right_solver.eigenvectors().col(r_ord[k]);
    gm->left.col(k) = left_solver.eigenvectors().col(l_ord[k]);
  }

  // Gram correction inside degenerate clusters so that left/right pairs are
  // biorthogonal even when eigenvalues collide.
  const double scale = std::max(1.0, gm->eigenvalues.cwiseAbs().maxCoeff());
  const double cluster_tol = 1e-8 * scale;
  int begin = 0;
  while (begin < n_) {
    int end = begin + 1;
    while (end < n_ &&
           std::abs(gm->eigenvalues[end] - gm->eigenvalues[begin]) <=
               cluster_tol) {
      ++end;
    }
    const int len = end - begin;
    if (len > 1) {
      const Eigen::MatrixXcd vc = gm->right.middleCols(begin, len);
      Eigen::MatrixXcd wc = gm->left.middleCols(begin, len);
      const Eigen::MatrixXcd gram = wc.adjoint() * vc;
      Eigen::FullPivLU<Eigen::MatrixXcd> lu(gram);
      if (lu.isInvertible()) {
        // W <- W G^{-H} so that W^H V = I on the cluster
        gm->left.middleCols(begin, len) =
            wc * lu.inverse().adjoint();
      }
    }
    begin = end;
  }
  general_ = std::move(gm);
  return *general_;
}

}  // namespace lse
