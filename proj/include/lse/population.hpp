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

#pragma once

#include <complex>
#include <memory>
#include <optional>

#include <Eigen/Dense>

#include "lse/model.hpp"

namespace lse {

// Population block of the Liouvillian: the N x N generator acting on the
// diagonal of the density matrix,
//   dp_n/dt = J_{n+1,L} p_{n+1} + J_{n,R} p_{n-1} - Gamma_n p_n.
// Columns sum to zero; off-diagonals are nonnegative; tridiagonal.
Eigen::MatrixXd build_population_generator(const Model& model);

// Eigen-analysis of the population block. When every bond carries rate in
// both directions, the generator is similar to the symmetric tridiagonal
// matrix with diagonal -Gamma_n and off-diagonal sqrt(J_{n,L} J_{n,R});
// all spectral quantities are then computed in that well-conditioned frame,
// with log-domain mode profiles so amplitudes keep relative accuracy at
// any system size. Otherwise a dense nonsymmetric eigendecomposition is
// used (adequate for small chains and chains with one-way bonds).
class PopulationSector {
 public:
  explicit PopulationSector(const Model& model);

  int n_sites() const { return n_; }
  const Model& model() const { return model_; }
  bool symmetric_form() const { return symmetric_; }

  // Real spectrum of the generator, ascending (last entry is the steady 0).
  const Eigen::VectorXd& eigenvalues_ascending() const { return eigenvalues_; }

  // |Re lambda_1| of the population block. Throws for a single site.
  double gap() const;

  // ln p_n of the steady state, normalized. Throws DisconnectedChainError
  // when neither all-left nor all-right rates are positive.
  const Eigen::VectorXd& steady_log() const;
  Eigen::VectorXd steady_probs() const;

  // ln a_k for the boundary-start expansion p_{N-1}(t) = sum_k a_k e^{l_k t},
  // p0 = delta_{N-1}; ascending eigenvalue order. Symmetric form only.
  const Eigen::VectorXd& boundary_log_amplitudes() const;

  // ln |p_{N-1}(t) - p_{s,N-1}| for p0 = delta_{N-1} (monotone decreasing).
  double boundary_deviation_log(double t) const;

  // -ln |Tr[(rho_1^l)^dag rho_1^r]| for the slowest population mode, both
  // modes trace-norm normalized.
  double slow_mode_overlap_log() const;

  // Right eigenvectors of M and left eigenvectors (from M^T), paired by
  // descending eigenvalue; cluster-wise Gram correction makes pairs
  // biorthogonal under degeneracy.
  struct GeneralModes {
    Eigen::VectorXcd eigenvalues;  // descending by (Re, Im)
    Eigen::MatrixXcd right;
    Eigen::MatrixXcd left;
  };
  const GeneralModes& general_modes() const;

  // Orthonormal eigenvectors of the symmetric form, ascending order.
  const Eigen::MatrixXd& symmetric_vectors() const;

  const Eigen::VectorXd& sym_diag() const { return diag_; }
  const Eigen::VectorXd& sym_offdiag() const { return offdiag_; }

 private:
  Model model_;
  int n_ = 0;
  bool symmetric_ = false;
  Eigen::VectorXd diag_, offdiag_;
  Eigen::VectorXd eigenvalues_;
  mutable std::optional<Eigen::VectorXd> steady_log_;
  mutable std::optional<Eigen::VectorXd> boundary_log_amp_;
  mutable std::optional<Eigen::MatrixXd> sym_vectors_;
  mutable std::shared_ptr<const GeneralModes> general_;
};

}  // namespace lse
