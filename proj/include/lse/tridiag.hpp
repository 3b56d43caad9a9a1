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

#include <Eigen/Dense>

namespace lse {

// Eigenvalues of the symmetric tridiagonal matrix with the given diagonal
// and subdiagonal, in ascending order.
Eigen::VectorXd tridiag_eigenvalues(const Eigen::VectorXd& diag,
                                    const Eigen::VectorXd& offdiag);

// Eigenvector profile stored as sign[n] * exp(log_abs[n]). The overall scale
// is arbitrary; norm_log2() gives ln(sum_n u[n]^2) for normalization.
struct LogModeProfile {
  Eigen::VectorXd sign;     // -1, 0, +1
  Eigen::VectorXd log_abs;  // -inf where the component vanishes
  double norm_log2() const;
};

// Eigenvector of the symmetric tridiagonal matrix at eigenvalue `lambda`,
// computed by three-term recurrences run inward from both chain ends and
// matched at the profile maximum. Components keep full relative accuracy
// even when they are exponentially small in N, which a dense eigensolver
// (absolute accuracy ~eps*||A||) cannot deliver. Requires offdiag > 0.
LogModeProfile tridiag_mode_profile(const Eigen::VectorXd& diag,
                                    const Eigen::VectorXd& offdiag,
                                    double lambda);

// ln sum_i exp(x[i]); tolerates -inf entries, returns -inf for empty input.
double log_sum_exp(const Eigen::VectorXd& x);

}  // namespace lse
