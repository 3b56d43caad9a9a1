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

// Parameters of the dissipative chain. Energies are angular frequencies in
// rad/s; hop rates are 1/s. The gradient flags select E_n = n*E and
// J_{n,L(R)} = n*J_{L(R)}; otherwise the profiles are site-independent.
struct ModelParams {
  int n_sites = 0;
  double energy_base = 0.0;
  bool energy_gradient = false;
  double hop_left_base = 0.0;
  double hop_right_base = 0.0;
  bool hop_gradient = false;
};

// Materialized chain. Sites are labeled 0..N-1; hop arrays are indexed by
// the jump-operator index n = 1..N-1 (stored at n-1), where hop_left[n-1]
// moves population n -> n-1 and hop_right[n-1] moves n-1 -> n.
struct Model {
  ModelParams params;
  Eigen::VectorXd energies;   // E_n, length N
  Eigen::VectorXd hop_left;   // J_{n,L}, length N-1
  Eigen::VectorXd hop_right;  // J_{n,R}, length N-1
  Eigen::VectorXd out_rate;   // Gamma_m = J_{m,L} + J_{m+1,R}, length N

  int n_sites() const { return static_cast<int>(energies.size()); }

  // True when every bond carries rate in both directions; the population
  // generator is then similar to a symmetric tridiagonal matrix.
  bool fully_connected() const;
};

Model build_model(const ModelParams& params);

}  // namespace lse
