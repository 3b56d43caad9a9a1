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

#include "lse/model.hpp"

#include <string>

#include "lse/errors.hpp"

namespace lse {

bool Model::fully_connected() const {
  for (Eigen::Index i = 0; i < hop_left.size(); ++i) {
    if (hop_left[i] <= 0.0 || hop_right[i] <= 0.0) return false;
  }
  return n_sites() >= 1;
}

Model build_model(const ModelParams& params) {
  if (params.n_sites < 1) {
    throw InvalidModelError("n_sites must be >= 1, got " +
                            std::to_string(params.n_sites));
  }
  if (params.hop_left_base < 0.0 || params.hop_right_base < 0.0) {
    throw InvalidModelError("hop rates must be nonnegative");
  }
  const int n = params.n_sites;

  Model model;
  model.params = params;
  model.energies.resize(n);
  for (int i = 0; i < n; ++i) {
    model.energies[i] =
        params.energy_gradient ? i * params.energy_base : params.energy_base;
  }

  model.hop_left.resize(n - 1);
  model.hop_right.resize(n - 1);
  for (int bond = 1; bond < n; ++bond) {
    const double f = params.hop_gradient ? static_cast<double>(bond) : 1.0;
    model.hop_left[bond - 1] = f * params.hop_left_base;
    model.hop_right[bond - 1] = f * params.hop_right_base;
  }

  // Gamma_m = J_{m,L} + J_{m+1,R}, out-of-range terms zero.
  model.out_rate = Eigen::VectorXd::Zero(n);
  for (int m = 0; m < n; ++m) {
    if (m >= 1) model.out_rate[m] += model.hop_left[m - 1];
    if (m + 1 <= n - 1) model.out_rate[m] += model.hop_right[m];
  }
  return model;
}

}  // namespace lse
