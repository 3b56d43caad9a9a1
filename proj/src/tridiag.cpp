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

#include "lse/tridiag.hpp"

#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

#include "lse/errors.hpp"

namespace lse {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kRescaleHigh = 1e120;
constexpr double kRescaleLow = 1e-120;

struct SweepResult {
  Eigen::VectorXd sign;
  Eigen::VectorXd log_abs;
};

// One-directional three-term recurrence for (A - lambda) psi = 0, run from
// `anchor` (value 1) toward the other end, with on-the-fly rescaling so the
// stored pair never overflows. dir = -1 sweeps right-to-left.
SweepResult sweep(const Eigen::VectorXd& d, const Eigen::VectorXd& e,
                  double lambda, int anchor, int stop, int dir) {
  const int n = static_cast<int>(d.size());
  SweepResult out;
  out.sign = Eigen::VectorXd::Zero(n);
  out.log_abs = Eigen::VectorXd::Constant(n, -kInf);

  auto record = [&](int idx, double value, double scale_log) {
    if (value == 0.0) return;
    out.sign[idx] = value > 0.0 ? 1.0 : -1.0;
    out.log_abs[idx] = scale_log + std::log(std::abs(value));
  };

  double prev = 0.0;        // psi[anchor - dir*(-1)] ... outside the chain
  double cur = 1.0;         // psi[anchor]
  double scale_log = 0.0;   // true value = stored * exp(scale_log)
  record(anchor, cur, scale_log);
  if (anchor == stop) return out;

  // first step has no outer neighbor
  {
    const int next = anchor + dir;
    const double e_next = dir > 0 ? e[anchor] : e[next];
    const double value = (lambda - d[anchor]) * cur / e_next;
    prev = cur;
    cur = value;
    record(next, cur, scale_log);
    if (next == stop) return out;
  }

  for (int idx = anchor + dir; idx != stop; idx += dir) {
    // (lambda - d[idx]) psi[idx] = e_in psi[idx-dir] + e_out psi[idx+dir]
    const double e_in = dir > 0 ? e[idx - 1] : e[idx];
    const double e_out = dir > 0 ? e[idx] : e[idx - 1];
    double next = ((lambda - d[idx]) * cur - e_in * prev) / e_out;
    prev = cur;
    cur = next;
    const double mag = std::abs(cur);
    if (mag > kRescaleHigh || (mag > 0.0 && mag < kRescaleLow)) {
      prev /= mag;
      cur /= mag;
      scale_log += std::log(mag);
    }
    record(idx + dir, cur, scale_log);
  }
  return out;
}

}  // namespace

Eigen::VectorXd tridiag_eigenvalues(const Eigen::VectorXd& diag,
                                    const Eigen::VectorXd& offdiag) {
  if (diag.size() == 1) {
    return diag;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, offdiag, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw EigensolverError("tridiagonal eigenvalue iteration failed");
  }
  return solver.eigenvalues();
}

double LogModeProfile::norm_log2() const { return log_sum_exp(2.0 * log_abs); }

LogModeProfile tridiag_mode_profile(const Eigen::VectorXd& diag,
                                    const Eigen::VectorXd& offdiag,
                                    double lambda) {
  const int n = static_cast<int>(diag.size());
  LogModeProfile profile;
  if (n == 1) {
    profile.sign = Eigen::VectorXd::Ones(1);
    profile.log_abs = Eigen::VectorXd::Zero(1);
    return profile;
  }
  for (int i = 0; i < n - 1; ++i) {
    if (!(offdiag[i] > 0.0)) {
      throw InvalidModelError(
          "tridiag_mode_profile requires strictly positive off-diagonals");
    }
  }

  // Inward from the right end; the recurrence is stable while the solution
  // grows, i.e. up to the profile peak.
  SweepResult right = sweep(diag, offdiag, lambda, n - 1, 0, -1);
  int peak = 0;
  for (int i = 1; i < n; ++i) {
    if (right.log_abs[i] > right.log_abs[peak]) peak = i;
  }

  profile.sign = right.sign;
  profile.log_abs = right.log_abs;
  if (peak > 0) {
    // Cover [0, peak] from the left and splice at the peak.
    SweepResult left = sweep(diag, offdiag, lambda, 0, peak, +1);
    if (left.sign[peak] != 0.0 && right.sign[peak] != 0.0) {
      const double shift = right.log_abs[peak] - left.log_abs[peak];
      const double flip = right.sign[peak] * left.sign[peak];
      for (int i = 0; i < peak; ++i) {
        profile.sign[i] = left.sign[i] * flip;
        profile.log_abs[i] = left.log_abs[i] + shift;
      }
    }
  }
  return profile;
}

double log_sum_exp(const Eigen::VectorXd& x) {
  if (x.size() == 0) return -kInf;
  const double m = x.maxCoeff();
  if (!std::isfinite(m)) return m;
  double acc = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    acc += std::exp(x[i] - m);
  }
  return m + std::log(acc);
}

}  // namespace lse
