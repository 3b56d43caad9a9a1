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

#include <stdexcept>
#include <string>

namespace lse {

/// Base class for all domain errors raised by the library. The CLI maps
/// these to exit code 1 with a machine-readable JSON payload on stderr.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
  virtual const char* kind() const noexcept { return "error"; }
};

#define LSE_DEFINE_ERROR(NAME, KIND)                              \
  class NAME : public Error {                                     \
   public:                                                        \
    explicit NAME(const std::string& what) : Error(what) {}       \
    const char* kind() const noexcept override { return KIND; }   \
  }

LSE_DEFINE_ERROR(InvalidModelError, "invalid-model");
LSE_DEFINE_ERROR(SizeCapError, "size-cap");
LSE_DEFINE_ERROR(EigensolverError, "eigensolver");
LSE_DEFINE_ERROR(DisconnectedChainError, "disconnected-chain");
LSE_DEFINE_ERROR(ConditioningError, "ill-conditioned");
LSE_DEFINE_ERROR(ConvergenceError, "no-convergence");
LSE_DEFINE_ERROR(StiffnessError, "stiffness");
LSE_DEFINE_ERROR(RegimeError, "regime-violated");
LSE_DEFINE_ERROR(SaturationError, "overlap-saturated");
LSE_DEFINE_ERROR(TruncationLeakError, "truncation-leak");
LSE_DEFINE_ERROR(ConfigError, "config");
LSE_DEFINE_ERROR(IoError, "io");

#undef LSE_DEFINE_ERROR

}  // namespace lse
