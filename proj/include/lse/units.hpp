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

#include <string>
#include <string_view>

namespace lse {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// All frequencies and rates are stored as angular values (rad/s). Inputs
// carrying Hz/kHz/MHz/GHz suffixes are multiplied by 2*pi on ingestion;
// "rad" (or "rad/s") is taken verbatim. A bare number is rejected so unit
// mistakes fail loudly instead of silently being off by 2*pi.
double parse_frequency(std::string_view text);

// Inverse convenience for summaries: rad/s -> ordinary Hz.
double to_hertz(double angular);

// Shortest exact decimal representation (round-trips through strtod).
std::string format_double(double value);

}  // namespace lse
