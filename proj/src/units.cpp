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

#include "lse/units.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "lse/errors.hpp"

namespace lse {

namespace {

std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

double parse_frequency(std::string_view text) {
  std::string buf(text);
  // strip surrounding whitespace
  const auto first = buf.find_first_not_of(" \t");
  const auto last = buf.find_last_not_of(" \t");
  if (first == std::string::npos) {
    throw ConfigError("empty frequency value");
  }
  buf = buf.substr(first, last - first + 1);

  char* end = nullptr;
  const double value = std::strtod(buf.c_str(), &end);
  if (end == buf.c_str()) {
    throw ConfigError("cannot parse frequency '" + buf + "'");
  }
  std::string suffix = lowercase(std::string_view(end));
  // drop whitespace between number and unit
  suffix.erase(std::remove_if(suffix.begin(), suffix.end(),
                              [](unsigned char c) { return std::isspace(c); }),
               suffix.end());

  double scale = 0.0;
  if (suffix == "hz") {
    scale = kTwoPi;
  } else if (suffix == "khz") {
    scale = kTwoPi * 1e3;
  } else if (suffix == "mhz") {
    scale = kTwoPi * 1e6;
  } else if (suffix == "ghz") {
    scale = kTwoPi * 1e9;
  } else if (suffix == "rad" || suffix == "rad/s" || suffix == "rads") {
    scale = 1.0;
  } else if (suffix.empty()) {
    throw ConfigError("frequency '" + buf +
                      "' has no unit suffix; use Hz, kHz, MHz, GHz or rad");
  } else {
    throw ConfigError("unknown frequency unit '" + std::string(end) + "'");
  }
  return value * scale;
}

double to_hertz(double angular) { return angular / kTwoPi; }

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  // prefer the shortest representation that still round-trips
  for (int prec = 1; prec < 17; ++prec) {
    char shorter[40];
    std::snprintf(shorter, sizeof(shorter), "%.*g", prec, value);
    if (std::strtod(shorter, nullptr) == value) {
      return shorter;
    }
  }
  return buf;
}

}  // namespace lse
