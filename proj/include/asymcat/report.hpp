// Copyright 2026 The asymcat authors
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
#include <utility>
#include <vector>

#include "asymcat/asymmetry.hpp"
#include "asymcat/recovery.hpp"

namespace asymcat {

// Structured experiment record. Everything needed to re-derive the pass
// flags is stored alongside them, so reports are self-auditing. Wall time is
// shown in the human-readable rendering only; the JSON form must stay
// byte-identical across reruns of the same command and seed.
struct ExperimentReport {
  int schema_version = 1;
  std::string command;
  std::string inputs_json;    // canonical echo of the parsed spec
  std::string inputs_digest;  // fnv1a-64 over inputs_json
  AsymmetryValue gamma_in;
  AsymmetryValue gamma_out;
  BoundsRecord bounds;
  RecoveryResult recovery;
  std::vector<std::pair<std::string, Real>> metrics;
  std::vector<std::pair<std::string, bool>> checks;
  bool pass = false;
  Real wall_seconds = 0;

  Real metric(std::string_view name) const;  // quiet NaN when absent
  bool has_metric(std::string_view name) const;
  bool check(std::string_view name) const;   // false when absent
};

std::string fnv1a_hex(std::string_view data);

}  // namespace asymcat
