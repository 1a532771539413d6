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

#include "json.hpp"

#include "asymcat/covariance.hpp"
#include "asymcat/report.hpp"
#include "asymcat/showcase.hpp"

namespace asymcat {

using ordered_json = nlohmann::ordered_json;

// Matrices serialize as {"rows", "cols", "re": [[...]], "im": [[...]]} with
// row-major nested arrays; readers reject shape mismatches and non-finite
// entries (throwing parse_error).
ordered_json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

ordered_json density_to_json(const DensityOperator& rho);
DensityOperator density_from_json(const nlohmann::json& j);

// {"kind": "FiniteGroup"|"HamiltonianGenerated"|"CollectiveUnitary",
//  "systems": [{"label","dim"}...], payload fields per kind}.
ordered_json action_to_json(const SymmetryAction& action);
SymmetryAction action_from_json(const nlohmann::json& j);

// {"in_dim", "out_dim", "kraus": [matrix...], "name"}.
ordered_json channel_to_json(const Channel& e);
Channel channel_from_json(const nlohmann::json& j);

ordered_json covariance_report_to_json(const CovarianceReport& report);

ClockSpec clock_spec_from_json(const nlohmann::json& j);    // {"clock": {...}}
ClonerSpec cloner_spec_from_json(const nlohmann::json& j);  // {"cloner": {...}}

ordered_json report_to_json(const ExperimentReport& report);
std::string report_csv_header();
std::string report_csv_row(const ExperimentReport& report);

nlohmann::json load_json_file(const std::string& path);  // throws parse_error

}  // namespace asymcat
