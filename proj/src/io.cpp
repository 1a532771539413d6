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

#include "asymcat/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace asymcat {

namespace {

// Deterministic shortest-roundtrip formatting for CSV cells.
std::string format_real(Real value) {
  if (std::isnan(value)) return "";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  // Prefer the shortest representation that round-trips.
  for (int precision = 1; precision < 17; ++precision) {
    char shorter[64];
    std::snprintf(shorter, sizeof(shorter), "%.*g", precision, value);
    if (std::strtod(shorter, nullptr) == value) return shorter;
  }
  return buf;
}

[[noreturn]] void fail(const std::string& what) { throw parse_error(what); }

const nlohmann::json& field(const nlohmann::json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing field '") + key + "'");
  return *it;
}

}  // namespace

//============================================================================
// Matrices and states
//============================================================================

ordered_json matrix_to_json(const Matrix& m) {
  ordered_json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  ordered_json re = ordered_json::array(), im = ordered_json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    ordered_json re_row = ordered_json::array(), im_row = ordered_json::array();
    for (Index c = 0; c < m.cols(); ++c) {
      re_row.push_back(m(i, c).real());
      im_row.push_back(m(i, c).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  j["re"] = std::move(re);
  j["im"] = std::move(im);
  return j;
}

Matrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object()) fail("matrix: expected a JSON object");
  Index rows = field(j, "rows").get<Index>();
  Index cols = field(j, "cols").get<Index>();
  if (rows < 1 || cols < 1) fail("matrix: non-positive shape");
  const auto& re = field(j, "re");
  const auto& im = field(j, "im");
  if (!re.is_array() || !im.is_array() ||
      static_cast<Index>(re.size()) != rows || static_cast<Index>(im.size()) != rows)
    fail("matrix: row count does not match 'rows'");
  Matrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    const auto& re_row = re[static_cast<size_t>(i)];
    const auto& im_row = im[static_cast<size_t>(i)];
    if (static_cast<Index>(re_row.size()) != cols ||
        static_cast<Index>(im_row.size()) != cols)
      fail("matrix: column count does not match 'cols'");
    for (Index c = 0; c < cols; ++c) {
      Real a = re_row[static_cast<size_t>(c)].get<Real>();
      Real b = im_row[static_cast<size_t>(c)].get<Real>();
      if (!std::isfinite(a) || !std::isfinite(b)) fail("matrix: non-finite entry");
      m(i, c) = Complex(a, b);
    }
  }
  return m;
}

ordered_json density_to_json(const DensityOperator& rho) {
  return matrix_to_json(rho.matrix());
}

DensityOperator density_from_json(const nlohmann::json& j) {
  const nlohmann::json* body = &j;
  if (j.is_object() && j.contains("matrix")) body = &j["matrix"];
  return DensityOperator::from_matrix(matrix_from_json(*body));
}

//============================================================================
// Symmetry actions
//============================================================================

ordered_json action_to_json(const SymmetryAction& action) {
  ordered_json j;
  ordered_json systems = ordered_json::array();
  for (const auto& s : action.systems())
    systems.push_back(ordered_json{{"label", s.label}, {"dim", s.dim}});
  switch (action.kind()) {
    case ActionKind::FiniteGroup: {
      j["kind"] = "FiniteGroup";
      j["systems"] = std::move(systems);
      ordered_json elements = ordered_json::array();
      for (Index g = 0; g < action.group_order(); ++g) {
        ordered_json per_system = ordered_json::array();
        for (Index s = 0; s < static_cast<Index>(action.systems().size()); ++s)
          per_system.push_back(matrix_to_json(action.element(g, s)));
        elements.push_back(std::move(per_system));
      }
      j["elements"] = std::move(elements);
      break;
    }
    case ActionKind::HamiltonianGenerated: {
      j["kind"] = "HamiltonianGenerated";
      j["systems"] = std::move(systems);
      ordered_json generators = ordered_json::array();
      for (const Matrix& h : action.generators()) generators.push_back(matrix_to_json(h));
      j["generators"] = std::move(generators);
      j["degeneracy_tol"] = action.degeneracy_tol();
      break;
    }
    case ActionKind::CollectiveUnitary: {
      j["kind"] = "CollectiveUnitary";
      j["systems"] = std::move(systems);
      j["d"] = action.local_dim();
      j["r"] = action.copies();
      break;
    }
  }
  return j;
}

SymmetryAction action_from_json(const nlohmann::json& j) {
  std::string kind = field(j, "kind").get<std::string>();
  if (kind == "CollectiveUnitary")
    return SymmetryAction::collective_unitary(field(j, "d").get<Index>(),
                                              field(j, "r").get<Index>());

  std::vector<SymmetryAction::System> systems;
  for (const auto& s : field(j, "systems"))
    systems.push_back({field(s, "label").get<std::string>(), field(s, "dim").get<Index>()});

  if (kind == "FiniteGroup") {
    std::vector<std::vector<Matrix>> elements;
    for (const auto& elem : field(j, "elements")) {
      std::vector<Matrix> per_system;
      for (const auto& u : elem) per_system.push_back(matrix_from_json(u));
      elements.push_back(std::move(per_system));
    }
    return SymmetryAction::finite_group(std::move(systems), std::move(elements));
  }
  if (kind == "HamiltonianGenerated") {
    std::vector<Matrix> generators;
    for (const auto& h : field(j, "generators")) generators.push_back(matrix_from_json(h));
    Real tol = j.value("degeneracy_tol", Real(0));
    return SymmetryAction::hamiltonian_generated(std::move(systems), std::move(generators), tol);
  }
  fail("action: unknown kind '" + kind + "'");
}

//============================================================================
// Channels
//============================================================================

ordered_json channel_to_json(const Channel& e) {
  ordered_json j;
  j["in_dim"] = e.in_dim();
  j["out_dim"] = e.out_dim();
  ordered_json kraus = ordered_json::array();
  for (const Matrix& k : e.kraus()) kraus.push_back(matrix_to_json(k));
  j["kraus"] = std::move(kraus);
  j["name"] = e.name();
  return j;
}

Channel channel_from_json(const nlohmann::json& j) {
  Index in_dim = field(j, "in_dim").get<Index>();
  Index out_dim = field(j, "out_dim").get<Index>();
  std::vector<Matrix> kraus;
  for (const auto& k : field(j, "kraus")) kraus.push_back(matrix_from_json(k));
  if (kraus.empty()) fail("channel: empty Kraus list");
  if (kraus.front().rows() != out_dim || kraus.front().cols() != in_dim)
    fail("channel: Kraus shape does not match declared dimensions");
  std::string name = j.value("name", std::string("channel"));
  return Channel(std::move(kraus), std::move(name));
}

ordered_json covariance_report_to_json(const CovarianceReport& report) {
  ordered_json j;
  j["max_violation"] = report.max_violation;
  j["tolerance"] = report.tolerance;
  j["covariant"] = report.covariant;
  ordered_json rows = ordered_json::array();
  for (size_t i = 0; i < report.violations.size(); ++i)
    rows.push_back(ordered_json{{"label", report.labels[i]},
                                {"violation", report.violations[i]}});
  j["violations"] = std::move(rows);
  return j;
}

//============================================================================
// Experiment specs and reports
//============================================================================

ClockSpec clock_spec_from_json(const nlohmann::json& j) {
  const nlohmann::json& body = j.contains("clock") ? j["clock"] : j;
  ClockSpec spec;
  spec.T = field(body, "T").get<int>();
  spec.k = body.value("k", 1);
  spec.omega = body.value("omega", Real(1));
  spec.dim_R = body.value("dim_R", Index(0));
  spec.dim_S = body.value("dim_S", Index(2));
  return spec;
}

ClonerSpec cloner_spec_from_json(const nlohmann::json& j) {
  const nlohmann::json& body = j.contains("cloner") ? j["cloner"] : j;
  ClonerSpec spec;
  spec.d = field(body, "d").get<int>();
  spec.n = field(body, "n").get<int>();
  spec.k = field(body, "kk").get<int>();
  spec.probes = body.value("probes", 20);
  spec.seed = body.value("seed", std::uint64_t(1234));
  return spec;
}

ordered_json report_to_json(const ExperimentReport& report) {
  ordered_json j;
  j["schema_version"] = report.schema_version;
  j["command"] = report.command;
  j["inputs"] = ordered_json::parse(report.inputs_json);
  j["inputs_digest"] = report.inputs_digest;
  auto gamma = [](const AsymmetryValue& v) {
    return ordered_json{{"gamma", v.gamma},
                        {"entropy_twirled", v.entropy_twirled},
                        {"entropy_state", v.entropy_state},
                        {"action", v.action}};
  };
  j["gamma_in"] = gamma(report.gamma_in);
  j["gamma_out"] = gamma(report.gamma_out);
  j["bounds"] = ordered_json{{"delta_gamma", report.bounds.delta_gamma},
                             {"rank_DY", report.bounds.rank_DY},
                             {"epsilon_floor", report.bounds.epsilon_floor},
                             {"epsilon_floor_explicit", report.bounds.epsilon_floor_explicit},
                             {"fidelity_floor", report.bounds.fidelity_floor},
                             {"fidelity_ceiling", report.bounds.fidelity_ceiling},
                             {"binding", report.bounds.binding}};
  j["recovery"] = ordered_json{{"achieved_fidelity", report.recovery.achieved_fidelity},
                               {"best_t", report.recovery.best_t},
                               {"fidelity_floor", report.recovery.fidelity_floor},
                               {"margin", report.recovery.margin},
                               {"grid_points", report.recovery.grid_points}};
  ordered_json metrics;
  for (const auto& [name, value] : report.metrics) metrics[name] = value;
  j["metrics"] = std::move(metrics);
  ordered_json checks;
  for (const auto& [name, ok] : report.checks) checks[name] = ok;
  j["checks"] = std::move(checks);
  j["pass"] = report.pass;
  return j;
}

std::string report_csv_header() {
  return "schema_version,command,digest,T,k,d,n,kk,probes,gamma_in,gamma_out,"
         "delta_gamma,rank_DY,epsilon_floor,fidelity_floor,achieved_fidelity,"
         "best_t,margin,grid_points,observed_epsilon,reduced_s_fidelity,pass";
}

std::string report_csv_row(const ExperimentReport& report) {
  nlohmann::json inputs = nlohmann::json::parse(report.inputs_json);
  auto spec_field = [&inputs](const char* group, const char* key) -> std::string {
    if (!inputs.contains(group) || !inputs[group].contains(key)) return "";
    const auto& v = inputs[group][key];
    return v.is_number_integer() ? std::to_string(v.get<long long>())
                                 : format_real(v.get<Real>());
  };
  std::ostringstream os;
  os << report.schema_version << ",\"" << report.command << "\"," << report.inputs_digest
     << ',' << spec_field("clock", "T") << ',' << spec_field("clock", "k") << ','
     << spec_field("cloner", "d") << ',' << spec_field("cloner", "n") << ','
     << spec_field("cloner", "kk") << ',' << spec_field("cloner", "probes") << ','
     << format_real(report.gamma_in.gamma) << ',' << format_real(report.gamma_out.gamma)
     << ',' << format_real(report.bounds.delta_gamma) << ',' << report.bounds.rank_DY
     << ',' << format_real(report.bounds.epsilon_floor) << ','
     << format_real(report.recovery.fidelity_floor) << ','
     << format_real(report.recovery.achieved_fidelity) << ','
     << format_real(report.recovery.best_t) << ',' << format_real(report.recovery.margin)
     << ',' << report.recovery.grid_points << ','
     << format_real(report.metric("observed_epsilon")) << ','
     << format_real(report.metric("reduced_s_fidelity")) << ','
     << (report.pass ? "true" : "false");
  return os.str();
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open file: " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error("cannot parse " + path + ": " + e.what());
  }
}

}  // namespace asymcat
