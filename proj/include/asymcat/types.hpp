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

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace asymcat {

using Real = double;
using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

// A value failed one of its declared invariants (bad density operator,
// non-unitary group element, non-CPTP channel, ...).
class invariant_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An input file or JSON document could not be decoded.
class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A fidelity (or accuracy) floor assertion failed in a verification harness.
class floor_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace tol {
inline constexpr Real hermitian = 1e-10;
inline constexpr Real unit_trace = 1e-10;
inline constexpr Real psd = 1e-10;
// Relative support cutoff: eigenvalues <= cutoff * max(lambda_max, 1) are
// treated as exact zeros for pseudo-inverses and logarithms.
inline constexpr Real support_cutoff = 1e-12;
inline constexpr Real unitary = 1e-9;
inline constexpr Real kraus_complete = 1e-8;
// Channel equality predicate: Choi trace-distance below this.
inline constexpr Real channel_eq = 1e-8;
inline constexpr Real covariance = 1e-8;
inline constexpr Real floor_slack = 1e-6;
}  // namespace tol

}  // namespace asymcat
