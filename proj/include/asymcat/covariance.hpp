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

#include "asymcat/channel.hpp"
#include "asymcat/symrep.hpp"

namespace asymcat {

struct CovarianceReport {
  Real max_violation = 0;
  std::vector<Real> violations;      // per group element / sampled time / sample
  std::vector<std::string> labels;   // "g=2", "t=0.7", "structural", "U#5"
  Real tolerance = 0;
  bool covariant = false;
};

// Commutation of the channel with the group action, as the Choi trace
// distance between E∘U_g and U_g∘E.
//  - FiniteGroup: exact maximum over the element list.
//  - HamiltonianGenerated: the structural Choi commutator with
//    conj(H_in)⊗I − I⊗H_out, cross-checked against conjugations sampled at
//    t ∈ {0.1, 0.7, 2.3}; the report carries all four rows.
//  - CollectiveUnitary: 20 seeded Haar samples.
CovarianceReport check_covariance(const Channel& e, const SymmetryAction& action_in,
                                  const SymmetryAction& action_out, Real tolerance);

// Choi distance between F∘D and D∘F; D must be an idempotent dephaser.
CovarianceReport check_dephasing_covariance(const Channel& f, const Channel& d,
                                            Real tolerance);

// (1/|G|) sum_g U_{g^-1}^out ∘ E ∘ U_g^in. Finite groups only; the output is
// covariant by construction and fixed when E already is.
Channel symmetrize(const Channel& e, const SymmetryAction& action_in,
                   const SymmetryAction& action_out);

// rho -> rho ⊗ sigma on an appended system. sigma must be a twirl fixed point
// of its action (checked to 1e-8); the result is covariant under any product
// action extending action_sigma.
Channel append_symmetric_state(Index dim_in, const DensityOperator& sigma,
                               const SymmetryAction& action_sigma);

}  // namespace asymcat
