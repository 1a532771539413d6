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

#include "asymcat/symrep.hpp"

namespace asymcat {

//============================================================================
// Asymmetry and coherence monotones (bits)
//============================================================================

struct AsymmetryValue {
  Real gamma = 0;            // entropy_twirled - entropy_state
  Real entropy_twirled = 0;
  Real entropy_state = 0;
  std::string action;
};

// Gamma(rho) = S(G(rho)) - S(rho). The equivalent relative-entropy form
// S(rho||G(rho)) is evaluated as a cross-check; a mismatch beyond 1e-8
// raises invariant_error.
AsymmetryValue rel_ent_asymmetry(const SymmetryAction& action,
                                 const DensityOperator& rho);

// Lambda(rho) = S(D(rho)) - S(rho) for a fixed projector set.
AsymmetryValue rel_ent_coherence(const EigenBlocks& blocks,
                                 const DensityOperator& rho);

// Gamma(out) - Gamma(in); may be negative.
Real delta_gamma(const SymmetryAction& action_in, const DensityOperator& rho_in,
                 const SymmetryAction& action_out, const DensityOperator& rho_out);

// 2^{-dgamma/2}, clamped to [0, 1].
Real fidelity_floor(Real dgamma);

// Numerical rank of G(rho) at the support cutoff; the D_Y of the accuracy
// bound.
Index twirled_rank(const SymmetryAction& action, const DensityOperator& rho);

//============================================================================
// Accuracy bounds
//============================================================================

struct BoundsRecord {
  Real delta_gamma = 0;
  Index rank_DY = 1;
  // Tight implicit floor: the unique epsilon in [0,1] with
  // epsilon*log2(D_Y) + 2 H(epsilon/2) = delta_gamma (1 if unattainable).
  Real epsilon_floor = 0;
  // Loose explicit floor (delta_gamma / (3 log2 D_Y))^2, clamped to [0,1].
  Real epsilon_floor_explicit = 0;
  Real fidelity_floor = 1;    // 2^{-delta_gamma/2}
  Real fidelity_ceiling = 1;  // 1 - epsilon_floor/2, via 2(1-F) <= ||.||_1
  std::string binding;        // which epsilon floor is larger
};

BoundsRecord accuracy_upper_bound(Real dgamma, Index rank_dy);

//============================================================================
// Tripartite construction over a classical register
//============================================================================

// (1/|G|) sum_g |g><g|^C ⊗ U_g tau U_g' ⊗ U_g sigma U_g' for a finite-group
// action over exactly two systems (R, S). Guarded at |G|*dim_R*dim_S <= 1e4.
DensityOperator build_sigma_crs(const SymmetryAction& action,
                                const DensityOperator& tau,
                                const DensityOperator& sigma);

// I(C:S|R) = S(CR) + S(RS) - S(CRS) - S(R) for dims = {C, R, S}.
Real conditional_mutual_information(const DensityOperator& state,
                                    const std::vector<Index>& dims);

// I(A:B) = S(A) + S(B) - S(AB) for two disjoint factor groups.
Real mutual_information(const DensityOperator& state, const std::vector<Index>& dims,
                        const std::vector<Index>& part_a,
                        const std::vector<Index>& part_b);

}  // namespace asymcat
