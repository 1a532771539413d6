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

#include <optional>

#include "asymcat/asymmetry.hpp"
#include "asymcat/covariance.hpp"

namespace asymcat {

//============================================================================
// Petz and rotated-Petz recovery maps
//============================================================================

// Forward channel plus the anchor state it should send back through itself.
// Inputs fed to the built recovery are expected to have support inside
// supp(N(kappa)); the complement is routed to kappa so the object is still a
// total channel (the domain annotation records where TP is meaningful).
struct RecoverySpec {
  Channel forward;
  DensityOperator anchor;
  Real t = 0;
};

// R(x) = sqrt(kappa) N'( N(kappa)^{-1/2} x N(kappa)^{-1/2} ) sqrt(kappa),
// with pseudo-inverses on supports. Recovers kappa from N(kappa) exactly.
Channel petz_map(const Channel& n, const DensityOperator& kappa);

// V_{kappa,t} ∘ R_P ∘ V_{N(kappa),-t} with V_{w,t}(x) = w^{it} x w^{-it};
// imaginary powers act as the identity on kernels. t = 0 is exactly petz_map.
Channel rotated_petz(const Channel& n, const DensityOperator& kappa, Real t);
Channel rotated_petz(const RecoverySpec& spec);

// Rotated Petz specialized to N = partial trace over the trailing systems
// and kappa = twirl(tau ⊗ sigma). The split of the action's systems between
// tau and sigma is inferred from the state dimensions.
Channel catalytic_recovery(const SymmetryAction& action, const DensityOperator& tau,
                           const DensityOperator& sigma, Real t);

// Direct evaluation of the rotated Petz action from cached spectral data;
// agrees with the Kraus-built channel and is what the t scan uses.
class RotatedPetzEvaluator {
 public:
  RotatedPetzEvaluator(const Channel& n, const DensityOperator& kappa);

  Matrix recover_matrix(Real t, const Matrix& x) const;
  DensityOperator recover(Real t, const DensityOperator& probe) const;

 private:
  Channel n_;
  Matrix kappa_mat_;
  Matrix sqrt_kappa_;
  Matrix inv_sqrt_nk_;
  Matrix supp_nk_;
  SpectralDecomposition kappa_eig_;
  SpectralDecomposition nk_eig_;
  Real thr_kappa_ = 0;
  Real thr_nk_ = 0;
};

//============================================================================
// Rotation-parameter search
//============================================================================

struct TSearchOptions {
  Real t_max = 10;
  Index grid_points = 401;
  Real refine_dt = 1e-4;  // golden-section stopping width
};

struct RecoveryResult {
  Real achieved_fidelity = 0;
  Real best_t = 0;
  Real fidelity_floor = 0;
  Real margin = 0;  // achieved - floor
  Index grid_points = 0;
  std::optional<DensityOperator> recovered;
};

// Scans t over a uniform grid on [-t_max, t_max] (t = 0 always included),
// refines around the best point, and returns the maximum of
// F(R_t(probe), target). Ties at 1e-12 resolve to the earliest grid point.
RecoveryResult best_t_search(const Channel& n, const DensityOperator& kappa,
                             const DensityOperator& probe, const DensityOperator& target,
                             const TSearchOptions& options = {},
                             Real floor = 0);

//============================================================================
// Verification harnesses
//============================================================================

// Builds the rotated Petz family with N = F and kappa = twirl(rho), searches
// t, and asserts the 2^{-dgamma/2} floor plus covariance of the recovery.
// Throws invariant_error if F is not covariant at 1e-7, floor_error if the
// floor fails after one 4x grid densification.
RecoveryResult verify_reversibility(const Channel& f, const SymmetryAction& action_in,
                                    const SymmetryAction& action_out,
                                    const DensityOperator& rho,
                                    const TSearchOptions& options = {});

// Dephasing analogue: kappa = D(rho), floor 2^{-dlambda/2}, and the recovery
// must commute with the dephaser.
RecoveryResult verify_dephasing_recovery(const Channel& f, const EigenBlocks& blocks,
                                         const DensityOperator& rho,
                                         const TSearchOptions& options = {});

}  // namespace asymcat
