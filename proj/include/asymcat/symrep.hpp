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

#include <cstdint>
#include <string>
#include <vector>

#include "asymcat/channel.hpp"
#include "asymcat/opcore.hpp"

namespace asymcat {

enum class ActionKind { FiniteGroup, HamiltonianGenerated, CollectiveUnitary };

//============================================================================
// Symmetry actions over registered subsystems
//============================================================================

// A group's unitary representation over one or more named subsystems.
//  - FiniteGroup stores explicit per-system unitaries; element 0 is the
//    identity. No multiplication table is kept and closure is not checked.
//  - HamiltonianGenerated stores one Hermitian generator per system; the
//    joint generator is the padded sum.
//  - CollectiveUnitary tags the U(d) action U^(x)r on r copies.
class SymmetryAction {
 public:
  struct System {
    std::string label;
    Index dim = 0;
  };

  static SymmetryAction finite_group(std::vector<System> systems,
                                     std::vector<std::vector<Matrix>> elements);
  static SymmetryAction hamiltonian_generated(std::vector<System> systems,
                                              std::vector<Matrix> generators,
                                              Real degeneracy_tol = 0);  // 0 = auto
  static SymmetryAction collective_unitary(Index local_dim, Index copies);

  ActionKind kind() const { return kind_; }
  const std::vector<System>& systems() const { return systems_; }
  Index total_dim() const;
  std::string describe() const;

  // FiniteGroup accessors.
  Index group_order() const;
  const Matrix& element(Index g, Index system) const;
  Matrix element_unitary(Index g) const;  // joint tensor across systems

  // HamiltonianGenerated accessors.
  const std::vector<Matrix>& generators() const;
  Matrix joint_generator() const;
  Real degeneracy_tol() const { return degeneracy_tol_; }

  // CollectiveUnitary accessors.
  Index local_dim() const;
  Index copies() const;

  // Sub-action on a subset of systems (strictly increasing indices). For
  // CollectiveUnitary only a prefix of copies may be taken.
  SymmetryAction restricted(const std::vector<Index>& system_indices) const;

 private:
  SymmetryAction() = default;
  void check_dims() const;

  ActionKind kind_ = ActionKind::FiniteGroup;
  std::vector<System> systems_;
  std::vector<std::vector<Matrix>> elements_;  // [group element][system]
  std::vector<Matrix> generators_;             // [system]
  Real degeneracy_tol_ = 0;
  Index local_dim_ = 0;
  Index copies_ = 0;
};

//============================================================================
// Eigenblocks of a Hermitian observable
//============================================================================

struct EigenBlocks {
  std::vector<Matrix> projectors;
  std::vector<Real> labels;  // representative eigenvalue per block

  Index dim() const { return projectors.empty() ? 0 : projectors.front().rows(); }
  // Checks completeness and mutual orthogonality; throws invariant_error.
  void validate(Real tolerance = 1e-9) const;
};

// Clusters the spectrum with gap tolerance `tol` and builds the projectors.
EigenBlocks eigenblocks(const Matrix& h, Real tol);

//============================================================================
// Twirling superoperators
//============================================================================

// Uniform twirl of a state under the action:
//  - FiniteGroup: (1/|G|) sum_g U_g rho U_g'
//  - HamiltonianGenerated: dephasing over joint-generator eigenblocks
//  - CollectiveUnitary: Tr(rho) P+/d+ for inputs supported on the symmetric
//    subspace; anything leaking outside is rejected.
DensityOperator twirl(const SymmetryAction& action, const DensityOperator& rho);

// The twirl as a channel (FiniteGroup and HamiltonianGenerated only).
Channel twirl_channel(const SymmetryAction& action);

// Projector onto the symmetric subspace of r copies of C^d, built as the
// normalized sum of all r! permutation operators. Capped at r <= 6.
Matrix symmetric_subspace_projector(Index d, Index r);

// Dimension of the symmetric subspace, binomial(r+d-1, d-1), exact with an
// overflow guard above 2^62.
std::int64_t sym_dim(Index d, Index r);

// CPTP dephasing channel with Kraus set {P_j}; idempotent.
Channel dephasing_map(const EigenBlocks& blocks);

}  // namespace asymcat
