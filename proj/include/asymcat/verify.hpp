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

#include "asymcat/random.hpp"
#include "asymcat/recovery.hpp"

namespace asymcat {

//============================================================================
// Instance generators (shared by the suites and the acceptance tests)
//============================================================================

// Exact-order cyclic representation: V diag(w^{m_j}) V' with w = e^{2pi i/order}.
SymmetryAction random_cyclic_action(Rng& rng, Index dim, Index order);
// Cyclic action of random order 2..6 on a single system.
SymmetryAction random_finite_action(Rng& rng, Index dim);
// Translation action with a small-integer spectrum (degenerate with good odds).
SymmetryAction random_hamiltonian_action(Rng& rng, Index dim);
// TP channel from Ginibre Kraus operators, exactly normalized.
Channel random_channel(Rng& rng, Index in_dim, Index out_dim, Index kraus_count);
// symmetrize() of a random channel: covariant by construction.
Channel random_covariant_channel(Rng& rng, const SymmetryAction& action);
// Random orthogonal projector blocks covering the space.
EigenBlocks random_blocks(Rng& rng, Index dim, Index block_count);
// Finite group of the 2^m per-block sign flips; its twirl is the dephaser.
SymmetryAction block_sign_action(const EigenBlocks& blocks);
// symmetrize() over the block sign group: dephasing-covariant by construction.
Channel random_dephasing_covariant_channel(Rng& rng, const EigenBlocks& blocks);

//============================================================================
// Property batteries
//============================================================================

struct PropertyResult {
  std::string name;
  int instances = 0;
  Real max_violation = 0;
  Real tolerance = 0;
  bool pass = false;
};

// Named properties with pinned instance counts. Each returns one result per
// aspect it certifies; the acceptance criteria call these directly.
std::vector<PropertyResult> prop_eig_reconstruction(std::uint64_t seed, int instances);
std::vector<PropertyResult> prop_density_invariants(std::uint64_t seed, int instances);
std::vector<PropertyResult> prop_fidelity_trace_bound(std::uint64_t seed, int instances);
std::vector<PropertyResult> prop_relent_properties(std::uint64_t seed, int instances);
std::vector<PropertyResult> prop_twirl_properties(std::uint64_t seed, int instances);
std::vector<PropertyResult> prop_sym_projector_invariance();
std::vector<PropertyResult> prop_channel_algebra(std::uint64_t seed, int instances);
std::vector<PropertyResult> prop_covariance_convention(std::uint64_t seed, int instances);

std::vector<PropertyResult> prop_eq5_chain(std::uint64_t seed, int instances,
                                           Index max_dim);
std::vector<PropertyResult> prop_gamma_zero_iff(std::uint64_t seed, int instances);
std::vector<PropertyResult> prop_convexity(std::uint64_t seed, int instances);
std::vector<PropertyResult> prop_group_cap(std::uint64_t seed, int instances);
std::vector<PropertyResult> prop_copy_growth(std::uint64_t seed, int instances);
std::vector<PropertyResult> prop_monotonicity(std::uint64_t seed, int instances);
std::vector<PropertyResult> prop_cmi_identity(std::uint64_t seed, int pairs_per_group);

std::vector<PropertyResult> prop_petz_exactness(std::uint64_t seed, int instances);
std::vector<PropertyResult> prop_theorem2(std::uint64_t seed, int instances);
std::vector<PropertyResult> prop_theorem4(std::uint64_t seed, int instances);
std::vector<PropertyResult> prop_theorem1_clocks();
std::vector<PropertyResult> prop_catalytic_consistency();

// Assembled suites for the command-line verify entry point.
std::vector<PropertyResult> run_core_suite(std::uint64_t seed);
std::vector<PropertyResult> run_asymmetry_suite(std::uint64_t seed);
std::vector<PropertyResult> run_recovery_suite(std::uint64_t seed);
// which: "core" | "asymmetry" | "recovery" | "all".
std::vector<PropertyResult> run_suite(const std::string& which, std::uint64_t seed);

}  // namespace asymcat
