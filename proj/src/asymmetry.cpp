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

#include "asymcat/asymmetry.hpp"

#include <algorithm>
#include <cmath>

namespace asymcat {

namespace {

constexpr Index kSigmaCrsGuard = 10000;

AsymmetryValue entropy_gap(const DensityOperator& projected, const DensityOperator& rho,
                           std::string action_label) {
  Real s_state = von_neumann_entropy(rho);
  Real s_proj = von_neumann_entropy(projected);
  Real gamma = s_proj - s_state;
  RelativeEntropy chain = relative_entropy(rho, projected);
  if (chain.infinite || std::abs(chain.bits - gamma) > 1e-8)
    throw invariant_error("asymmetry: entropy-difference and relative-entropy routes disagree");
  return AsymmetryValue{gamma, s_proj, s_state, std::move(action_label)};
}

}  // namespace

AsymmetryValue rel_ent_asymmetry(const SymmetryAction& action,
                                 const DensityOperator& rho) {
  return entropy_gap(twirl(action, rho), rho, action.describe());
}

AsymmetryValue rel_ent_coherence(const EigenBlocks& blocks,
                                 const DensityOperator& rho) {
  if (blocks.dim() != rho.dim())
    throw std::invalid_argument("rel_ent_coherence: dimension mismatch");
  Matrix dephased = Matrix::Zero(rho.dim(), rho.dim());
  for (const Matrix& p : blocks.projectors) dephased.noalias() += p * rho.matrix() * p;
  return entropy_gap(DensityOperator::from_matrix(std::move(dephased)), rho,
                     "Dephasing(" + std::to_string(blocks.projectors.size()) + " blocks)");
}

Real delta_gamma(const SymmetryAction& action_in, const DensityOperator& rho_in,
                 const SymmetryAction& action_out, const DensityOperator& rho_out) {
  return rel_ent_asymmetry(action_out, rho_out).gamma -
         rel_ent_asymmetry(action_in, rho_in).gamma;
}

Real fidelity_floor(Real dgamma) {
  return std::clamp(std::exp2(-dgamma / 2), Real(0), Real(1));
}

Index twirled_rank(const SymmetryAction& action, const DensityOperator& rho) {
  SpectralDecomposition eig = hermitian_eig(twirl(action, rho).matrix());
  Real thr = support_threshold(eig.eigenvalues);
  Index rank = 0;
  for (Index i = 0; i < eig.eigenvalues.size(); ++i)
    if (eig.eigenvalues[i] > thr) ++rank;
  return rank;
}

BoundsRecord accuracy_upper_bound(Real dgamma, Index rank_dy) {
  if (rank_dy < 1)
    throw std::invalid_argument("accuracy_upper_bound: rank must be at least 1");
  BoundsRecord record;
  record.delta_gamma = dgamma;
  record.rank_DY = rank_dy;
  record.fidelity_floor = fidelity_floor(dgamma);

  const Real log_d = std::log2(static_cast<Real>(rank_dy));
  auto lhs = [log_d](Real eps) { return eps * log_d + 2 * binary_entropy(eps / 2); };

  if (dgamma <= 0) {
    record.epsilon_floor = 0;
  } else if (dgamma >= lhs(1.0)) {
    record.epsilon_floor = 1;
  } else {
    // lhs is strictly increasing on [0, 1]; bisect to 1e-12.
    Real lo = 0, hi = 1;
    for (int iter = 0; iter < 100 && hi - lo > 1e-12; ++iter) {
      Real mid = 0.5 * (lo + hi);
      (lhs(mid) < dgamma ? lo : hi) = mid;
    }
    record.epsilon_floor = 0.5 * (lo + hi);
  }

  if (dgamma <= 0) {
    record.epsilon_floor_explicit = 0;
  } else if (log_d == 0) {
    record.epsilon_floor_explicit = 1;
  } else {
    Real root = dgamma / (3 * log_d);
    record.epsilon_floor_explicit = std::clamp(root * root, Real(0), Real(1));
  }

  record.fidelity_ceiling = 1 - record.epsilon_floor / 2;
  record.binding =
      record.epsilon_floor >= record.epsilon_floor_explicit ? "implicit" : "explicit";
  return record;
}

DensityOperator build_sigma_crs(const SymmetryAction& action,
                                const DensityOperator& tau,
                                const DensityOperator& sigma) {
  if (action.kind() != ActionKind::FiniteGroup)
    throw std::invalid_argument("build_sigma_crs: finite group actions only");
  if (action.systems().size() != 2)
    throw std::invalid_argument("build_sigma_crs: the action must cover exactly R and S");
  Index dim_r = action.systems()[0].dim;
  Index dim_s = action.systems()[1].dim;
  if (tau.dim() != dim_r || sigma.dim() != dim_s)
    throw std::invalid_argument("build_sigma_crs: state dimensions do not match the action");
  Index order = action.group_order();
  if (order * dim_r * dim_s > kSigmaCrsGuard)
    throw std::invalid_argument("build_sigma_crs: size guard exceeded");

  Index block = dim_r * dim_s;
  Matrix out = Matrix::Zero(order * block, order * block);
  for (Index g = 0; g < order; ++g) {
    const Matrix& ur = action.element(g, 0);
    const Matrix& us = action.element(g, 1);
    Matrix rotated = tensor(ur * tau.matrix() * ur.adjoint(),
                            us * sigma.matrix() * us.adjoint());
    out.block(g * block, g * block, block, block) = rotated / Complex(Real(order));
  }
  return DensityOperator::from_matrix(std::move(out));
}

Real conditional_mutual_information(const DensityOperator& state,
                                    const std::vector<Index>& dims) {
  if (dims.size() != 3)
    throw std::invalid_argument("conditional_mutual_information: dims must be {C, R, S}");
  Real s_cr = von_neumann_entropy(partial_trace(state, dims, {0, 1}));
  Real s_rs = von_neumann_entropy(partial_trace(state, dims, {1, 2}));
  Real s_crs = von_neumann_entropy(state);
  Real s_r = von_neumann_entropy(partial_trace(state, dims, {1}));
  return s_cr + s_rs - s_crs - s_r;
}

Real mutual_information(const DensityOperator& state, const std::vector<Index>& dims,
                        const std::vector<Index>& part_a,
                        const std::vector<Index>& part_b) {
  std::vector<Index> joint;
  joint.reserve(part_a.size() + part_b.size());
  joint.insert(joint.end(), part_a.begin(), part_a.end());
  joint.insert(joint.end(), part_b.begin(), part_b.end());
  std::sort(joint.begin(), joint.end());
  for (size_t i = 0; i + 1 < joint.size(); ++i)
    if (joint[i] == joint[i + 1])
      throw std::invalid_argument("mutual_information: parts must be disjoint");
  Real s_a = von_neumann_entropy(partial_trace(state, dims, part_a));
  Real s_b = von_neumann_entropy(partial_trace(state, dims, part_b));
  Real s_ab = von_neumann_entropy(partial_trace(state, dims, joint));
  return s_a + s_b - s_ab;
}

}  // namespace asymcat
