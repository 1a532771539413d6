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

#include "asymcat/recovery.hpp"

#include <algorithm>
#include <cmath>

#include "asymcat/parallel.hpp"

namespace asymcat {

namespace {

// Kraus set of the support-limited Petz map {sqrt(kappa) K' N(kappa)^{-1/2}}.
std::vector<Matrix> petz_kraus(const Channel& n, const DensityOperator& kappa,
                               const Matrix& inv_sqrt_nk) {
  Matrix sqrt_kappa = matrix_sqrt_psd(kappa.matrix());
  std::vector<Matrix> kraus;
  kraus.reserve(n.kraus().size());
  for (const Matrix& k : n.kraus())
    kraus.push_back(sqrt_kappa * k.adjoint() * inv_sqrt_nk);
  return kraus;
}

Matrix forward_image(const Channel& n, const DensityOperator& kappa) {
  if (kappa.dim() != n.in_dim())
    throw std::invalid_argument("petz_map: anchor state does not match the channel input");
  return n.apply_matrix(kappa.matrix());
}

}  // namespace

Channel petz_map(const Channel& n, const DensityOperator& kappa) {
  Matrix nk = forward_image(n, kappa);
  Matrix inv_sqrt_nk = matrix_inv_sqrt_psd(nk);
  Matrix domain = support_projector(nk);
  return extend_to_total(petz_kraus(n, kappa, inv_sqrt_nk), domain, kappa,
                         "petz[" + n.name() + "]");
}

Channel rotated_petz(const Channel& n, const DensityOperator& kappa, Real t) {
  if (t == 0) return petz_map(n, kappa);
  Matrix nk = forward_image(n, kappa);
  Matrix inv_sqrt_nk = matrix_inv_sqrt_psd(nk);
  Matrix domain = support_projector(nk);
  Channel total = extend_to_total(petz_kraus(n, kappa, inv_sqrt_nk), domain, kappa,
                                  "rotated_petz[" + n.name() + "]");
  Matrix left = matrix_imaginary_power(kappa.matrix(), t);    // kappa^{it}
  Matrix right = matrix_imaginary_power(nk, -t);              // N(kappa)^{-it}
  std::vector<Matrix> kraus;
  kraus.reserve(total.kraus().size());
  for (const Matrix& k : total.kraus()) kraus.push_back(left * k * right);
  return Channel(std::move(kraus), total.name(), Channel::Tp::Full, domain);
}

Channel rotated_petz(const RecoverySpec& spec) {
  return rotated_petz(spec.forward, spec.anchor, spec.t);
}

Channel catalytic_recovery(const SymmetryAction& action, const DensityOperator& tau,
                           const DensityOperator& sigma, Real t) {
  const auto& systems = action.systems();
  std::vector<Index> dims;
  dims.reserve(systems.size());
  for (const auto& s : systems) dims.push_back(s.dim);

  // Split the registered systems between tau (leading) and sigma (trailing).
  Index prod = 1;
  size_t split = 0;
  while (split < dims.size() && prod < tau.dim()) prod *= dims[split++];
  if (prod != tau.dim())
    throw std::invalid_argument("catalytic_recovery: tau does not align with the systems");
  Index rest = 1;
  for (size_t s = split; s < dims.size(); ++s) rest *= dims[s];
  if (rest != sigma.dim() || split == dims.size())
    throw std::invalid_argument("catalytic_recovery: sigma does not align with the systems");

  DensityOperator joint =
      DensityOperator::from_matrix(tensor(tau.matrix(), sigma.matrix()));
  DensityOperator kappa = twirl(action, joint);
  std::vector<Index> keep(split);
  for (size_t s = 0; s < split; ++s) keep[s] = static_cast<Index>(s);
  Channel n = partial_trace_channel(dims, keep);
  return rotated_petz(n, kappa, t);
}

//============================================================================
// RotatedPetzEvaluator
//============================================================================

RotatedPetzEvaluator::RotatedPetzEvaluator(const Channel& n, const DensityOperator& kappa)
    : n_(n), kappa_mat_(kappa.matrix()) {
  Matrix nk = forward_image(n, kappa);
  sqrt_kappa_ = matrix_sqrt_psd(kappa_mat_);
  inv_sqrt_nk_ = matrix_inv_sqrt_psd(nk);
  supp_nk_ = support_projector(nk);
  kappa_eig_ = hermitian_eig(kappa_mat_);
  nk_eig_ = hermitian_eig(nk);
  thr_kappa_ = support_threshold(kappa_eig_.eigenvalues);
  thr_nk_ = support_threshold(nk_eig_.eigenvalues);
}

Matrix RotatedPetzEvaluator::recover_matrix(Real t, const Matrix& x) const {
  auto imaginary_power = [](const SpectralDecomposition& eig, Real thr, Real s) {
    Vector phases(eig.eigenvalues.size());
    for (Index i = 0; i < eig.eigenvalues.size(); ++i)
      phases[i] = eig.eigenvalues[i] > thr
                      ? std::exp(Complex(0, s * std::log(eig.eigenvalues[i])))
                      : Complex(1);
    return Matrix(eig.eigenvectors * phases.asDiagonal() * eig.eigenvectors.adjoint());
  };

  Matrix x1 = x;
  if (t != 0) {
    Matrix v = imaginary_power(nk_eig_, thr_nk_, -t);  // N(kappa)^{-it}
    x1 = v * x * v.adjoint();
  }
  Matrix x2 = inv_sqrt_nk_ * x1 * inv_sqrt_nk_;
  Matrix x3 = Matrix::Zero(n_.in_dim(), n_.in_dim());
  for (const Matrix& k : n_.kraus()) x3.noalias() += k.adjoint() * x2 * k;
  Matrix x4 = sqrt_kappa_ * x3 * sqrt_kappa_;
  if (t != 0) {
    Matrix u = imaginary_power(kappa_eig_, thr_kappa_, t);  // kappa^{it}
    x4 = u * x4 * u.adjoint();
  }
  // Weight outside supp(N(kappa)) is routed to the anchor, matching the
  // total-channel extension used by rotated_petz.
  Complex leak = x.trace() - (supp_nk_ * x).trace();
  if (std::abs(leak) > 0) x4.noalias() += leak * kappa_mat_;
  return x4;
}

DensityOperator RotatedPetzEvaluator::recover(Real t, const DensityOperator& probe) const {
  return DensityOperator::from_matrix(recover_matrix(t, probe.matrix()));
}

//============================================================================
// best_t_search
//============================================================================

RecoveryResult best_t_search(const Channel& n, const DensityOperator& kappa,
                             const DensityOperator& probe, const DensityOperator& target,
                             const TSearchOptions& options, Real floor) {
  if (options.grid_points < 2 || options.t_max <= 0)
    throw std::invalid_argument("best_t_search: bad grid options");
  RotatedPetzEvaluator evaluator(n, kappa);
  auto fidelity_at = [&](Real t) {
    return fidelity(evaluator.recover(t, probe), target);
  };

  const Index points = options.grid_points;
  std::vector<Real> ts(static_cast<size_t>(points));
  std::vector<Real> fs(static_cast<size_t>(points));
  const Real step = 2 * options.t_max / static_cast<Real>(points - 1);
  for (Index i = 0; i < points; ++i) ts[static_cast<size_t>(i)] = -options.t_max + step * i;
  parallel_for(static_cast<size_t>(points),
               [&](std::size_t i) { fs[i] = fidelity_at(ts[i]); });

  // Earliest grid point wins ties at 1e-12: keeps the selection deterministic
  // even if the scan ran on several threads.
  size_t best = 0;
  for (size_t i = 1; i < ts.size(); ++i)
    if (fs[i] > fs[best] + 1e-12) best = i;

  Real best_t = ts[best];
  Real best_f = fs[best];

  // Golden-section refinement around the winning cell.
  {
    const Real gr = (std::sqrt(5.0) - 1) / 2;
    Real a = best_t - step, b = best_t + step;
    Real c = b - gr * (b - a), d = a + gr * (b - a);
    Real fc = fidelity_at(c), fd = fidelity_at(d);
    while (b - a > options.refine_dt) {
      if (fc > fd) {
        b = d; d = c; fd = fc;
        c = b - gr * (b - a);
        fc = fidelity_at(c);
      } else {
        a = c; c = d; fc = fd;
        d = a + gr * (b - a);
        fd = fidelity_at(d);
      }
    }
    Real tm = 0.5 * (a + b);
    Real fm = fidelity_at(tm);
    if (fm > best_f + 1e-12) {
      best_f = fm;
      best_t = tm;
    }
  }

  // t = 0 is always a candidate; the result is guaranteed at least its value.
  Real f0 = fidelity_at(0);
  if (f0 >= best_f) {
    best_f = f0;
    best_t = 0;
  }

  RecoveryResult result;
  result.achieved_fidelity = best_f;
  result.best_t = best_t;
  result.fidelity_floor = floor;
  result.margin = best_f - floor;
  result.grid_points = points;
  result.recovered = evaluator.recover(best_t, probe);
  return result;
}

//============================================================================
// Verification harnesses
//============================================================================

namespace {

RecoveryResult search_with_densify(const Channel& n, const DensityOperator& kappa,
                                   const DensityOperator& probe,
                                   const DensityOperator& target,
                                   const TSearchOptions& options, Real floor) {
  RecoveryResult result = best_t_search(n, kappa, probe, target, options, floor);
  if (result.margin < -tol::floor_slack) {
    // One retry on a 4x denser grid before declaring the floor violated.
    TSearchOptions dense = options;
    dense.grid_points = options.grid_points * 4;
    result = best_t_search(n, kappa, probe, target, dense, floor);
  }
  return result;
}

}  // namespace

RecoveryResult verify_reversibility(const Channel& f, const SymmetryAction& action_in,
                                    const SymmetryAction& action_out,
                                    const DensityOperator& rho,
                                    const TSearchOptions& options) {
  CovarianceReport forward_cov = check_covariance(f, action_in, action_out, 1e-7);
  if (!forward_cov.covariant)
    throw invariant_error("verify_reversibility: forward channel is not covariant"
                          " (violation " + std::to_string(forward_cov.max_violation) + ")");

  AsymmetryValue gamma_in = rel_ent_asymmetry(action_in, rho);
  DensityOperator image = apply(f, rho);
  AsymmetryValue gamma_out = rel_ent_asymmetry(action_out, image);
  Real dgamma = gamma_in.gamma - gamma_out.gamma;
  Real floor = fidelity_floor(dgamma);

  DensityOperator kappa = twirl(action_in, rho);
  RecoveryResult result = search_with_densify(f, kappa, image, rho, options, floor);
  if (result.margin < -tol::floor_slack)
    throw floor_error("verify_reversibility: recovery fidelity " +
                      std::to_string(result.achieved_fidelity) + " below floor " +
                      std::to_string(floor));

  Channel recovery = rotated_petz(f, kappa, result.best_t);
  CovarianceReport recovery_cov = check_covariance(recovery, action_out, action_in, 1e-7);
  if (!recovery_cov.covariant)
    throw invariant_error("verify_reversibility: recovery channel lost covariance"
                          " (violation " + std::to_string(recovery_cov.max_violation) + ")");
  return result;
}

RecoveryResult verify_dephasing_recovery(const Channel& f, const EigenBlocks& blocks,
                                         const DensityOperator& rho,
                                         const TSearchOptions& options) {
  Channel dephaser = dephasing_map(blocks);
  CovarianceReport forward_cov = check_dephasing_covariance(f, dephaser, 1e-7);
  if (!forward_cov.covariant)
    throw invariant_error("verify_dephasing_recovery: channel is not dephasing-covariant"
                          " (violation " + std::to_string(forward_cov.max_violation) + ")");

  AsymmetryValue lambda_in = rel_ent_coherence(blocks, rho);
  DensityOperator image = apply(f, rho);
  AsymmetryValue lambda_out = rel_ent_coherence(blocks, image);
  Real dlambda = lambda_in.gamma - lambda_out.gamma;
  Real floor = fidelity_floor(dlambda);

  DensityOperator kappa = apply(dephaser, rho);
  RecoveryResult result = search_with_densify(f, kappa, image, rho, options, floor);
  if (result.margin < -tol::floor_slack)
    throw floor_error("verify_dephasing_recovery: recovery fidelity " +
                      std::to_string(result.achieved_fidelity) + " below floor " +
                      std::to_string(floor));

  Channel recovery = rotated_petz(f, kappa, result.best_t);
  CovarianceReport recovery_cov = check_dephasing_covariance(recovery, dephaser, 1e-7);
  if (!recovery_cov.covariant)
    throw invariant_error(
        "verify_dephasing_recovery: recovery channel lost dephasing-covariance"
        " (violation " + std::to_string(recovery_cov.max_violation) + ")");
  return result;
}

}  // namespace asymcat
