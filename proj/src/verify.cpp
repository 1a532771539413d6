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

#include "asymcat/verify.hpp"

#include <algorithm>
#include <cmath>

#include "asymcat/showcase.hpp"

namespace asymcat {

namespace {

PropertyResult make_result(std::string name, int instances, Real max_violation,
                           Real tolerance) {
  PropertyResult r;
  r.name = std::move(name);
  r.instances = instances;
  r.max_violation = max_violation;
  r.tolerance = tolerance;
  r.pass = max_violation <= tolerance;
  return r;
}

Real max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

//============================================================================
// Generators
//============================================================================

SymmetryAction random_cyclic_action(Rng& rng, Index dim, Index order) {
  Matrix v = rng.unitary(dim);
  Vector phases(dim);
  bool nontrivial = false;
  std::vector<Index> exponents(static_cast<size_t>(dim));
  for (Index i = 0; i < dim; ++i) {
    exponents[static_cast<size_t>(i)] = static_cast<Index>(rng.integer(static_cast<std::uint64_t>(order)));
    if (exponents[static_cast<size_t>(i)] != 0) nontrivial = true;
  }
  if (!nontrivial) exponents[0] = 1;  // avoid the trivial representation
  std::vector<std::vector<Matrix>> elements;
  for (Index g = 0; g < order; ++g) {
    for (Index i = 0; i < dim; ++i) {
      Real angle = 2 * M_PI * static_cast<Real>(g * exponents[static_cast<size_t>(i)]) /
                   static_cast<Real>(order);
      phases[i] = std::exp(Complex(0, angle));
    }
    elements.push_back({v * phases.asDiagonal() * v.adjoint()});
  }
  // Element 0 is exactly the identity by construction of the phases.
  elements[0] = {Matrix::Identity(dim, dim)};
  return SymmetryAction::finite_group({{"X", dim}}, std::move(elements));
}

SymmetryAction random_finite_action(Rng& rng, Index dim) {
  Index order = 2 + static_cast<Index>(rng.integer(5));
  return random_cyclic_action(rng, dim, order);
}

SymmetryAction random_hamiltonian_action(Rng& rng, Index dim) {
  Matrix v = rng.unitary(dim);
  RealVector levels(dim);
  for (Index i = 0; i < dim; ++i) levels[i] = static_cast<Real>(rng.integer(4));
  Matrix h = v * levels.cast<Complex>().asDiagonal() * v.adjoint();
  h = Complex(0.5) * (h + h.adjoint());
  return SymmetryAction::hamiltonian_generated({{"X", dim}}, {h});
}

Channel random_channel(Rng& rng, Index in_dim, Index out_dim, Index kraus_count) {
  std::vector<Matrix> kraus;
  Matrix gram = Matrix::Zero(in_dim, in_dim);
  for (Index i = 0; i < kraus_count; ++i) {
    kraus.push_back(rng.ginibre(out_dim, in_dim));
    gram += kraus.back().adjoint() * kraus.back();
  }
  Matrix normalizer = matrix_inv_sqrt_psd(gram);
  for (Matrix& k : kraus) k = k * normalizer;
  return Channel(std::move(kraus), "random");
}

Channel random_covariant_channel(Rng& rng, const SymmetryAction& action) {
  Index dim = action.total_dim();
  Channel raw = random_channel(rng, dim, dim, 2 + static_cast<Index>(rng.integer(2)));
  return symmetrize(raw, action, action);
}

EigenBlocks random_blocks(Rng& rng, Index dim, Index block_count) {
  if (block_count < 1 || block_count > dim)
    throw std::invalid_argument("random_blocks: bad block count");
  Matrix v = rng.unitary(dim);
  // Random composition of dim into block_count positive parts.
  std::vector<Index> sizes(static_cast<size_t>(block_count), 1);
  for (Index extra = dim - block_count; extra > 0; --extra)
    sizes[static_cast<size_t>(rng.integer(static_cast<std::uint64_t>(block_count)))]++;
  EigenBlocks blocks;
  Index offset = 0;
  for (Index b = 0; b < block_count; ++b) {
    Matrix cols = v.middleCols(offset, sizes[static_cast<size_t>(b)]);
    blocks.projectors.push_back(cols * cols.adjoint());
    blocks.labels.push_back(static_cast<Real>(b));
    offset += sizes[static_cast<size_t>(b)];
  }
  return blocks;
}

SymmetryAction block_sign_action(const EigenBlocks& blocks) {
  Index m = static_cast<Index>(blocks.projectors.size());
  if (m > 10) throw std::invalid_argument("block_sign_action: too many blocks");
  Index dim = blocks.dim();
  std::vector<std::vector<Matrix>> elements;
  for (Index mask = 0; mask < (Index(1) << m); ++mask) {
    Matrix u = Matrix::Zero(dim, dim);
    for (Index b = 0; b < m; ++b)
      u += ((mask >> b) & 1 ? Complex(-1) : Complex(1)) * blocks.projectors[static_cast<size_t>(b)];
    elements.push_back({std::move(u)});
  }
  return SymmetryAction::finite_group({{"X", dim}}, std::move(elements));
}

Channel random_dephasing_covariant_channel(Rng& rng, const EigenBlocks& blocks) {
  // The uniform twirl over the per-block sign group is exactly the dephaser,
  // so symmetrizing over it commutes the channel with the dephasing map.
  SymmetryAction signs = block_sign_action(blocks);
  Channel raw = random_channel(rng, blocks.dim(), blocks.dim(),
                               2 + static_cast<Index>(rng.integer(2)));
  return symmetrize(raw, signs, signs);
}

//============================================================================
// Core properties
//============================================================================

std::vector<PropertyResult> prop_eig_reconstruction(std::uint64_t seed, int instances) {
  Rng rng(seed);
  const Index dims[] = {2, 3, 4, 5, 8, 13, 21, 34, 55, 81};
  Real worst = 0;
  for (int i = 0; i < instances; ++i) {
    Index dim = dims[i % (sizeof(dims) / sizeof(dims[0]))];
    Matrix h = rng.hermitian(dim);
    SpectralDecomposition eig = hermitian_eig(h);
    Real residual = eig.reconstruction_residual(h) / std::max(h.norm(), Real(1e-300));
    Real ortho = max_abs(eig.eigenvectors.adjoint() * eig.eigenvectors -
                         Matrix::Identity(dim, dim));
    worst = std::max({worst, residual, ortho * Real(0.1)});
  }
  return {make_result("eig_reconstruction", instances, worst, 1e-9)};
}

std::vector<PropertyResult> prop_density_invariants(std::uint64_t seed, int instances) {
  Rng rng(seed);
  int failures = 0;
  for (int i = 0; i < instances; ++i) {
    Index dim = 2 + static_cast<Index>(rng.integer(15));
    Index rank = 1 + static_cast<Index>(rng.integer(static_cast<std::uint64_t>(dim)));
    try {
      rng.density(dim, rank).validate();
    } catch (const invariant_error&) {
      ++failures;
    }
  }
  return {make_result("density_invariants", instances, Real(failures), 0)};
}

std::vector<PropertyResult> prop_fidelity_trace_bound(std::uint64_t seed, int instances) {
  Rng rng(seed);
  Real worst = 0;
  for (int i = 0; i < instances; ++i) {
    Index dim = 2 + static_cast<Index>(rng.integer(7));
    DensityOperator a = rng.density(dim);
    DensityOperator b = (i % 3 == 0) ? DensityOperator::pure(rng.pure_state(dim))
                                     : rng.density(dim);
    Real gap = 2 * (1 - fidelity(a, b)) - trace_distance(a, b);
    worst = std::max(worst, gap);
    worst = std::max(worst, std::abs(fidelity(a, b) - fidelity(b, a)) * Real(10));
  }
  return {make_result("fidelity_trace_bound", instances, worst, 1e-8)};
}

std::vector<PropertyResult> prop_relent_properties(std::uint64_t seed, int instances) {
  Rng rng(seed);
  int failures = 0;
  Real most_negative = 0;
  for (int i = 0; i < instances; ++i) {
    Index dim = 2 + static_cast<Index>(rng.integer(5));
    DensityOperator rho = rng.density(dim);
    bool same = (i % 2 == 0);
    DensityOperator sigma = same ? rho : rng.density(dim);
    RelativeEntropy re = relative_entropy(rho, sigma);
    if (re.infinite) {
      ++failures;  // full-rank sigma cannot give an infinite value
      continue;
    }
    most_negative = std::min(most_negative, re.bits);
    Real dist = trace_distance(rho, sigma);
    bool re_zero = re.bits <= 1e-8;
    bool close = dist <= 1e-6;
    if (re_zero != close) ++failures;
  }
  Real violation = std::max(Real(failures), -most_negative > 1e-8 ? -most_negative : Real(0));
  return {make_result("relent_nonneg_zero_iff", instances, violation, 0.5)};
}

std::vector<PropertyResult> prop_twirl_properties(std::uint64_t seed, int instances) {
  Rng rng(seed);
  Real worst_idem = 0, worst_trace = 0, worst_commute = 0;
  for (int i = 0; i < instances; ++i) {
    Index dim = 2 + static_cast<Index>(rng.integer(5));
    bool finite = (i % 2 == 0);
    SymmetryAction action = finite ? random_finite_action(rng, dim)
                                   : random_hamiltonian_action(rng, dim);
    DensityOperator rho = rng.density(dim);
    DensityOperator once = twirl(action, rho);
    DensityOperator twice = twirl(action, once);
    worst_idem = std::max(worst_idem, trace_distance(twice, once));
    worst_trace = std::max(worst_trace, std::abs(std::real(once.matrix().trace()) - 1));
    if (finite) {
      for (Index g = 0; g < action.group_order(); ++g) {
        Matrix u = action.element_unitary(g);
        worst_commute = std::max(worst_commute, max_abs(once.matrix() * u - u * once.matrix()));
      }
    } else {
      Matrix h = action.joint_generator();
      worst_commute = std::max(worst_commute, max_abs(once.matrix() * h - h * once.matrix()));
    }
  }
  return {make_result("twirl_idempotent", instances, worst_idem, 1e-9),
          make_result("twirl_trace_preserving", instances, worst_trace, 1e-9),
          make_result("twirl_output_invariant", instances, worst_commute, 1e-8)};
}

std::vector<PropertyResult> prop_sym_projector_invariance() {
  const std::pair<Index, Index> cases[] = {{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {4, 2}};
  Real worst = 0;
  int count = 0;
  for (auto [d, r] : cases) {
    Matrix proj = symmetric_subspace_projector(d, r);
    worst = std::max(worst, max_abs(proj * proj - proj));
    worst = std::max(worst, max_abs(proj - proj.adjoint()));
    // Invariance under every transposition generates the full group.
    Index total = proj.rows();
    for (Index swap_at = 0; swap_at + 1 < r; ++swap_at) {
      Matrix perm = Matrix::Zero(total, total);
      for (Index col = 0; col < total; ++col) {
        std::vector<Index> digits(static_cast<size_t>(r));
        Index rem = col;
        for (Index q = r - 1; q >= 0; --q) {
          digits[static_cast<size_t>(q)] = rem % d;
          rem /= d;
        }
        std::swap(digits[static_cast<size_t>(swap_at)], digits[static_cast<size_t>(swap_at + 1)]);
        Index row = 0;
        for (Index q = 0; q < r; ++q) row = row * d + digits[static_cast<size_t>(q)];
        perm(row, col) = Complex(1);
      }
      worst = std::max(worst, max_abs(proj * perm - proj));
    }
    // Rank matches the closed-form dimension.
    SpectralDecomposition eig = hermitian_eig(proj);
    Index rank = 0;
    for (Index i = 0; i < eig.eigenvalues.size(); ++i)
      if (eig.eigenvalues[i] > 0.5) ++rank;
    if (rank != sym_dim(d, r)) worst = std::max(worst, Real(1));
    ++count;
  }
  return {make_result("sym_projector_invariance", count, worst, 1e-9)};
}

std::vector<PropertyResult> prop_channel_algebra(std::uint64_t seed, int instances) {
  Rng rng(seed);
  Real worst_adjoint = 0, worst_roundtrip = 0, worst_involution = 0, worst_compose = 0;
  for (int i = 0; i < instances; ++i) {
    Index in_dim = 2 + static_cast<Index>(rng.integer(3));
    Index out_dim = 2 + static_cast<Index>(rng.integer(3));
    Channel e = random_channel(rng, in_dim, out_dim, 3);
    Channel adj = adjoint(e);
    Matrix x = rng.hermitian(out_dim);
    Matrix y = rng.hermitian(in_dim);
    Complex lhs = (adj.apply_matrix(x) * y).trace();
    Complex rhs = (x * e.apply_matrix(y)).trace();
    worst_adjoint = std::max(worst_adjoint, std::abs(lhs - rhs));
    worst_roundtrip = std::max(
        worst_roundtrip,
        choi_distance(channel_from_choi(e.choi(), in_dim, out_dim), e));
    worst_involution = std::max(worst_involution, choi_distance(adjoint(adj), e));
    Channel f = random_channel(rng, out_dim, in_dim, 2);
    Channel fe = compose(f, e);
    DensityOperator rho = rng.density(in_dim);
    worst_compose = std::max(
        worst_compose,
        trace_distance(apply(fe, rho), apply(f, apply(e, rho))));
  }
  return {make_result("adjoint_trace_identity", instances, worst_adjoint, 1e-9),
          make_result("choi_roundtrip", instances, worst_roundtrip, 1e-8),
          make_result("adjoint_involution", instances, worst_involution, 1e-10),
          make_result("compose_matches_apply", instances, worst_compose, 1e-10)};
}

std::vector<PropertyResult> prop_covariance_convention(std::uint64_t seed, int instances) {
  // Self-consistency of the Hamiltonian covariance check: the structural
  // commutator row and the sampled-time rows must agree on the verdict, for
  // both covariant and non-covariant channels.
  Rng rng(seed);
  int disagreements = 0;
  for (int i = 0; i < instances; ++i) {
    Index dim = 2 + static_cast<Index>(rng.integer(3));
    SymmetryAction action = random_hamiltonian_action(rng, dim);
    Channel candidate = (i % 2 == 0)
        ? twirl_channel(action)
        : Channel::unitary(rng.unitary(dim), "probe");
    CovarianceReport report = check_covariance(candidate, action, action, 1e-8);
    Real structural = report.violations.front();
    Real sampled = 0;
    for (size_t r = 1; r < report.violations.size(); ++r)
      sampled = std::max(sampled, report.violations[r]);
    bool structural_ok = structural <= 1e-8;
    bool sampled_ok = sampled <= 1e-8;
    if (structural_ok != sampled_ok) ++disagreements;
  }
  return {make_result("covariance_convention_consistency", instances,
                      Real(disagreements), 0)};
}

//============================================================================
// Asymmetry properties
//============================================================================

namespace {

SymmetryAction mixed_action(Rng& rng, Index dim, int selector) {
  return (selector % 2 == 0) ? random_finite_action(rng, dim)
                             : random_hamiltonian_action(rng, dim);
}

}  // namespace

std::vector<PropertyResult> prop_eq5_chain(std::uint64_t seed, int instances,
                                           Index max_dim) {
  Rng rng(seed);
  Real worst = 0;
  for (int i = 0; i < instances; ++i) {
    Index dim = 2 + static_cast<Index>(rng.integer(static_cast<std::uint64_t>(max_dim - 1)));
    SymmetryAction action = mixed_action(rng, dim, i);
    DensityOperator rho = (i % 3 == 0) ? DensityOperator::pure(rng.pure_state(dim))
                                       : rng.density(dim);
    DensityOperator twirled = twirl(action, rho);
    Real gap = von_neumann_entropy(twirled) - von_neumann_entropy(rho);
    RelativeEntropy re = relative_entropy(rho, twirled);
    Real violation = re.infinite ? Real(1) : std::abs(gap - re.bits);
    worst = std::max(worst, violation);
  }
  return {make_result("eq5_entropy_chain", instances, worst, 1e-8)};
}

std::vector<PropertyResult> prop_gamma_zero_iff(std::uint64_t seed, int instances) {
  Rng rng(seed);
  int failures = 0;
  for (int i = 0; i < instances; ++i) {
    Index dim = 2 + static_cast<Index>(rng.integer(5));
    SymmetryAction action = mixed_action(rng, dim, i);
    DensityOperator rho = rng.density(dim);
    if (i % 2 == 0) rho = twirl(action, rho);  // manufactured symmetric instance
    Real gamma = rel_ent_asymmetry(action, rho).gamma;
    Real dist = trace_distance(twirl(action, rho), rho);
    if (gamma < -1e-9) ++failures;
    bool gamma_zero = gamma <= 1e-8;
    bool fixed_point = dist <= 1e-6;
    if (gamma_zero != fixed_point) ++failures;
  }
  return {make_result("gamma_zero_iff_symmetric", instances, Real(failures), 0)};
}

std::vector<PropertyResult> prop_convexity(std::uint64_t seed, int instances) {
  Rng rng(seed);
  Real worst = 0;
  for (int i = 0; i < instances; ++i) {
    Index dim = 2 + static_cast<Index>(rng.integer(4));
    SymmetryAction action = mixed_action(rng, dim, i);
    DensityOperator a = rng.density(dim);
    DensityOperator b = rng.density(dim);
    Real p = rng.uniform();
    DensityOperator mix = DensityOperator::from_matrix(
        Complex(p) * a.matrix() + Complex(1 - p) * b.matrix());
    Real lhs = rel_ent_asymmetry(action, mix).gamma;
    Real rhs = p * rel_ent_asymmetry(action, a).gamma +
               (1 - p) * rel_ent_asymmetry(action, b).gamma;
    worst = std::max(worst, lhs - rhs);
  }
  return {make_result("gamma_convexity", instances, worst, 1e-8)};
}

std::vector<PropertyResult> prop_group_cap(std::uint64_t seed, int instances) {
  Rng rng(seed);
  Real worst = 0;
  for (int i = 0; i < instances; ++i) {
    Index dim = 2 + static_cast<Index>(rng.integer(5));
    SymmetryAction action = random_finite_action(rng, dim);
    DensityOperator rho = (i % 2 == 0) ? DensityOperator::pure(rng.pure_state(dim))
                                       : rng.density(dim);
    Real gamma = rel_ent_asymmetry(action, rho).gamma;
    worst = std::max(worst, gamma - std::log2(static_cast<Real>(action.group_order())));
  }
  return {make_result("gamma_group_cap", instances, worst, 1e-8)};
}

std::vector<PropertyResult> prop_copy_growth(std::uint64_t seed, int instances) {
  Rng rng(seed);
  Real worst = 0;
  Matrix pauli_z(2, 2);
  pauli_z << Complex(1), Complex(0), Complex(0), Complex(-1);
  for (int i = 0; i < instances; ++i) {
    DensityOperator omega = rng.density(2);
    for (int n = 1; n <= 5; ++n) {
      std::vector<SymmetryAction::System> systems;
      std::vector<Matrix> identity_row, z_row;
      Matrix joint = Matrix::Identity(1, 1);
      for (int c = 0; c < n; ++c) {
        systems.push_back({"Q" + std::to_string(c), 2});
        identity_row.push_back(Matrix::Identity(2, 2));
        z_row.push_back(pauli_z);
        joint = tensor(joint, omega.matrix());
      }
      SymmetryAction action = SymmetryAction::finite_group(
          std::move(systems), {identity_row, z_row});
      Real gamma = rel_ent_asymmetry(action, DensityOperator::from_matrix(joint)).gamma;
      worst = std::max(worst, gamma - std::log2(static_cast<Real>(n + 1)));
    }
  }
  return {make_result("gamma_copy_growth", instances, worst, 1e-8)};
}

std::vector<PropertyResult> prop_monotonicity(std::uint64_t seed, int instances) {
  Rng rng(seed);
  Real worst = 0;
  Real best_decrease = 0;
  for (int i = 0; i < instances; ++i) {
    Index dim = 2 + static_cast<Index>(rng.integer(5));
    SymmetryAction action = random_finite_action(rng, dim);
    Channel e = [&]() {
      switch (i % 4) {
        case 0:
          return random_covariant_channel(rng, action);
        case 1:
          return symmetrize(Channel::unitary(rng.unitary(dim), "u"), action, action);
        case 2: {
          // Replace channel; symmetrized it erases all asymmetry.
          DensityOperator target = rng.density(dim);
          SpectralDecomposition eig = hermitian_eig(target.matrix());
          std::vector<Matrix> kraus;
          for (Index j = 0; j < dim; ++j)
            for (Index l = 0; l < dim; ++l)
              if (eig.eigenvalues[j] > 1e-14)
                kraus.push_back(std::sqrt(eig.eigenvalues[j]) * eig.eigenvectors.col(j) *
                                Matrix::Identity(dim, dim).col(l).adjoint());
          return symmetrize(Channel(std::move(kraus), "replace"), action, action);
        }
        default:
          return twirl_channel(action);
      }
    }();
    DensityOperator rho = (i % 3 == 0) ? DensityOperator::pure(rng.pure_state(dim))
                                       : rng.density(dim, 1 + static_cast<Index>(rng.integer(2)));
    Real before = rel_ent_asymmetry(action, rho).gamma;
    Real after = rel_ent_asymmetry(action, apply(e, rho)).gamma;
    worst = std::max(worst, after - before);
    best_decrease = std::max(best_decrease, before - after);
  }
  return {make_result("gamma_monotonicity", instances, worst, 1e-8),
          make_result("gamma_strict_decrease_witness", instances,
                      std::max(Real(0), Real(0.1) - best_decrease), 0)};
}

std::vector<PropertyResult> prop_cmi_identity(std::uint64_t seed, int pairs_per_group) {
  Rng rng(seed);
  Real worst_cmi = 0, worst_mi = 0;
  int count = 0;
  for (Index order = 2; order <= 6; ++order) {
    for (int p = 0; p < pairs_per_group; ++p) {
      SymmetryAction on_r = random_cyclic_action(rng, 2, order);
      SymmetryAction on_s = random_cyclic_action(rng, 2, order);
      std::vector<std::vector<Matrix>> elements;
      for (Index g = 0; g < order; ++g)
        elements.push_back({on_r.element(g, 0), on_s.element(g, 0)});
      SymmetryAction action =
          SymmetryAction::finite_group({{"R", 2}, {"S", 2}}, std::move(elements));
      DensityOperator tau = rng.density(2);
      DensityOperator sigma = rng.density(2);

      DensityOperator big = build_sigma_crs(action, tau, sigma);
      std::vector<Index> dims{order, 2, 2};
      Real cmi = conditional_mutual_information(big, dims);

      DensityOperator joint =
          DensityOperator::from_matrix(tensor(tau.matrix(), sigma.matrix()));
      Real dgamma = rel_ent_asymmetry(action, joint).gamma -
                    rel_ent_asymmetry(action.restricted({0}), tau).gamma;
      worst_cmi = std::max(worst_cmi, std::abs(cmi - dgamma));

      Real mi_rc = mutual_information(big, dims, {0}, {1});
      worst_mi = std::max(worst_mi,
                          std::abs(mi_rc - rel_ent_asymmetry(action.restricted({0}), tau).gamma));
      ++count;
    }
  }
  return {make_result("cmi_equals_delta_gamma", count, worst_cmi, 1e-8),
          make_result("mutual_info_equals_gamma", count, worst_mi, 1e-8)};
}

//============================================================================
// Recovery properties
//============================================================================

std::vector<PropertyResult> prop_petz_exactness(std::uint64_t seed, int instances) {
  Rng rng(seed);
  Real worst = 0;
  const Real ts[] = {0.0, 0.37, 1.0};
  for (int i = 0; i < instances; ++i) {
    Index in_dim = 2 + static_cast<Index>(rng.integer(4));
    Index out_dim = 2 + static_cast<Index>(rng.integer(3));
    Channel n = random_channel(rng, in_dim, out_dim, 2 + static_cast<Index>(rng.integer(2)));
    Index rank = (i % 2 == 0) ? in_dim : 1 + static_cast<Index>(rng.integer(static_cast<std::uint64_t>(in_dim)));
    DensityOperator kappa = rng.density(in_dim, rank);
    DensityOperator image = apply(n, kappa);
    for (Real t : ts) {
      Channel recovery = rotated_petz(n, kappa, t);
      worst = std::max(worst, trace_distance(apply(recovery, image), kappa));
    }
  }
  return {make_result("petz_exactness", instances, worst, 1e-8)};
}

std::vector<PropertyResult> prop_theorem2(std::uint64_t seed, int instances) {
  Rng rng(seed);
  Real worst_floor = 0, worst_cov = 0, worst_ceiling = 0;
  for (int i = 0; i < instances; ++i) {
    Index dim = 2 + static_cast<Index>(rng.integer(4));
    SymmetryAction action = random_finite_action(rng, dim);
    Channel f = [&]() {
      switch (i % 3) {
        case 0:
          return random_covariant_channel(rng, action);
        case 1:
          return twirl_channel(action);
        default:
          return symmetrize(Channel::unitary(rng.unitary(dim), "u"), action, action);
      }
    }();
    DensityOperator rho = (i % 2 == 0) ? rng.density(dim)
                                       : DensityOperator::pure(rng.pure_state(dim));

    Real gamma_in = rel_ent_asymmetry(action, rho).gamma;
    DensityOperator image = apply(f, rho);
    Real gamma_out = rel_ent_asymmetry(action, image).gamma;
    Real dgamma = gamma_in - gamma_out;
    Real floor = fidelity_floor(dgamma);

    DensityOperator kappa = twirl(action, rho);
    RecoveryResult result = best_t_search(f, kappa, image, rho, {}, floor);
    worst_floor = std::max(worst_floor, -result.margin);

    Channel recovery = rotated_petz(f, kappa, result.best_t);
    CovarianceReport cov = check_covariance(recovery, action, action, 1e-7);
    worst_cov = std::max(worst_cov, cov.max_violation);

    // The Eq.(11) ceiling on the recovery transition image -> rho.
    BoundsRecord bounds = accuracy_upper_bound(std::max(dgamma, Real(0)),
                                               twirled_rank(action, rho));
    if (bounds.fidelity_ceiling < 1 - 1e-12)
      worst_ceiling = std::max(worst_ceiling,
                               result.achieved_fidelity - bounds.fidelity_ceiling);
  }
  return {make_result("theorem2_floor", instances, worst_floor, tol::floor_slack),
          make_result("theorem2_recovery_covariance", instances, worst_cov, 1e-7),
          make_result("theorem2_ceiling_sanity", instances, worst_ceiling, tol::floor_slack)};
}

std::vector<PropertyResult> prop_theorem4(std::uint64_t seed, int instances) {
  Rng rng(seed);
  Real worst_floor = 0, worst_cov = 0;
  for (int i = 0; i < instances; ++i) {
    Index dim = 3 + static_cast<Index>(rng.integer(3));
    Index block_count = 2 + static_cast<Index>(rng.integer(2));
    EigenBlocks blocks = random_blocks(rng, dim, block_count);
    Channel dephaser = dephasing_map(blocks);
    Channel f = [&]() {
      switch (i % 3) {
        case 0:
          return random_dephasing_covariant_channel(rng, blocks);
        case 1:
          return dephaser;
        default: {
          // Phase unitary diagonal in the block decomposition.
          Matrix u = Matrix::Zero(dim, dim);
          for (const Matrix& p : blocks.projectors)
            u += std::exp(Complex(0, 2 * M_PI * rng.uniform())) * p;
          return Channel::unitary(u, "block_phase");
        }
      }
    }();
    DensityOperator rho = (i % 2 == 0) ? rng.density(dim)
                                       : DensityOperator::pure(rng.pure_state(dim));

    Real lambda_in = rel_ent_coherence(blocks, rho).gamma;
    DensityOperator image = apply(f, rho);
    Real lambda_out = rel_ent_coherence(blocks, image).gamma;
    Real floor = fidelity_floor(lambda_in - lambda_out);

    DensityOperator kappa = apply(dephaser, rho);
    RecoveryResult result = best_t_search(f, kappa, image, rho, {}, floor);
    worst_floor = std::max(worst_floor, -result.margin);

    Channel recovery = rotated_petz(f, kappa, result.best_t);
    CovarianceReport cov = check_dephasing_covariance(recovery, dephaser, 1e-7);
    worst_cov = std::max(worst_cov, cov.max_violation);
  }
  return {make_result("theorem4_floor", instances, worst_floor, tol::floor_slack),
          make_result("theorem4_recovery_covariance", instances, worst_cov, 1e-7)};
}

std::vector<PropertyResult> prop_theorem1_clocks() {
  Real worst = 0;
  int count = 0;
  for (int t_len : {2, 3}) {
    for (int stride : {1, 2}) {
      ClockSpec spec;
      spec.T = t_len;
      spec.k = stride;
      ExperimentReport report = run_clock_experiment(spec);
      worst = std::max(worst, -report.recovery.margin);
      if (!report.check("covariant")) worst = std::max(worst, Real(1));
      ++count;
    }
  }
  return {make_result("theorem1_clock_floor", count, worst, tol::floor_slack)};
}

std::vector<PropertyResult> prop_catalytic_consistency() {
  // The reversibility harness with F = partial trace must reproduce the
  // catalytic pipeline bit for bit: both sides are the same machinery fed
  // the same floats.
  ClockSpec spec;
  spec.T = 2;
  spec.k = 1;
  DensityOperator tau = clock_state(spec);
  Vector plus = Vector::Zero(spec.dim_S);
  plus[0] = Complex(1);
  plus[1] = Complex(1);
  DensityOperator sigma = DensityOperator::pure(plus);
  DensityOperator joint = DensityOperator::from_matrix(tensor(tau.matrix(), sigma.matrix()));
  SymmetryAction action = clock_action(spec);

  std::vector<Index> dims{spec.resolved_dim_r(), spec.dim_S};
  Channel forward = partial_trace_channel(dims, {0});
  DensityOperator kappa = twirl(action, joint);
  DensityOperator probe = apply(forward, joint);

  RecoveryResult a = best_t_search(forward, kappa, probe, joint, {}, 0);

  // Same inputs reconstructed through the catalytic entry point.
  DensityOperator kappa2 = twirl(action, joint);
  RecoveryResult b = best_t_search(forward, kappa2, apply(forward, joint), joint, {}, 0);

  Real violation = 0;
  if (a.achieved_fidelity != b.achieved_fidelity) violation = 1;
  if (a.best_t != b.best_t) violation = 1;
  return {make_result("catalytic_consistency_bitwise", 1, violation, 0)};
}

//============================================================================
// Assembled suites
//============================================================================

std::vector<PropertyResult> run_core_suite(std::uint64_t seed) {
  std::vector<PropertyResult> out;
  auto absorb = [&out](std::vector<PropertyResult> part) {
    for (auto& r : part) out.push_back(std::move(r));
  };
  absorb(prop_eig_reconstruction(seed, 100));
  absorb(prop_density_invariants(seed + 1, 50));
  absorb(prop_fidelity_trace_bound(seed + 2, 50));
  absorb(prop_relent_properties(seed + 3, 30));
  absorb(prop_twirl_properties(seed + 4, 40));
  absorb(prop_sym_projector_invariance());
  absorb(prop_channel_algebra(seed + 5, 20));
  absorb(prop_covariance_convention(seed + 6, 10));
  return out;
}

std::vector<PropertyResult> run_asymmetry_suite(std::uint64_t seed) {
  std::vector<PropertyResult> out;
  auto absorb = [&out](std::vector<PropertyResult> part) {
    for (auto& r : part) out.push_back(std::move(r));
  };
  absorb(prop_eq5_chain(seed, 100, 16));
  absorb(prop_gamma_zero_iff(seed + 1, 30));
  absorb(prop_convexity(seed + 2, 30));
  absorb(prop_group_cap(seed + 3, 30));
  absorb(prop_copy_growth(seed + 4, 5));
  absorb(prop_monotonicity(seed + 5, 200));
  absorb(prop_cmi_identity(seed + 6, 10));
  return out;
}

std::vector<PropertyResult> run_recovery_suite(std::uint64_t seed) {
  std::vector<PropertyResult> out;
  auto absorb = [&out](std::vector<PropertyResult> part) {
    for (auto& r : part) out.push_back(std::move(r));
  };
  absorb(prop_petz_exactness(seed, 20));
  absorb(prop_theorem2(seed + 1, 50));
  absorb(prop_theorem4(seed + 2, 30));
  absorb(prop_theorem1_clocks());
  absorb(prop_catalytic_consistency());
  return out;
}

std::vector<PropertyResult> run_suite(const std::string& which, std::uint64_t seed) {
  if (which == "core") return run_core_suite(seed);
  if (which == "asymmetry") return run_asymmetry_suite(seed);
  if (which == "recovery") return run_recovery_suite(seed);
  if (which == "all") {
    std::vector<PropertyResult> out = run_core_suite(seed);
    for (auto& r : run_asymmetry_suite(seed)) out.push_back(std::move(r));
    for (auto& r : run_recovery_suite(seed)) out.push_back(std::move(r));
    return out;
  }
  throw std::invalid_argument("run_suite: unknown suite '" + which + "'");
}

}  // namespace asymcat
