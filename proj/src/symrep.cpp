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

#include "asymcat/symrep.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace asymcat {

namespace {

constexpr Index kMaxPermutationCopies = 6;
constexpr Index kMaxCollectiveDim = 10000;

Real effective_cluster_tol(const RealVector& eigenvalues, Real requested) {
  if (requested > 0) return requested;
  Real range = eigenvalues.maxCoeff() - eigenvalues.minCoeff();
  return 1e-8 * std::max(range, Real(1));
}

}  // namespace

//============================================================================
// SymmetryAction
//============================================================================

SymmetryAction SymmetryAction::finite_group(std::vector<System> systems,
                                            std::vector<std::vector<Matrix>> elements) {
  if (systems.empty()) throw invariant_error("SymmetryAction: no systems");
  if (elements.empty()) throw invariant_error("SymmetryAction: empty group");
  SymmetryAction a;
  a.kind_ = ActionKind::FiniteGroup;
  a.systems_ = std::move(systems);
  a.elements_ = std::move(elements);
  a.check_dims();
  for (size_t g = 0; g < a.elements_.size(); ++g) {
    if (a.elements_[g].size() != a.systems_.size())
      throw invariant_error("SymmetryAction: element/system count mismatch");
    for (size_t s = 0; s < a.systems_.size(); ++s) {
      const Matrix& u = a.elements_[g][s];
      if (u.rows() != a.systems_[s].dim || u.cols() != a.systems_[s].dim)
        throw invariant_error("SymmetryAction: unitary does not match system dimension");
      if (!is_unitary(u))
        throw invariant_error("SymmetryAction: group element is not unitary");
      if (g == 0) {
        Matrix id = Matrix::Identity(u.rows(), u.cols());
        if ((u - id).cwiseAbs().maxCoeff() > tol::unitary)
          throw invariant_error("SymmetryAction: element 0 must act as the identity");
      }
    }
  }
  return a;
}

SymmetryAction SymmetryAction::hamiltonian_generated(std::vector<System> systems,
                                                     std::vector<Matrix> generators,
                                                     Real degeneracy_tol) {
  if (systems.empty()) throw invariant_error("SymmetryAction: no systems");
  if (generators.size() != systems.size())
    throw invariant_error("SymmetryAction: generator/system count mismatch");
  SymmetryAction a;
  a.kind_ = ActionKind::HamiltonianGenerated;
  a.systems_ = std::move(systems);
  a.generators_ = std::move(generators);
  a.degeneracy_tol_ = degeneracy_tol;
  a.check_dims();
  for (size_t s = 0; s < a.systems_.size(); ++s) {
    const Matrix& h = a.generators_[s];
    if (h.rows() != a.systems_[s].dim || h.cols() != a.systems_[s].dim)
      throw invariant_error("SymmetryAction: generator does not match system dimension");
    if (!is_hermitian(h, tol::hermitian))
      throw invariant_error("SymmetryAction: generator is not Hermitian");
  }
  return a;
}

SymmetryAction SymmetryAction::collective_unitary(Index local_dim, Index copies) {
  if (local_dim < 2 || copies < 1)
    throw invariant_error("SymmetryAction: collective action needs d >= 2, r >= 1");
  SymmetryAction a;
  a.kind_ = ActionKind::CollectiveUnitary;
  a.local_dim_ = local_dim;
  a.copies_ = copies;
  for (Index c = 0; c < copies; ++c)
    a.systems_.push_back({"Q" + std::to_string(c), local_dim});
  return a;
}

void SymmetryAction::check_dims() const {
  for (const System& s : systems_)
    if (s.dim < 1) throw invariant_error("SymmetryAction: non-positive system dimension");
}

Index SymmetryAction::total_dim() const {
  Index d = 1;
  for (const System& s : systems_) d *= s.dim;
  return d;
}

std::string SymmetryAction::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case ActionKind::FiniteGroup:
      os << "FiniteGroup(order=" << elements_.size() << ")";
      break;
    case ActionKind::HamiltonianGenerated:
      os << "HamiltonianGenerated";
      break;
    case ActionKind::CollectiveUnitary:
      os << "CollectiveUnitary(d=" << local_dim_ << ",r=" << copies_ << ")";
      break;
  }
  os << " on ";
  for (size_t s = 0; s < systems_.size(); ++s) {
    if (s) os << "x";
    os << systems_[s].label << "(" << systems_[s].dim << ")";
  }
  return os.str();
}

Index SymmetryAction::group_order() const {
  if (kind_ != ActionKind::FiniteGroup)
    throw std::logic_error("SymmetryAction: not a finite group action");
  return static_cast<Index>(elements_.size());
}

const Matrix& SymmetryAction::element(Index g, Index system) const {
  if (kind_ != ActionKind::FiniteGroup)
    throw std::logic_error("SymmetryAction: not a finite group action");
  return elements_.at(static_cast<size_t>(g)).at(static_cast<size_t>(system));
}

Matrix SymmetryAction::element_unitary(Index g) const {
  if (kind_ != ActionKind::FiniteGroup)
    throw std::logic_error("SymmetryAction: not a finite group action");
  const auto& per_system = elements_.at(static_cast<size_t>(g));
  Matrix joint = per_system.front();
  for (size_t s = 1; s < per_system.size(); ++s) joint = tensor(joint, per_system[s]);
  return joint;
}

const std::vector<Matrix>& SymmetryAction::generators() const {
  if (kind_ != ActionKind::HamiltonianGenerated)
    throw std::logic_error("SymmetryAction: not a Hamiltonian action");
  return generators_;
}

Matrix SymmetryAction::joint_generator() const {
  if (kind_ != ActionKind::HamiltonianGenerated)
    throw std::logic_error("SymmetryAction: not a Hamiltonian action");
  Index total = total_dim();
  Matrix joint = Matrix::Zero(total, total);
  for (size_t s = 0; s < systems_.size(); ++s) {
    Matrix padded = Matrix::Identity(1, 1);
    for (size_t r = 0; r < systems_.size(); ++r) {
      const Matrix& factor = (r == s)
          ? generators_[r]
          : Matrix(Matrix::Identity(systems_[r].dim, systems_[r].dim));
      padded = tensor(padded, factor);
    }
    joint += padded;
  }
  return joint;
}

Index SymmetryAction::local_dim() const {
  if (kind_ != ActionKind::CollectiveUnitary)
    throw std::logic_error("SymmetryAction: not a collective action");
  return local_dim_;
}

Index SymmetryAction::copies() const {
  if (kind_ != ActionKind::CollectiveUnitary)
    throw std::logic_error("SymmetryAction: not a collective action");
  return copies_;
}

SymmetryAction SymmetryAction::restricted(const std::vector<Index>& system_indices) const {
  if (system_indices.empty())
    throw std::invalid_argument("SymmetryAction::restricted: empty selection");
  for (size_t i = 0; i + 1 < system_indices.size(); ++i)
    if (system_indices[i] >= system_indices[i + 1])
      throw std::invalid_argument("SymmetryAction::restricted: indices must increase");
  for (Index s : system_indices)
    if (s < 0 || s >= static_cast<Index>(systems_.size()))
      throw std::invalid_argument("SymmetryAction::restricted: index out of range");

  switch (kind_) {
    case ActionKind::FiniteGroup: {
      std::vector<System> subsystems;
      for (Index s : system_indices) subsystems.push_back(systems_[static_cast<size_t>(s)]);
      std::vector<std::vector<Matrix>> sub_elements;
      for (const auto& elem : elements_) {
        std::vector<Matrix> per_system;
        for (Index s : system_indices) per_system.push_back(elem[static_cast<size_t>(s)]);
        sub_elements.push_back(std::move(per_system));
      }
      return finite_group(std::move(subsystems), std::move(sub_elements));
    }
    case ActionKind::HamiltonianGenerated: {
      std::vector<System> subsystems;
      std::vector<Matrix> subgens;
      for (Index s : system_indices) {
        subsystems.push_back(systems_[static_cast<size_t>(s)]);
        subgens.push_back(generators_[static_cast<size_t>(s)]);
      }
      return hamiltonian_generated(std::move(subsystems), std::move(subgens),
                                   degeneracy_tol_);
    }
    case ActionKind::CollectiveUnitary: {
      for (Index i = 0; i < static_cast<Index>(system_indices.size()); ++i)
        if (system_indices[static_cast<size_t>(i)] != i)
          throw std::invalid_argument(
              "SymmetryAction::restricted: collective actions restrict to prefixes only");
      return collective_unitary(local_dim_, static_cast<Index>(system_indices.size()));
    }
  }
  throw std::logic_error("SymmetryAction::restricted: unreachable");
}

//============================================================================
// EigenBlocks
//============================================================================

void EigenBlocks::validate(Real tolerance) const {
  if (projectors.empty()) throw invariant_error("EigenBlocks: no projectors");
  Index d = dim();
  Matrix sum = Matrix::Zero(d, d);
  for (const Matrix& p : projectors) sum += p;
  if ((sum - Matrix::Identity(d, d)).cwiseAbs().maxCoeff() > tolerance)
    throw invariant_error("EigenBlocks: projectors do not sum to the identity");
  for (size_t a = 0; a < projectors.size(); ++a)
    for (size_t b = 0; b < projectors.size(); ++b) {
      Matrix prod = projectors[a] * projectors[b];
      Matrix expected = (a == b) ? projectors[a] : Matrix(Matrix::Zero(d, d));
      if ((prod - expected).cwiseAbs().maxCoeff() > tolerance)
        throw invariant_error("EigenBlocks: projectors are not orthogonal idempotents");
    }
}

EigenBlocks eigenblocks(const Matrix& h, Real tol) {
  SpectralDecomposition eig = hermitian_eig(h);
  Real cluster_tol = effective_cluster_tol(eig.eigenvalues, tol);
  EigenBlocks blocks;
  Index n = eig.eigenvalues.size();
  Index start = 0;
  for (Index i = 1; i <= n; ++i) {
    if (i == n || eig.eigenvalues[i] - eig.eigenvalues[i - 1] > cluster_tol) {
      Matrix v = eig.eigenvectors.middleCols(start, i - start);
      blocks.projectors.push_back(v * v.adjoint());
      blocks.labels.push_back(eig.eigenvalues.segment(start, i - start).mean());
      start = i;
    }
  }
  return blocks;
}

//============================================================================
// Twirling
//============================================================================

DensityOperator twirl(const SymmetryAction& action, const DensityOperator& rho) {
  if (rho.dim() != action.total_dim())
    throw std::invalid_argument("twirl: state does not match the action's total dimension");
  switch (action.kind()) {
    case ActionKind::FiniteGroup: {
      Matrix acc = Matrix::Zero(rho.dim(), rho.dim());
      for (Index g = 0; g < action.group_order(); ++g) {
        Matrix u = action.element_unitary(g);
        acc.noalias() += u * rho.matrix() * u.adjoint();
      }
      acc /= Complex(Real(action.group_order()));
      return DensityOperator::from_matrix(std::move(acc));
    }
    case ActionKind::HamiltonianGenerated: {
      EigenBlocks blocks = eigenblocks(action.joint_generator(), action.degeneracy_tol());
      Matrix acc = Matrix::Zero(rho.dim(), rho.dim());
      for (const Matrix& p : blocks.projectors) acc.noalias() += p * rho.matrix() * p;
      return DensityOperator::from_matrix(std::move(acc));
    }
    case ActionKind::CollectiveUnitary: {
      Matrix proj = symmetric_subspace_projector(action.local_dim(), action.copies());
      Matrix inside = proj * rho.matrix() * proj;
      if (trace_norm(inside - rho.matrix()) > 1e-8)
        throw invariant_error("twirl: input leaks outside the symmetric subspace");
      Real dplus = static_cast<Real>(sym_dim(action.local_dim(), action.copies()));
      Matrix out = (std::real(rho.matrix().trace()) / dplus) * proj;
      return DensityOperator::from_matrix(std::move(out));
    }
  }
  throw std::logic_error("twirl: unreachable");
}

Channel twirl_channel(const SymmetryAction& action) {
  switch (action.kind()) {
    case ActionKind::FiniteGroup: {
      Real scale = 1.0 / std::sqrt(static_cast<Real>(action.group_order()));
      std::vector<Matrix> kraus;
      for (Index g = 0; g < action.group_order(); ++g)
        kraus.push_back(scale * action.element_unitary(g));
      return Channel(std::move(kraus), "twirl");
    }
    case ActionKind::HamiltonianGenerated:
      return dephasing_map(eigenblocks(action.joint_generator(), action.degeneracy_tol()));
    case ActionKind::CollectiveUnitary:
      throw std::invalid_argument(
          "twirl_channel: the collective twirl is defined only on symmetric-subspace inputs");
  }
  throw std::logic_error("twirl_channel: unreachable");
}

Matrix symmetric_subspace_projector(Index d, Index r) {
  if (d < 2 || r < 1)
    throw std::invalid_argument("symmetric_subspace_projector: need d >= 2, r >= 1");
  if (r > kMaxPermutationCopies)
    throw std::invalid_argument("symmetric_subspace_projector: copy count capped at 6");
  Real dim_real = std::pow(static_cast<Real>(d), static_cast<Real>(r));
  if (dim_real > static_cast<Real>(kMaxCollectiveDim))
    throw std::invalid_argument("symmetric_subspace_projector: d^r exceeds the size guard");
  Index total = 1;
  for (Index i = 0; i < r; ++i) total *= d;

  std::vector<Index> perm(static_cast<size_t>(r));
  std::iota(perm.begin(), perm.end(), Index(0));
  Matrix proj = Matrix::Zero(total, total);
  Real count = 0;
  std::vector<Index> digits(static_cast<size_t>(r));
  do {
    // P_perm |i_0 ... i_{r-1}> = |i_{perm^{-1}(0)} ...>; each permutation
    // operator contributes one unit entry per basis column.
    for (Index col = 0; col < total; ++col) {
      Index rem = col;
      for (Index k = r - 1; k >= 0; --k) {
        digits[static_cast<size_t>(k)] = rem % d;
        rem /= d;
      }
      Index row = 0;
      for (Index k = 0; k < r; ++k)
        row = row * d + digits[static_cast<size_t>(perm[static_cast<size_t>(k)])];
      proj(row, col) += Complex(1);
    }
    count += 1;
  } while (std::next_permutation(perm.begin(), perm.end()));
  proj /= Complex(count);
  return proj;
}

std::int64_t sym_dim(Index d, Index r) {
  if (d < 1 || r < 0) throw std::invalid_argument("sym_dim: need d >= 1, r >= 0");
  // binomial(r + d - 1, d - 1) with exact integer arithmetic.
  unsigned __int128 result = 1;
  const std::int64_t n = r + d - 1;
  const std::int64_t k = std::min<std::int64_t>(d - 1, r);
  for (std::int64_t i = 1; i <= k; ++i) {
    result = result * static_cast<unsigned __int128>(n - k + i);
    result /= static_cast<unsigned __int128>(i);
    if (result > (static_cast<unsigned __int128>(1) << 62))
      throw std::overflow_error("sym_dim: result exceeds 2^62");
  }
  return static_cast<std::int64_t>(result);
}

Channel dephasing_map(const EigenBlocks& blocks) {
  blocks.validate();
  std::vector<Matrix> kraus = blocks.projectors;
  return Channel(std::move(kraus), "dephasing");
}

}  // namespace asymcat
