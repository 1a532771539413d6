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

#include "asymcat/opcore.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/SVD>

namespace asymcat {

namespace {

Real max_abs_dev_from_adjoint(const Matrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace

Real SpectralDecomposition::reconstruction_residual(const Matrix& m) const {
  Matrix rebuilt = eigenvectors * eigenvalues.asDiagonal().toDenseMatrix().cast<Complex>() *
                   eigenvectors.adjoint();
  return (m - rebuilt).norm();
}

SpectralDecomposition hermitian_eig(const Matrix& m, Real herm_tol) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("hermitian_eig: matrix must be square");
  if (m.size() == 0) throw std::invalid_argument("hermitian_eig: empty matrix");
  if (max_abs_dev_from_adjoint(m) > herm_tol)
    throw std::invalid_argument("hermitian_eig: Hermiticity violation beyond tolerance");
  Matrix sym = Complex(0.5) * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("hermitian_eig: eigensolver did not converge");
  return SpectralDecomposition{solver.eigenvalues(), solver.eigenvectors()};
}

Real support_threshold(const RealVector& eigenvalues, Real cutoff) {
  Real top = eigenvalues.size() ? eigenvalues.maxCoeff() : Real(0);
  return cutoff * std::max(top, Real(1));
}

Matrix matrix_func_on_support(const Matrix& m,
                              const std::function<Complex(Real)>& f,
                              Real support_cutoff) {
  SpectralDecomposition eig = hermitian_eig(m);
  if (eig.eigenvalues.minCoeff() < -tol::psd)
    throw std::invalid_argument("matrix_func_on_support: matrix is not PSD");
  Real threshold = support_threshold(eig.eigenvalues, support_cutoff);
  Vector fw(eig.eigenvalues.size());
  for (Index i = 0; i < eig.eigenvalues.size(); ++i) {
    if (eig.eigenvalues[i] > threshold) {
      Complex v = f(eig.eigenvalues[i]);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw invariant_error("matrix_func_on_support: f undefined on a retained eigenvalue");
      fw[i] = v;
    } else {
      fw[i] = Complex(0);
    }
  }
  return eig.eigenvectors * fw.asDiagonal() * eig.eigenvectors.adjoint();
}

Matrix matrix_sqrt_psd(const Matrix& m) {
  return matrix_func_on_support(m, [](Real x) { return Complex(std::sqrt(x)); });
}

Matrix matrix_inv_sqrt_psd(const Matrix& m) {
  return matrix_func_on_support(m, [](Real x) { return Complex(1.0 / std::sqrt(x)); });
}

Matrix support_projector(const Matrix& m) {
  return matrix_func_on_support(m, [](Real) { return Complex(1); });
}

Matrix matrix_imaginary_power(const Matrix& m, Real t) {
  SpectralDecomposition eig = hermitian_eig(m);
  if (eig.eigenvalues.minCoeff() < -tol::psd)
    throw std::invalid_argument("matrix_imaginary_power: matrix is not PSD");
  Real threshold = support_threshold(eig.eigenvalues);
  Vector fw(eig.eigenvalues.size());
  for (Index i = 0; i < eig.eigenvalues.size(); ++i) {
    // lambda^{it} on the support, identity on the kernel.
    fw[i] = eig.eigenvalues[i] > threshold
                ? std::exp(Complex(0, t * std::log(eig.eigenvalues[i])))
                : Complex(1);
  }
  return eig.eigenvectors * fw.asDiagonal() * eig.eigenvectors.adjoint();
}

//============================================================================
// DensityOperator
//============================================================================

DensityOperator DensityOperator::from_matrix(Matrix m) {
  if (m.rows() != m.cols())
    throw invariant_error("DensityOperator: matrix must be square");
  if (m.size() == 0) throw invariant_error("DensityOperator: empty matrix");
  if (!m.allFinite())
    throw invariant_error("DensityOperator: matrix has non-finite entries");
  if (max_abs_dev_from_adjoint(m) > tol::hermitian)
    throw invariant_error("DensityOperator: Hermiticity violation");
  if (std::abs(m.trace() - Complex(1)) > tol::unit_trace)
    throw invariant_error("DensityOperator: trace differs from one");
  DensityOperator rho(std::move(m));
#ifndef NDEBUG
  rho.validate();
#endif
  return rho;
}

DensityOperator DensityOperator::pure(const Vector& amplitudes) {
  Real norm = amplitudes.norm();
  if (norm <= 0) throw invariant_error("DensityOperator::pure: zero vector");
  Vector psi = amplitudes / norm;
  return DensityOperator(psi * psi.adjoint());
}

DensityOperator DensityOperator::maximally_mixed(Index dim) {
  if (dim < 1) throw invariant_error("DensityOperator: dimension must be positive");
  return DensityOperator(Matrix::Identity(dim, dim) / Complex(Real(dim)));
}

void DensityOperator::validate() const {
  if (!mat_.allFinite())
    throw invariant_error("DensityOperator: matrix has non-finite entries");
  if (max_abs_dev_from_adjoint(mat_) > tol::hermitian)
    throw invariant_error("DensityOperator: Hermiticity violation");
  if (std::abs(mat_.trace() - Complex(1)) > tol::unit_trace)
    throw invariant_error("DensityOperator: trace differs from one");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(Complex(0.5) * (mat_ + mat_.adjoint()),
                                               Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -tol::psd)
    throw invariant_error("DensityOperator: negative eigenvalue beyond tolerance");
}

//============================================================================
// Scalar functionals
//============================================================================

Real von_neumann_entropy(const DensityOperator& rho) {
  SpectralDecomposition eig = hermitian_eig(rho.matrix());
  Real s = 0;
  for (Index i = 0; i < eig.eigenvalues.size(); ++i) {
    Real p = eig.eigenvalues[i];
    if (p > 0) s -= p * std::log2(p);
  }
  return s;
}

RelativeEntropy relative_entropy(const DensityOperator& rho,
                                 const DensityOperator& sigma) {
  if (rho.dim() != sigma.dim())
    throw std::invalid_argument("relative_entropy: dimension mismatch");
  SpectralDecomposition er = hermitian_eig(rho.matrix());
  SpectralDecomposition es = hermitian_eig(sigma.matrix());
  Real thr_s = support_threshold(es.eigenvalues);

  // Support containment: weight of rho on the kernel of sigma.
  Real leak = 0;
  for (Index j = 0; j < es.eigenvalues.size(); ++j) {
    if (es.eigenvalues[j] <= thr_s) {
      Vector v = es.eigenvectors.col(j);
      leak += std::real((v.adjoint() * rho.matrix() * v)(0, 0));
    }
  }
  if (leak > 1e-10) return RelativeEntropy{0, true};

  Real thr_r = support_threshold(er.eigenvalues);
  Real tr_rho_log_rho = 0;
  for (Index i = 0; i < er.eigenvalues.size(); ++i) {
    Real p = er.eigenvalues[i];
    if (p > thr_r) tr_rho_log_rho += p * std::log2(p);
  }
  Real tr_rho_log_sigma = 0;
  for (Index j = 0; j < es.eigenvalues.size(); ++j) {
    Real q = es.eigenvalues[j];
    if (q > thr_s) {
      Vector v = es.eigenvectors.col(j);
      Real w = std::real((v.adjoint() * rho.matrix() * v)(0, 0));
      tr_rho_log_sigma += w * std::log2(q);
    }
  }
  return RelativeEntropy{tr_rho_log_rho - tr_rho_log_sigma, false};
}

Real fidelity(const DensityOperator& rho1, const DensityOperator& rho2) {
  if (rho1.dim() != rho2.dim())
    throw std::invalid_argument("fidelity: dimension mismatch");
  Matrix sq = matrix_sqrt_psd(rho1.matrix());
  Matrix inner = sq * rho2.matrix() * sq;
  SpectralDecomposition eig = hermitian_eig(Complex(0.5) * (inner + inner.adjoint()));
  Real f = 0;
  for (Index i = 0; i < eig.eigenvalues.size(); ++i)
    f += std::sqrt(std::max(eig.eigenvalues[i], Real(0)));
  return std::clamp(f, Real(0), Real(1));
}

Real trace_norm(const Matrix& m) {
  if (m.size() == 0) return 0;
  if (m.rows() == m.cols()) {
    Real scale = std::max(m.cwiseAbs().maxCoeff(), Real(1));
    if (max_abs_dev_from_adjoint(m) <= 1e-12 * scale) {
      Eigen::SelfAdjointEigenSolver<Matrix> solver(Complex(0.5) * (m + m.adjoint()),
                                                   Eigen::EigenvaluesOnly);
      return solver.eigenvalues().cwiseAbs().sum();
    }
  }
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues().sum();
}

Real trace_distance(const DensityOperator& a, const DensityOperator& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("trace_distance: dimension mismatch");
  return trace_norm(a.matrix() - b.matrix());
}

Real binary_entropy(Real x) {
  if (!(x >= 0 && x <= 1))
    throw std::invalid_argument("binary_entropy: argument outside [0, 1]");
  Real h = 0;
  if (x > 0) h -= x * std::log2(x);
  if (x < 1) h -= (1 - x) * std::log2(1 - x);
  return h;
}

//============================================================================
// Tensor plumbing
//============================================================================

namespace {

std::vector<Index> strides_for(const std::vector<Index>& dims) {
  std::vector<Index> strides(dims.size(), 1);
  for (Index k = static_cast<Index>(dims.size()) - 2; k >= 0; --k)
    strides[k] = strides[k + 1] * dims[k + 1];
  return strides;
}

}  // namespace

Matrix partial_trace_matrix(const Matrix& m, const std::vector<Index>& dims,
                            const std::vector<Index>& keep) {
  Index total = 1;
  for (Index d : dims) {
    if (d < 1) throw std::invalid_argument("partial_trace: non-positive factor dimension");
    total *= d;
  }
  if (m.rows() != total || m.cols() != total)
    throw std::invalid_argument("partial_trace: factor dimensions do not match the matrix");
  for (size_t i = 0; i + 1 < keep.size(); ++i)
    if (keep[i] >= keep[i + 1])
      throw std::invalid_argument("partial_trace: keep set must be strictly increasing");
  for (Index k : keep)
    if (k < 0 || k >= static_cast<Index>(dims.size()))
      throw std::invalid_argument("partial_trace: keep index out of range");

  std::vector<Index> traced;
  for (Index s = 0; s < static_cast<Index>(dims.size()); ++s)
    if (std::find(keep.begin(), keep.end(), s) == keep.end()) traced.push_back(s);

  const std::vector<Index> strides = strides_for(dims);
  Index kept_dim = 1, traced_dim = 1;
  for (Index k : keep) kept_dim *= dims[k];
  for (Index t : traced) traced_dim *= dims[t];

  // Flat offsets of every kept / traced multi-index in the full space.
  auto offsets = [&](const std::vector<Index>& subsystems, Index count) {
    std::vector<Index> out(static_cast<size_t>(count), 0);
    for (Index flat = 0; flat < count; ++flat) {
      Index rem = flat, off = 0;
      for (Index s = static_cast<Index>(subsystems.size()) - 1; s >= 0; --s) {
        Index d = dims[subsystems[s]];
        off += (rem % d) * strides[subsystems[s]];
        rem /= d;
      }
      out[static_cast<size_t>(flat)] = off;
    }
    return out;
  };
  const std::vector<Index> kept_off = offsets(keep, kept_dim);
  const std::vector<Index> traced_off = offsets(traced, traced_dim);

  Matrix out = Matrix::Zero(kept_dim, kept_dim);
  for (Index a = 0; a < kept_dim; ++a)
    for (Index b = 0; b < kept_dim; ++b) {
      Complex sum = 0;
      for (Index t = 0; t < traced_dim; ++t)
        sum += m(kept_off[a] + traced_off[t], kept_off[b] + traced_off[t]);
      out(a, b) = sum;
    }
  return out;
}

DensityOperator partial_trace(const DensityOperator& rho,
                              const std::vector<Index>& dims,
                              const std::vector<Index>& keep) {
  return DensityOperator::from_matrix(partial_trace_matrix(rho.matrix(), dims, keep));
}

//============================================================================
// Small helpers
//============================================================================

bool is_hermitian(const Matrix& m, Real tolerance) {
  if (m.rows() != m.cols() || m.size() == 0) return false;
  return max_abs_dev_from_adjoint(m) <= tolerance;
}

bool is_unitary(const Matrix& u, Real tolerance) {
  if (u.rows() != u.cols() || u.size() == 0) return false;
  Matrix gram = u.adjoint() * u;
  return (gram - Matrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff() <= tolerance;
}

Vector basis_state(Index dim, Index which) {
  if (which < 0 || which >= dim)
    throw std::invalid_argument("basis_state: index out of range");
  Vector v = Vector::Zero(dim);
  v[which] = Complex(1);
  return v;
}

}  // namespace asymcat
