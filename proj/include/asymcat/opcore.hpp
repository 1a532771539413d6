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

#include <functional>
#include <vector>

#include "asymcat/types.hpp"

namespace asymcat {

//============================================================================
// Hermitian spectral decompositions
//============================================================================

// Eigenvalues ascending, eigenvector columns orthonormal.
struct SpectralDecomposition {
  RealVector eigenvalues;
  Matrix eigenvectors;

  // ||m - V diag(w) V'||_F, used by the test suite.
  Real reconstruction_residual(const Matrix& m) const;
};

// Symmetrizes (m + m')/2 internally. Throws std::invalid_argument for
// non-square input or a Hermiticity violation beyond herm_tol.
SpectralDecomposition hermitian_eig(const Matrix& m, Real herm_tol = 1e-8);

// Threshold below which eigenvalues count as numerical zeros:
// cutoff * max(lambda_max, 1).
Real support_threshold(const RealVector& eigenvalues,
                       Real cutoff = tol::support_cutoff);

// Applies f to the eigenvalues strictly above the support threshold and maps
// the rest to zero. Requires m Hermitian PSD. Used for sqrt, inverse sqrt,
// log2 and imaginary powers on supports.
Matrix matrix_func_on_support(const Matrix& m,
                              const std::function<Complex(Real)>& f,
                              Real support_cutoff = tol::support_cutoff);

Matrix matrix_sqrt_psd(const Matrix& m);
// Pseudo-inverse square root (zero on the kernel).
Matrix matrix_inv_sqrt_psd(const Matrix& m);
// Projector onto the eigenvalues above the support threshold.
Matrix support_projector(const Matrix& m);
// m^{it}, extended by the identity on the kernel so the result is unitary.
Matrix matrix_imaginary_power(const Matrix& m, Real t);

//============================================================================
// Density operators
//============================================================================

class DensityOperator {
 public:
  // Validates Hermiticity, unit trace and finiteness on construction; the PSD
  // invariant is checked in debug builds and by validate().
  static DensityOperator from_matrix(Matrix m);
  static DensityOperator pure(const Vector& amplitudes);
  static DensityOperator maximally_mixed(Index dim);

  Index dim() const { return mat_.rows(); }
  const Matrix& matrix() const { return mat_; }

  // Full three-invariant check (Hermitian, unit trace, PSD).
  // Throws invariant_error on violation.
  void validate() const;

 private:
  explicit DensityOperator(Matrix m) : mat_(std::move(m)) {}
  Matrix mat_;
};

//============================================================================
// Scalar functionals (log base 2 throughout; entropies are in bits)
//============================================================================

Real von_neumann_entropy(const DensityOperator& rho);

struct RelativeEntropy {
  Real bits = 0;
  bool infinite = false;
};

// S(rho||sigma); infinite when supp(rho) leaks outside supp(sigma).
RelativeEntropy relative_entropy(const DensityOperator& rho,
                                 const DensityOperator& sigma);

// Uhlmann fidelity ||sqrt(rho1) sqrt(rho2)||_1, computed as the sum of the
// square roots of the eigenvalues of sqrt(rho1) rho2 sqrt(rho1).
Real fidelity(const DensityOperator& rho1, const DensityOperator& rho2);

// Sum of singular values. For Hermitian input this is the sum of absolute
// eigenvalues, which is the path taken.
Real trace_norm(const Matrix& m);

// ||a - b||_1 without a 1/2 factor.
Real trace_distance(const DensityOperator& a, const DensityOperator& b);

// H(x) = -x log2 x - (1-x) log2 (1-x) on [0, 1].
Real binary_entropy(Real x);

//============================================================================
// Tensor plumbing
//============================================================================

// Kronecker product; the first factor is the most significant index.
template <typename DerivedA, typename DerivedB>
Matrix tensor(const Eigen::MatrixBase<DerivedA>& a,
              const Eigen::MatrixBase<DerivedB>& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
          Complex(a(i, j)) * b.derived().template cast<Complex>();
  return out;
}

// Partial trace of an operator on a tensor product with factor dimensions
// `dims`; `keep` lists the retained factors in strictly increasing order.
Matrix partial_trace_matrix(const Matrix& m, const std::vector<Index>& dims,
                            const std::vector<Index>& keep);

DensityOperator partial_trace(const DensityOperator& rho,
                              const std::vector<Index>& dims,
                              const std::vector<Index>& keep);

//============================================================================
// Small helpers
//============================================================================

bool is_hermitian(const Matrix& m, Real tolerance);
bool is_unitary(const Matrix& u, Real tolerance = tol::unitary);
Vector basis_state(Index dim, Index which);

}  // namespace asymcat
