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

#include "asymcat/random.hpp"

#include <cmath>

#include <Eigen/QR>

namespace asymcat {

std::uint64_t Rng::integer(std::uint64_t bound) {
  std::uniform_int_distribution<std::uint64_t> dist(0, bound - 1);
  return dist(gen_);
}

Matrix Rng::ginibre(Index rows, Index cols) {
  Matrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = Complex(normal(), normal());
  return m;
}

Matrix Rng::hermitian(Index dim) {
  Matrix g = ginibre(dim, dim);
  return Complex(0.5) * (g + g.adjoint());
}

Matrix Rng::unitary(Index dim) {
  Matrix g = ginibre(dim, dim);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phases of the R diagonal so the distribution is Haar.
  for (Index j = 0; j < dim; ++j) {
    Complex d = r(j, j);
    Real a = std::abs(d);
    q.col(j) *= (a > 0) ? d / a : Complex(1);
  }
  return q;
}

Vector Rng::pure_state(Index dim) {
  Vector v(dim);
  for (Index i = 0; i < dim; ++i) v[i] = Complex(normal(), normal());
  return v / v.norm();
}

DensityOperator Rng::density(Index dim, Index rank) {
  if (rank <= 0 || rank > dim) rank = dim;
  Matrix g = ginibre(dim, rank);
  Matrix m = g * g.adjoint();
  m /= m.trace();
  // Exactly rehermitize; the product is Hermitian up to rounding.
  m = Complex(0.5) * (m + m.adjoint());
  m /= m.trace();
  return DensityOperator::from_matrix(std::move(m));
}

}  // namespace asymcat
