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

#include "asymcat/channel.hpp"

#include <algorithm>
#include <cmath>

namespace asymcat {

namespace {

constexpr Real kDomainTpTol = 1e-7;

Matrix kraus_gram(const std::vector<Matrix>& kraus) {
  Matrix gram = Matrix::Zero(kraus.front().cols(), kraus.front().cols());
  for (const Matrix& k : kraus) gram += k.adjoint() * k;
  return gram;
}

}  // namespace

Channel::Channel(std::vector<Matrix> kraus, std::string name, Tp policy,
                 std::optional<Matrix> domain)
    : kraus_(std::move(kraus)),
      name_(std::move(name)),
      policy_(policy),
      domain_(std::move(domain)),
      cache_(std::make_shared<ChoiCache>()) {
  if (kraus_.empty()) throw invariant_error("Channel: empty Kraus list");
  in_dim_ = kraus_.front().cols();
  out_dim_ = kraus_.front().rows();
  for (const Matrix& k : kraus_) {
    if (k.rows() != out_dim_ || k.cols() != in_dim_)
      throw invariant_error("Channel: inconsistent Kraus shapes");
    if (!k.allFinite()) throw invariant_error("Channel: non-finite Kraus entries");
  }
  if (policy_ == Tp::Full) {
    Matrix gram = kraus_gram(kraus_);
    Real dev = (gram - Matrix::Identity(in_dim_, in_dim_)).cwiseAbs().maxCoeff();
    Real allowed = domain_ ? kDomainTpTol : tol::kraus_complete;
    if (dev > allowed)
      throw invariant_error("Channel '" + name_ + "': Kraus completeness violation");
  } else if (policy_ == Tp::OnDomain) {
    if (!domain_) throw invariant_error("Channel: OnDomain policy without a domain projector");
    Matrix gram = kraus_gram(kraus_);
    Matrix restricted = *domain_ * (gram - Matrix::Identity(in_dim_, in_dim_)) * *domain_;
    if (restricted.cwiseAbs().maxCoeff() > kDomainTpTol)
      throw invariant_error("Channel '" + name_ + "': not trace preserving on its domain");
  }
}

Channel Channel::identity(Index dim) {
  std::vector<Matrix> k{Matrix::Identity(dim, dim)};
  return Channel(std::move(k), "identity");
}

Channel Channel::unitary(const Matrix& u, std::string name) {
  if (!is_unitary(u)) throw invariant_error("Channel::unitary: matrix is not unitary");
  std::vector<Matrix> k{u};
  return Channel(std::move(k), name.empty() ? "unitary" : std::move(name));
}

Matrix Channel::apply_matrix(const Matrix& x) const {
  if (x.rows() != in_dim_ || x.cols() != in_dim_)
    throw std::invalid_argument("Channel::apply: dimension mismatch");
  Matrix out = Matrix::Zero(out_dim_, out_dim_);
  for (const Matrix& k : kraus_) out.noalias() += k * x * k.adjoint();
  return out;
}

const Matrix& Channel::choi() const {
  std::call_once(cache_->once, [this] {
    Matrix j = Matrix::Zero(in_dim_ * out_dim_, in_dim_ * out_dim_);
    for (const Matrix& k : kraus_) {
      // Column-major vec of K satisfies v[i*out + a] = K(a, i).
      Eigen::Map<const Vector> v(k.data(), k.size());
      j.noalias() += v * v.adjoint();
    }
    cache_->value = std::move(j);
  });
  return cache_->value;
}

//============================================================================
// Channel algebra
//============================================================================

DensityOperator apply(const Channel& e, const DensityOperator& rho) {
  return DensityOperator::from_matrix(e.apply_matrix(rho.matrix()));
}

Channel adjoint(const Channel& e) {
  std::vector<Matrix> kraus;
  kraus.reserve(e.kraus().size());
  for (const Matrix& k : e.kraus()) kraus.push_back(k.adjoint());
  return Channel(std::move(kraus), e.name() + "^adj", Channel::Tp::Unchecked);
}

Channel compose(const Channel& e2, const Channel& e1) {
  if (e1.out_dim() != e2.in_dim())
    throw std::invalid_argument("compose: intermediate dimension mismatch");
  std::vector<Matrix> kraus;
  kraus.reserve(e1.kraus().size() * e2.kraus().size());
  for (const Matrix& b : e2.kraus())
    for (const Matrix& a : e1.kraus()) kraus.push_back(b * a);
  // Inputs were validated at their own construction; products of TP maps
  // stay TP, so re-checking would only reject accumulated rounding.
  return Channel(std::move(kraus), e2.name() + "*" + e1.name(), Channel::Tp::Unchecked);
}

Matrix choi(const Channel& e) { return e.choi(); }

Channel channel_from_choi(const Matrix& j, Index in_dim, Index out_dim,
                          const ChoiOptions& options) {
  if (j.rows() != in_dim * out_dim || j.cols() != in_dim * out_dim)
    throw std::invalid_argument("channel_from_choi: Choi size mismatch");
  SpectralDecomposition eig = hermitian_eig(j);
  if (eig.eigenvalues.minCoeff() < -options.cp_tol)
    throw invariant_error("channel_from_choi: complete positivity violation");
  if (options.require_tp) {
    Matrix tr_out = partial_trace_matrix(j, {in_dim, out_dim}, {0});
    if ((tr_out - Matrix::Identity(in_dim, in_dim)).cwiseAbs().maxCoeff() > options.tp_tol)
      throw invariant_error("channel_from_choi: trace preservation violation");
  }
  std::vector<Matrix> kraus;
  for (Index idx = 0; idx < eig.eigenvalues.size(); ++idx) {
    Real w = eig.eigenvalues[idx];
    if (w < options.weight_cutoff) continue;
    Vector v = std::sqrt(w) * eig.eigenvectors.col(idx);
    Matrix k(out_dim, in_dim);
    for (Index i = 0; i < in_dim; ++i)
      for (Index a = 0; a < out_dim; ++a) k(a, i) = v[i * out_dim + a];
    kraus.push_back(std::move(k));
  }
  if (kraus.empty()) throw invariant_error("channel_from_choi: zero map");
  return Channel(std::move(kraus), "from_choi", Channel::Tp::Unchecked);
}

Real choi_distance(const Channel& a, const Channel& b) {
  if (a.in_dim() != b.in_dim() || a.out_dim() != b.out_dim())
    throw std::invalid_argument("choi_distance: dimension mismatch");
  return trace_norm(a.choi() - b.choi());
}

//============================================================================
// Structural channels
//============================================================================

Channel partial_trace_channel(const std::vector<Index>& dims,
                              const std::vector<Index>& keep) {
  Index total = 1;
  for (Index d : dims) total *= d;
  std::vector<Index> traced;
  for (Index s = 0; s < static_cast<Index>(dims.size()); ++s)
    if (std::find(keep.begin(), keep.end(), s) == keep.end()) traced.push_back(s);

  std::vector<Index> strides(dims.size(), 1);
  for (Index k = static_cast<Index>(dims.size()) - 2; k >= 0; --k)
    strides[k] = strides[k + 1] * dims[k + 1];

  Index kept_dim = 1, traced_dim = 1;
  for (Index k : keep) kept_dim *= dims[k];
  for (Index t : traced) traced_dim *= dims[t];
  if (kept_dim == total && traced_dim == 1)
    return Channel::identity(total);

  auto offset_of = [&](const std::vector<Index>& subsystems, Index flat) {
    Index rem = flat, off = 0;
    for (Index s = static_cast<Index>(subsystems.size()) - 1; s >= 0; --s) {
      Index d = dims[subsystems[s]];
      off += (rem % d) * strides[subsystems[s]];
      rem /= d;
    }
    return off;
  };

  std::vector<Matrix> kraus;
  kraus.reserve(static_cast<size_t>(traced_dim));
  for (Index m = 0; m < traced_dim; ++m) {
    Matrix k = Matrix::Zero(kept_dim, total);
    Index m_off = offset_of(traced, m);
    for (Index a = 0; a < kept_dim; ++a) k(a, offset_of(keep, a) + m_off) = Complex(1);
    kraus.push_back(std::move(k));
  }
  return Channel(std::move(kraus), "partial_trace");
}

Channel discard_system(const std::vector<Index>& dims, Index traced) {
  if (traced < 0 || traced >= static_cast<Index>(dims.size()))
    throw std::invalid_argument("discard_system: index out of range");
  std::vector<Index> keep;
  for (Index s = 0; s < static_cast<Index>(dims.size()); ++s)
    if (s != traced) keep.push_back(s);
  return partial_trace_channel(dims, keep);
}

Channel extend_to_total(std::vector<Matrix> kraus, const Matrix& domain,
                        const DensityOperator& fallback, std::string name) {
  if (kraus.empty()) throw invariant_error("extend_to_total: empty Kraus list");
  Index in_dim = kraus.front().cols();
  Index out_dim = kraus.front().rows();
  if (domain.rows() != in_dim || domain.cols() != in_dim)
    throw std::invalid_argument("extend_to_total: domain projector size mismatch");
  if (fallback.dim() != out_dim)
    throw std::invalid_argument("extend_to_total: fallback state size mismatch");

  // Kernel basis of the domain projector.
  SpectralDecomposition dom = hermitian_eig(domain);
  std::vector<Index> kernel;
  for (Index i = 0; i < dom.eigenvalues.size(); ++i)
    if (dom.eigenvalues[i] < 0.5) kernel.push_back(i);

  if (!kernel.empty()) {
    SpectralDecomposition fb = hermitian_eig(fallback.matrix());
    Real thr = support_threshold(fb.eigenvalues);
    for (Index j = 0; j < fb.eigenvalues.size(); ++j) {
      if (fb.eigenvalues[j] <= thr) continue;
      Real w = std::sqrt(fb.eigenvalues[j]);
      for (Index q : kernel)
        kraus.push_back(w * fb.eigenvectors.col(j) * dom.eigenvectors.col(q).adjoint());
    }
  }
  return Channel(std::move(kraus), std::move(name), Channel::Tp::Full, domain);
}

}  // namespace asymcat
