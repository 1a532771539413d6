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

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "asymcat/opcore.hpp"

namespace asymcat {

//============================================================================
// Completely positive maps in Kraus form
//============================================================================

// Kraus form is the ground truth; the Choi matrix is derived on demand and
// cached (compute-once, safe under concurrent reads).
class Channel {
 public:
  // How the Kraus completeness check is enforced at construction.
  enum class Tp {
    Full,       // sum K'K = I to kraus_complete tolerance
    OnDomain,   // sum K'K = I on the domain projector only, to 1e-7
    Unchecked,  // CP map that need not be trace preserving (e.g. adjoints)
  };

  Channel(std::vector<Matrix> kraus, std::string name = "",
          Tp policy = Tp::Full, std::optional<Matrix> domain = std::nullopt);

  static Channel identity(Index dim);
  static Channel unitary(const Matrix& u, std::string name = "");

  Index in_dim() const { return in_dim_; }
  Index out_dim() const { return out_dim_; }
  const std::vector<Matrix>& kraus() const { return kraus_; }
  const std::string& name() const { return name_; }
  Tp tp_policy() const { return policy_; }
  // Input-space projector on which trace preservation is guaranteed, for
  // channels defined by formulas that are TP only on a support.
  const std::optional<Matrix>& domain_projector() const { return domain_; }

  // Linear action sum_k K x K' without density-operator validation.
  Matrix apply_matrix(const Matrix& x) const;

  // Choi matrix sum_ij |i><j| (x) E(|i><j|), unnormalized, size in*out.
  const Matrix& choi() const;

 private:
  std::vector<Matrix> kraus_;
  std::string name_;
  Tp policy_;
  std::optional<Matrix> domain_;
  Index in_dim_ = 0;
  Index out_dim_ = 0;

  struct ChoiCache {
    std::once_flag once;
    Matrix value;
  };
  std::shared_ptr<ChoiCache> cache_;
};

//============================================================================
// Channel algebra
//============================================================================

DensityOperator apply(const Channel& e, const DensityOperator& rho);

// Kraus set {K'}: unital, not necessarily trace preserving.
Channel adjoint(const Channel& e);

// e2 after e1.
Channel compose(const Channel& e2, const Channel& e1);

Matrix choi(const Channel& e);

struct ChoiOptions {
  Real cp_tol = 1e-8;        // reject if the Choi minimum eigenvalue is below -cp_tol
  Real tp_tol = 1e-6;        // reject if ||Tr_out J - I|| exceeds this
  Real weight_cutoff = 1e-12;  // drop Kraus operators below this Choi weight
  bool require_tp = true;
};

Channel channel_from_choi(const Matrix& j, Index in_dim, Index out_dim,
                          const ChoiOptions& options = {});

// Trace distance between Choi matrices; the channel-equality predicate used
// throughout is choi_distance <= tol::channel_eq.
Real choi_distance(const Channel& a, const Channel& b);

//============================================================================
// Structural channels
//============================================================================

// Traces out the factors absent from `keep` (strictly increasing).
Channel partial_trace_channel(const std::vector<Index>& dims,
                              const std::vector<Index>& keep);

// Convenience: trace out the single factor `traced`, keep the rest in order.
Channel discard_system(const std::vector<Index>& dims, Index traced);

// Extends a CP map that is trace preserving only on `domain` (an input-space
// projector) to a total channel by routing the complement to `fallback`.
Channel extend_to_total(std::vector<Matrix> kraus, const Matrix& domain,
                        const DensityOperator& fallback, std::string name);

}  // namespace asymcat
