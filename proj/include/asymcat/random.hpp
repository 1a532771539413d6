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
#include <random>

#include "asymcat/opcore.hpp"

namespace asymcat {

// Seeded generator for states, unitaries and Hermitian matrices. A fixed seed
// reproduces the full draw sequence, which the verification suites rely on.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  Real normal() { return normal_(gen_); }
  Real uniform() { return uniform_(gen_); }
  std::uint64_t integer(std::uint64_t bound);  // uniform on [0, bound)

  Matrix ginibre(Index rows, Index cols);
  Matrix hermitian(Index dim);   // GUE-like, entries O(1)
  Matrix unitary(Index dim);     // Haar via QR with phase fixing
  Vector pure_state(Index dim);
  DensityOperator density(Index dim, Index rank = 0);  // rank 0 = full rank

 private:
  std::mt19937_64 gen_;
  std::normal_distribution<Real> normal_{0.0, 1.0};
  std::uniform_real_distribution<Real> uniform_{0.0, 1.0};
};

}  // namespace asymcat
