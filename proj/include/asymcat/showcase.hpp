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

#include "asymcat/recovery.hpp"
#include "asymcat/report.hpp"

namespace asymcat {

struct RunOptions {
  Real tol_eq = 1e-8;
  Real tol_floor = 1e-6;
  TSearchOptions tsearch;
};

//============================================================================
// Bounded-clock state preparation
//============================================================================

// A truncated oscillator clock holding a uniform superposition of T levels
// with stride k, coupled to a two-level system. The frequency enters only as
// a uniform generator scale, so it is recorded but dropped from the
// generators. The default truncation leaves one empty level above the
// highest populated one; the experiment asserts it stays empty.
struct ClockSpec {
  int T = 2;
  int k = 1;
  Real omega = 1.0;
  Index dim_R = 0;  // 0 = auto: k*(T-1) + 2
  Index dim_S = 2;

  Index resolved_dim_r() const;
  void validate() const;  // throws invariant_error
};

// (1/sqrt(T)) sum_n |k n> on the truncated clock register.
DensityOperator clock_state(const ClockSpec& spec);

// Time-translation action generated by the number operators on (R, S).
SymmetryAction clock_action(const ClockSpec& spec);

ExperimentReport run_clock_experiment(const ClockSpec& spec,
                                      const RunOptions& options = {});

//============================================================================
// Optimal cloning
//============================================================================

struct ClonerSpec {
  int d = 2;
  int n = 1;
  int k = 1;
  int probes = 20;               // Haar probe count when probe_states is empty
  std::uint64_t seed = 1234;     // probe sampling seed
  std::vector<Vector> probe_states;

  void validate() const;
};

// n -> n+k cloner: (d+(n)/d+(n+k)) P+ (x ⊗ I^k) P+ on symmetric inputs, with
// the complement of the input symmetric subspace routed to the maximally
// mixed symmetric state.
Channel werner_cloner(const ClonerSpec& spec);

ExperimentReport run_cloner_experiment(const ClonerSpec& spec,
                                       const RunOptions& options = {});

}  // namespace asymcat
