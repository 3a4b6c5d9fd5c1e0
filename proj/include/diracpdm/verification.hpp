// Copyright 2026 diracpdm developers
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

#include <string>
#include <vector>

#include "diracpdm/model.hpp"
#include "diracpdm/oracle.hpp"
#include "diracpdm/wavefunction.hpp"

namespace diracpdm {

/// Outcome of one verification check: measured value against its bound.
struct CheckResult {
  std::string name;
  bool pass = false;
  double measured = 0.0;
  double bound = 0.0;
  std::string detail;
};

struct VerifyConfig {
  ModelParams params{-1.0, 0.1, 0.1};
  std::vector<int> kappas{-2, -1, 1, 2};
  int n_max = 2;
  bool skip_oracle = false;
  int oracle_grid_points = 1200;
  double oracle_r_max = 0.0;  ///< 0 = size per level
};

/// Reference to one level of the natural tower of a kappa channel (the
/// component whose n = 0 entry is the channel's lowest level).
struct LevelRef {
  int kappa = 0;
  Component component = Component::upper;
  SignBranch sign_branch = SignBranch::plus;
  int n = 0;
};

/// The natural tower component: lower for kappa > 0, upper for kappa < 0.
Component natural_component(int kappa);

/// Natural-tower levels for all kappas, n <= n_max, both energy signs.
std::vector<LevelRef> enumerate_levels(const std::vector<int>& kappas, int n_max);

/// Runs the whole battery: rotation constraints, quadratic-root identity,
/// limit reductions, ODE and compatibility residuals, normalization sums,
/// and (unless skipped) oracle comparisons.  One CheckResult per check.
std::vector<CheckResult> run_verification(const VerifyConfig& config);

/// Max ODE residual of the level's own component shape over 50 log-spaced
/// radii in [0.1, 30]/omega, normalized by (|eps^2-1|/lambda^2) max|phi|.
/// Well-defined for every binding level, constructible or not.
double shape_ode_residual(const ValidatedChannel& vc, const RotationSolution& rot, int n,
                          SignBranch sign_branch);

/// Classification of the pairing conventions for one state: max normalized
/// first-order-relation residual per convention (infinity when that
/// convention cannot even be constructed).
struct PairingClassification {
  double matched_residual = 0.0;
  double same_n_residual = 0.0;
  bool matched_ok = false;
  bool same_n_ok = false;
  bool exactly_one = false;
};

PairingClassification classify_pairing(const ValidatedChannel& vc, const RotationSolution& rot,
                                       int n, SignBranch sign_branch, double bound = 1e-8);

}  // namespace diracpdm
