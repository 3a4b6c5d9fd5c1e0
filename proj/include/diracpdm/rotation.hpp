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

#include <utility>

#include "diracpdm/model.hpp"

namespace diracpdm {

/// Sign choice on the root term of the cosine formula.  The default picks
/// +1 whenever that gives a positive cosine; the other solution stays
/// reachable for testing.
enum class TSign { plus = +1, minus = -1 };

/// Solution of the angle constraint C*mu + S*kappa/lambda = (+|-)Z for one
/// channel.  C = cos(lambda*eta) in (0, 1], S = sin(lambda*eta) recovered
/// from the linear constraint so its sign is unambiguous, and
/// gamma = t * sign(kappa) * sqrt(kappa^2 + lambda^2 (mu^2 - Z^2)) is the
/// effective angular parameter replacing integer orbital momentum.
struct RotationSolution {
  double C = 1.0;
  double S = 0.0;
  int t = +1;
  double gamma = 0.0;
  BranchSign branch = BranchSign::plus;

  /// The angle lambda*eta itself; only ever needed for diagnostics.
  double angle() const;
};

/// Solves the constraint, choosing t so that C > 0 (t = +1 preferred when
/// both signs work).  Throws NoPositiveCosine when neither sign does.
RotationSolution solve_rotation(const ValidatedChannel& vc);

/// Same with the root-term sign forced; throws NoPositiveCosine when the
/// forced sign gives C <= 0.
RotationSolution solve_rotation(const ValidatedChannel& vc, TSign forced);

/// Applies the half-angle basis rotation to the physical components (g, f),
/// returning (phi_plus, phi_minus).  Preserves g^2 + f^2.
std::pair<double, double> rotate(double g, double f, const RotationSolution& rot);

/// Exact inverse of rotate: maps (phi_plus, phi_minus) back to (g, f).
std::pair<double, double> unrotate(double phi_plus, double phi_minus,
                                   const RotationSolution& rot);

}  // namespace diracpdm
