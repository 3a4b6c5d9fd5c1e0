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

#include <Eigen/Core>

#include "diracpdm/model.hpp"
#include "diracpdm/rotation.hpp"
#include "diracpdm/spectrum.hpp"

namespace diracpdm {

/// Uniform radial grid with Dirichlet ends u(0) = u(r_max) = 0; interior
/// points r_i = i h, i = 1..count, h = r_max / (count + 1).
struct FdGrid {
  double r_max = 40.0;
  int count = 2000;

  double h() const { return r_max / (count + 1); }
};

/// Result of one self-consistent solve.
///
/// The root is found on the requested grid and on the step-halved and
/// step-quartered grids; the convergence order is measured from the three
/// values and the extrapolation uses that observed order.  (A fixed h^2
/// assumption is wrong here: effective orbital numbers slightly below zero
/// produce a near-origin defect that degrades the scheme to first order.)
struct OracleResult {
  double epsilon = 0.0;         ///< extrapolated energy
  double epsilon_coarse = 0.0;  ///< root at step h
  double epsilon_fine = 0.0;    ///< root at step h/2
  double epsilon_finest = 0.0;  ///< root at step h/4
  double observed_order = 0.0;  ///< measured convergence order in h
  int iterations = 0;           ///< total root-finder evaluations
  double eig_residual = 0.0;    ///< |H u - theta u| / |u| of the final inner solve
  double grid_estimate = 0.0;   ///< error estimate of the finest-grid root
};

/// k-th lowest eigenvalue of the three-point discretization of
/// -d^2/dr^2 + ell(ell+1)/r^2 + 2q/r on the grid, divided by two.
///
/// The eigenvalue comes from Sturm-sequence bisection by index; the
/// eigenvector (inverse iteration) is used to verify the residual and to
/// detect a truncated tail.  Requires q < 0, ell > -1, k >= 0, and
/// r_max >= 4 (k + ell + 2)^2 / |q|.  Throws NoBoundState when the
/// eigenvalue is nonnegative and GridTooSmall when the eigenfunction tail
/// at r_max exceeds 1e-8 of its peak.
double solve_radial_eigen(double ell, double q, int k, const FdGrid& grid);

/// Same, also exposing the normalized eigenvector (for cross-checks) and
/// the residual of the inner eigenproblem.
double solve_radial_eigen(double ell, double q, int k, const FdGrid& grid,
                          Eigen::VectorXd* eigenvector, double* residual);

/// Solves g(eps) = (eps^2 - 1)/(2 lambda^2) - E_n(Z eps + mu; ell_eff) = 0
/// by bracketing (bisection refined by secant steps) to 1e-10 in eps, on
/// the given grid and on the step-halved grid, then Richardson-combines.
///
/// The effective charge depends on eps, so each evaluation re-solves the
/// inner eigenproblem.  Brackets are located by scanning the portion of
/// (-1, 1) where the effective charge is attractive; among several sign
/// changes the one at the closed-form prediction for (n, sign_branch) is
/// refined.  Throws NoRoot when no sign change exists.
///
/// This path shares no special-function code with the closed-form modules.
OracleResult self_consistent_epsilon(const ValidatedChannel& vc, const RotationSolution& rot,
                                     int n, SignBranch sign_branch, const FdGrid& grid);

/// Grid sized for one level: r_max covering both the precondition bound and
/// the exponential tail of the target state.
FdGrid default_grid_for(const EnergyLevel& level, int count = 2000);

}  // namespace diracpdm
