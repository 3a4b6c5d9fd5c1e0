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

#include <optional>
#include <vector>

#include "diracpdm/model.hpp"
#include "diracpdm/rotation.hpp"
#include "diracpdm/spectrum.hpp"

namespace diracpdm {

/// Unit-normalized Coulomb-type radial shape
///   K (omega r)^(ell+1) e^(-omega r / 2) L_n^(2 ell + 1)(omega r)
/// with K fixed in log space so the L2 norm over (0, inf) is one.
/// Derivatives are analytic (product rule plus the Laguerre derivative
/// identity), so residual checks isolate formula errors from discretization.
struct RadialShape {
  double ell = 0.0;
  int n = 0;
  double omega = 1.0;
  double log_norm = 0.0;

  double value(double r) const;
  double d1(double r) const;
  double d2(double r) const;
};

/// Shape for degree n, orbital number ell > -1, effective charge q != 0;
/// omega = 2|q| / (n + ell + 1).
RadialShape make_radial_shape(int n, double ell, double q);

/// Value of the unit-normalized nonrelativistic radial function at r.
double nonrel_radial(int n, double ell, double q_eff, double r);

/// Convention pairing the two component towers of one state.
/// matched_n picks the partner degree with equal principal combination N
/// (hence the same energy); same_n keeps the partner at the anchor's n,
/// which generally assigns it a different energy.
enum class Pairing { matched_n, same_n };

/// Direction of the first-order component relation.
enum class CompatDirection {
  plus_from_minus,  ///< phi+ = lambda/(C - eps) ( S/lambda - gamma/r + d/dr) phi-
  minus_from_plus,  ///< phi- = lambda/(C + eps) (-S/lambda + gamma/r + d/dr) phi+
};

/// One bound state of a channel: the anchor component's level at radial
/// number n plus the paired partner component.
///
/// Component weights sqrt((C +- eps)/2C) use each component's own level
/// energy; for matched_n pairing the two energies coincide and the weights
/// square-sum to one.  Construction fails (NotConstructible) when a used
/// level has |eps| > C, is non-binding, or when the partner tower has no
/// level at the required degree yet its weight does not vanish.
struct BoundState {
  ValidatedChannel vc;
  RotationSolution rot;
  EnergyLevel level;  ///< anchor component's level
  Pairing pairing = Pairing::matched_n;

  double omega = 1.0;  ///< 2 |Z eps + mu| / N of the anchor level
  double prefactor_plus = 0.0;
  double prefactor_minus = 0.0;

  RadialShape shape_plus, shape_minus;       ///< valid when the flag below is set
  bool has_plus = false, has_minus = false;  ///< absent partner => identically zero
  std::optional<EnergyLevel> partner_level;  ///< engaged when the partner tower has the degree

  Component anchor() const { return vc.channel.component; }
};

BoundState make_bound_state(const ValidatedChannel& vc, const RotationSolution& rot, int n,
                            SignBranch sign_branch, Pairing pairing = Pairing::matched_n);

/// Weighted component value: prefactor times unit shape (zero when absent).
double spinor_component(const BoundState& state, Component component, double r);
double spinor_component_d1(const BoundState& state, Component component, double r);

/// Residual of the second-order radial equation
///   [-d2/dr2 + ell(ell+1)/r^2 + 2 q/r - (eps^2 - 1)/lambda^2] phi
/// with the state's energy and effective charge in the operator and the
/// component's own orbital number in the centrifugal term.  Zero for exact
/// solutions; grows when component and state energies disagree.
double ode_residual(const BoundState& state, Component component, double r);

/// Residual of the first-order relation in the given direction,
/// phi(target) - [lambda/(C -+ eps)] (...) phi(source), with analytic
/// derivatives.  Throws DegenerateDenominator when |C -+ eps| < 1e-14 scale.
double compatibility_residual(const BoundState& state, double r, CompatDirection direction);

/// Direction whose relation is exact on the state's constraint branch:
/// minus_from_plus on the + branch, plus_from_minus on the - branch.
CompatDirection natural_direction(const BoundState& state);

/// compatibility_residual in the branch-natural direction.
double compatibility_residual(const BoundState& state, double r);

/// Image of the source component under the first-order relation; on the
/// branch-natural direction this is the exact partner of the source
/// component as the coupled system defines it.
double first_order_image(const BoundState& state, CompatDirection direction, double r);

enum class Spacing { linear, log };

/// Grid point with both components, the un-rotated physical pair, and
/// residual diagnostics.  ODE residuals are normalized by
/// (|eps^2 - 1|/lambda^2) * max|phi_c| over the grid, the compatibility
/// residual by max(|phi+|, |phi-|) over the grid.
struct RadialSample {
  double r = 0.0;
  double phi_plus = 0.0;
  double phi_minus = 0.0;
  double g = 0.0;
  double f = 0.0;
  double ode_residual_plus = 0.0;
  double ode_residual_minus = 0.0;
  double compat_residual = 0.0;
};

std::vector<RadialSample> sample_grid(const BoundState& state, double r_min, double r_max,
                                      int count, Spacing spacing);

/// L2 norm squared of one weighted component, evaluated with the
/// generalized Gauss-Laguerre rule matched to the component's exponent and
/// validated by doubling the rule size.
double normalization(const BoundState& state, Component component);

}  // namespace diracpdm
