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

#include <array>

#include "diracpdm/model.hpp"
#include "diracpdm/rotation.hpp"

namespace diracpdm {

/// Effective quantum numbers of the mapped Coulomb problem.
struct EffectiveQuantumNumbers {
  double ell_eff = 0.0;  ///< effective orbital number (real, > -1)
  int n = 0;             ///< radial quantum number
  double N = 1.0;        ///< principal combination n + ell_eff + 1 (> 0)
};

/// One closed-form level.
///
/// epsilon is a root of (eps^2 - 1) N^2 + lambda^2 (Z eps + mu)^2 = 0; the
/// explicit formula is just that root.  E_equiv = -q_eff^2 / (2 N^2) is the
/// mapped nonrelativistic-form energy and eps_minus_one stores eps - 1
/// computed without cancellation (needed by the lambda -> 0 limit probes).
struct EnergyLevel {
  double epsilon = 0.0;
  double E_equiv = 0.0;
  double q_eff = 0.0;  ///< effective charge Z*eps + mu
  EffectiveQuantumNumbers qn;
  SignBranch sign_branch = SignBranch::plus;
  bool binding = false;  ///< q_eff < 0: the mapped Coulomb problem is attractive
  double eps_minus_one = 0.0;
};

/// The four-case map from (component, sign of kappa) to the effective
/// orbital number: gamma / -gamma-1 for phi+, gamma-1 / -gamma for phi-.
/// Throws NonNormalizable when the mapped value is <= -1.
double effective_ell(const RotationSolution& rot, const ChannelSpec& channel);

/// Closed-form level of the channel's component tower at radial number n.
/// Throws ComplexEnergy when the formula's radicand goes negative and
/// propagates NonNormalizable from the ell map.
EnergyLevel energy_level(const ValidatedChannel& vc, const RotationSolution& rot, int n,
                         SignBranch sign_branch);

/// Nonrelativistic Coulomb spectrum -q^2 / (2 (n + ell + 1)^2).
double nonrel_energy(double q, double ell, int n);

/// Spectrum value at Z = 0: +- sqrt(1 - lambda^2 mu^2 / N^2).
double z_zero_epsilon(double lambda, double mu, double N, SignBranch sign_branch);

/// Spectrum value at mu = 0: +- [1 + (lambda Z / N)^2]^(-1/2).
double mu_zero_epsilon(double lambda, double Z, double N, SignBranch sign_branch);

struct LimitCheck {
  double value = 0.0;
  double reference = 0.0;
  double residual = 0.0;  ///< |value - reference| / max(1, |reference|)
};

struct LambdaLimitCheck {
  std::array<double, 3> lambdas{};
  std::array<double, 3> values{};   ///< (eps - 1) / lambda^2 at each lambda
  double extrapolated = 0.0;        ///< Richardson limit of the sequence
  double reference = 0.0;           ///< -(Z + mu)^2 / (2 N0^2)
  double residual = 0.0;            ///< relative error of the extrapolation
  double observed_order = 0.0;      ///< convergence order measured in lambda
};

/// Three limiting reductions of the spectrum, each with residuals:
/// (a) mu = 0 against the constant-mass relativistic form, (b) the
/// lambda -> 0 sequence against the nonrelativistic spectrum with effective
/// charge Z + mu, (c) Z = 0 against the scalar-potential form.
struct LimitReport {
  LimitCheck mu_zero_plus, mu_zero_minus;
  LambdaLimitCheck lambda_to_zero;
  LimitCheck z_zero_plus, z_zero_minus;
};

LimitReport limit_suite(const ModelParams& params, const ChannelSpec& channel, int n);

}  // namespace diracpdm
