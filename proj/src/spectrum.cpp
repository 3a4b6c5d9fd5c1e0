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

#include "diracpdm/spectrum.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace diracpdm {

double effective_ell(const RotationSolution& rot, const ChannelSpec& channel) {
  double ell;
  if (channel.component == Component::upper) {
    ell = channel.kappa > 0 ? rot.gamma : -rot.gamma - 1.0;
  } else {
    ell = channel.kappa > 0 ? rot.gamma - 1.0 : -rot.gamma;
  }
  if (ell <= -1.0) {
    throw NonNormalizable("effective ell = " + std::to_string(ell) +
                          " admits no square-integrable solution");
  }
  return ell;
}

EnergyLevel energy_level(const ValidatedChannel& vc, const RotationSolution& rot, int n,
                         SignBranch sign_branch) {
  if (n < 0) throw InvalidParameter("radial quantum number must be nonnegative");

  const double Z = vc.params.Z;
  const double mu = vc.params.mu;
  const double lam = vc.params.lambda;
  const double lam2 = lam * lam;

  EnergyLevel level;
  level.qn.ell_eff = effective_ell(rot, vc.channel);
  level.qn.n = n;
  level.qn.N = n + level.qn.ell_eff + 1.0;
  level.sign_branch = sign_branch;

  const double N2 = level.qn.N * level.qn.N;
  const double radicand = 1.0 + lam2 * (Z * Z - mu * mu) / N2;
  if (radicand < 0.0) {
    throw ComplexEnergy("energy radicand " + std::to_string(radicand) + " < 0");
  }
  const double u2 = lam2 * Z * Z / N2;
  level.epsilon =
      (-lam2 * mu * Z / N2 + sign_value(sign_branch) * std::sqrt(radicand)) / (1.0 + u2);
  level.q_eff = Z * level.epsilon + mu;
  level.E_equiv = -level.q_eff * level.q_eff / (2.0 * N2);
  level.binding = level.q_eff < 0.0;
  // eps - 1 through the defining quadratic: no cancellation as eps -> 1.
  level.eps_minus_one = -lam2 * level.q_eff * level.q_eff / ((1.0 + level.epsilon) * N2);
  return level;
}

double nonrel_energy(double q, double ell, int n) {
  if (n < 0) throw InvalidParameter("radial quantum number must be nonnegative");
  const double N = n + ell + 1.0;
  if (!(N > 0.0)) throw InvalidParameter("n + ell + 1 must be positive");
  return -q * q / (2.0 * N * N);
}

double z_zero_epsilon(double lambda, double mu, double N, SignBranch sign_branch) {
  return sign_value(sign_branch) * std::sqrt(1.0 - lambda * lambda * mu * mu / (N * N));
}

double mu_zero_epsilon(double lambda, double Z, double N, SignBranch sign_branch) {
  const double u = lambda * Z / N;
  return sign_value(sign_branch) / std::sqrt(1.0 + u * u);
}

namespace {

LimitCheck make_check(double value, double reference) {
  LimitCheck c;
  c.value = value;
  c.reference = reference;
  c.residual = std::abs(value - reference) / std::max(1.0, std::abs(reference));
  return c;
}

}  // namespace

LimitReport limit_suite(const ModelParams& params, const ChannelSpec& channel, int n) {
  LimitReport report;

  // (a) mu = 0: constant-mass relativistic spectrum.
  {
    ModelParams p = params;
    p.mu = 0.0;
    const ValidatedChannel vc = validate(p, channel);
    const RotationSolution rot = solve_rotation(vc);
    for (SignBranch s : {SignBranch::plus, SignBranch::minus}) {
      const EnergyLevel lvl = energy_level(vc, rot, n, s);
      const LimitCheck c = make_check(lvl.epsilon, mu_zero_epsilon(p.lambda, p.Z, lvl.qn.N, s));
      (s == SignBranch::plus ? report.mu_zero_plus : report.mu_zero_minus) = c;
    }
  }

  // (b) lambda -> 0 along {1e-2, 1e-3, 1e-4}: (eps - 1)/lambda^2 converges
  // at order lambda^2 to the nonrelativistic level with charge Z + mu.
  {
    report.lambda_to_zero.lambdas = {1e-2, 1e-3, 1e-4};
    for (int k = 0; k < 3; ++k) {
      ModelParams p = params;
      p.lambda = report.lambda_to_zero.lambdas[k];
      const ValidatedChannel vc = validate(p, channel);
      const RotationSolution rot = solve_rotation(vc);
      const EnergyLevel lvl = energy_level(vc, rot, n, SignBranch::plus);
      report.lambda_to_zero.values[k] = lvl.eps_minus_one / (p.lambda * p.lambda);
    }
    // Limiting effective ell uses gamma -> t * sign(kappa) * |kappa| = kappa (t = +1).
    const double gamma0 = channel.kappa;
    double ell0;
    if (channel.component == Component::upper) {
      ell0 = channel.kappa > 0 ? gamma0 : -gamma0 - 1.0;
    } else {
      ell0 = channel.kappa > 0 ? gamma0 - 1.0 : -gamma0;
    }
    const double N0 = n + ell0 + 1.0;
    const double q0 = params.Z + params.mu;
    report.lambda_to_zero.reference = -q0 * q0 / (2.0 * N0 * N0);

    const auto& v = report.lambda_to_zero.values;
    const auto& ls = report.lambda_to_zero.lambdas;
    // Richardson step in lambda^2 using the two smallest lambdas.
    const double r2 = (ls[1] * ls[1]) / (ls[2] * ls[2]);
    report.lambda_to_zero.extrapolated = (r2 * v[2] - v[1]) / (r2 - 1.0);
    report.lambda_to_zero.residual =
        std::abs(report.lambda_to_zero.extrapolated - report.lambda_to_zero.reference) /
        std::max(1.0, std::abs(report.lambda_to_zero.reference));
    // Observed order; infinity when the sequence has already converged to
    // rounding (the lambda^2 coefficient can vanish at special parameters).
    const double tail = std::abs(v[1] - v[2]);
    if (tail <= 1e-12 * std::max(1.0, std::abs(v[2]))) {
      report.lambda_to_zero.observed_order = std::numeric_limits<double>::infinity();
    } else {
      report.lambda_to_zero.observed_order =
          std::log(std::abs((v[0] - v[1]) / tail)) / std::log(ls[0] / ls[1]);
    }
  }

  // (c) Z = 0: scalar-potential spectrum.
  {
    ModelParams p = params;
    p.Z = 0.0;
    const ValidatedChannel vc = validate(p, channel);
    const RotationSolution rot = solve_rotation(vc);
    for (SignBranch s : {SignBranch::plus, SignBranch::minus}) {
      const EnergyLevel lvl = energy_level(vc, rot, n, s);
      const LimitCheck c = make_check(lvl.epsilon, z_zero_epsilon(p.lambda, p.mu, lvl.qn.N, s));
      (s == SignBranch::plus ? report.z_zero_plus : report.z_zero_minus) = c;
    }
  }

  return report;
}

}  // namespace diracpdm
