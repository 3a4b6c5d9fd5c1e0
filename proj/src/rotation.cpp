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

#include "diracpdm/rotation.hpp"

#include <cmath>
#include <string>

namespace diracpdm {

double RotationSolution::angle() const { return std::atan2(S, C); }

namespace {

RotationSolution build(const ValidatedChannel& vc, int t) {
  const double Z = vc.params.Z;
  const double mu = vc.params.mu;
  const double lam = vc.params.lambda;
  const int kappa = vc.channel.kappa;
  const double sigma = sign_value(vc.channel.branch);

  const double lam2 = lam * lam;
  const double denom = kappa * kappa + lam2 * mu * mu;
  // sqrt(kappa^2 + lambda^2(mu^2 - Z^2)) written through the validated radicand.
  const double root = lam * std::sqrt(vc.discriminant);
  const double c = (sigma * lam2 * Z * mu + t * std::abs(kappa) * root) / denom;
  if (!(c > 0.0)) {
    throw NoPositiveCosine("cosine not positive for t = " + std::to_string(t));
  }

  RotationSolution rot;
  rot.C = c;
  // Sine from the linear constraint, not sqrt(1 - C^2), so its sign is kept.
  rot.S = lam * (sigma * Z - c * mu) / kappa;
  rot.t = t;
  rot.gamma = t * (kappa > 0 ? 1.0 : -1.0) * root;
  rot.branch = vc.channel.branch;
  return rot;
}

}  // namespace

RotationSolution solve_rotation(const ValidatedChannel& vc) {
  try {
    return build(vc, +1);
  } catch (const NoPositiveCosine&) {
    return build(vc, -1);
  }
}

RotationSolution solve_rotation(const ValidatedChannel& vc, TSign forced) {
  return build(vc, forced == TSign::plus ? +1 : -1);
}

namespace {

// Half-angle cosine/sine of lambda*eta in [-pi/2, pi/2]; the half angle lies
// in [-pi/4, pi/4] so its cosine is positive and the sine follows sign(S).
std::pair<double, double> half_angle(const RotationSolution& rot) {
  const double ch = std::sqrt(0.5 * (1.0 + rot.C));
  const double sh = (rot.S >= 0.0 ? 1.0 : -1.0) * std::sqrt(std::max(0.0, 0.5 * (1.0 - rot.C)));
  return {ch, rot.S == 0.0 ? 0.0 : sh};
}

}  // namespace

std::pair<double, double> rotate(double g, double f, const RotationSolution& rot) {
  const auto [ch, sh] = half_angle(rot);
  return {ch * g + sh * f, -sh * g + ch * f};
}

std::pair<double, double> unrotate(double phi_plus, double phi_minus,
                                   const RotationSolution& rot) {
  const auto [ch, sh] = half_angle(rot);
  return {ch * phi_plus - sh * phi_minus, sh * phi_plus + ch * phi_minus};
}

}  // namespace diracpdm
