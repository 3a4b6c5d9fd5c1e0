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

#include "diracpdm/wavefunction.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "diracpdm/special.hpp"

namespace diracpdm {

namespace {

// Weight radicands (C +- eps)/2C may land an ulp below zero when eps
// coincides with C (the lowest states); values in [-kWeightClamp, 0] are
// treated as exact zeros.
constexpr double kWeightClamp = 1e-12;

// Threshold below which |C -+ eps| counts as a degenerate relation denominator.
constexpr double kDegenerate = 1e-14;

}  // namespace

double RadialShape::value(double r) const {
  const double x = omega * r;
  const double a = 2.0 * ell + 1.0;
  if (x <= 0.0) return 0.0;
  return std::exp(log_norm + (ell + 1.0) * std::log(x) - 0.5 * x) * laguerre(n, a, x);
}

double RadialShape::d1(double r) const {
  const double x = omega * r;
  const double a = 2.0 * ell + 1.0;
  const double p = ell + 1.0;
  const double L = laguerre(n, a, x);
  const double Lp = laguerre_derivative(n, a, x);
  // omega * K * e^{-x/2} * x^{p-1} * [p L + x (L' - L/2)]
  return omega * std::exp(log_norm + (p - 1.0) * std::log(x) - 0.5 * x) *
         (p * L + x * (Lp - 0.5 * L));
}

double RadialShape::d2(double r) const {
  const double x = omega * r;
  const double a = 2.0 * ell + 1.0;
  const double p = ell + 1.0;
  const double L = laguerre(n, a, x);
  const double Lp = laguerre_derivative(n, a, x);
  const double Lpp = n >= 2 ? laguerre(n - 2, a + 2.0, x) : 0.0;
  // omega^2 K e^{-x/2} x^{p-2} [p(p-1) L + x(2p L' - p L) + x^2 (L/4 - L' + L'')]
  return omega * omega * std::exp(log_norm + (p - 2.0) * std::log(x) - 0.5 * x) *
         (p * (p - 1.0) * L + x * (2.0 * p * Lp - p * L) +
          x * x * (0.25 * L - Lp + Lpp));
}

RadialShape make_radial_shape(int n, double ell, double q) {
  if (n < 0) throw InvalidParameter("shape degree must be nonnegative");
  if (ell <= -1.0) {
    throw NonNormalizable("ell = " + std::to_string(ell) + " is not normalizable");
  }
  if (q == 0.0) throw ZeroCoupling("effective charge vanishes, no radial scale");
  const double N = n + ell + 1.0;
  RadialShape shape;
  shape.ell = ell;
  shape.n = n;
  shape.omega = 2.0 * std::abs(q) / N;
  shape.log_norm = 0.5 * (std::log(shape.omega) + log_gamma(n + 1.0) -
                          log_gamma(n + 2.0 * ell + 2.0) - std::log(2.0 * N));
  return shape;
}

double nonrel_radial(int n, double ell, double q_eff, double r) {
  if (!(r > 0.0)) throw InvalidParameter("radius must be positive");
  return make_radial_shape(n, ell, q_eff).value(r);
}

namespace {

Component other(Component c) {
  return c == Component::upper ? Component::lower : Component::upper;
}

double weight_radicand(double C, double eps, Component side) {
  return (side == Component::upper ? C + eps : C - eps) / (2.0 * C);
}

double clamp_weight(double radicand) {
  if (radicand < -kWeightClamp) {
    throw NotConstructible("|eps| exceeds C: component weights would be complex");
  }
  return radicand <= 0.0 ? 0.0 : std::sqrt(radicand);
}

void require_level_usable(const EnergyLevel& level, double C) {
  if (!level.binding) {
    throw NotConstructible("level is non-binding (Z eps + mu >= 0)");
  }
  if (std::abs(level.epsilon) > C + kWeightClamp) {
    throw NotConstructible("|eps| = " + std::to_string(std::abs(level.epsilon)) +
                           " exceeds C = " + std::to_string(C));
  }
}

}  // namespace

BoundState make_bound_state(const ValidatedChannel& vc, const RotationSolution& rot, int n,
                            SignBranch sign_branch, Pairing pairing) {
  BoundState state;
  state.vc = vc;
  state.rot = rot;
  state.pairing = pairing;
  state.level = energy_level(vc, rot, n, sign_branch);
  require_level_usable(state.level, rot.C);
  state.omega = 2.0 * std::abs(state.level.q_eff) / state.level.qn.N;

  ChannelSpec partner_channel = vc.channel;
  partner_channel.component = other(vc.channel.component);
  const double ell_partner = effective_ell(rot, partner_channel);

  int n_partner;
  if (pairing == Pairing::same_n) {
    n_partner = n;
  } else {
    // Degree with equal N; the ell maps differ by exactly one.
    n_partner = static_cast<int>(std::lround(state.level.qn.N - ell_partner - 1.0));
  }

  const Component anchor = vc.channel.component;
  double eps_anchor = state.level.epsilon;
  double eps_partner;

  if (n_partner >= 0) {
    ValidatedChannel vcp = vc;
    vcp.channel = partner_channel;
    state.partner_level = energy_level(vcp, rot, n_partner, sign_branch);
    require_level_usable(*state.partner_level, rot.C);
    eps_partner = state.partner_level->epsilon;
  } else {
    // The partner tower has no such degree.  The component is identically
    // zero, which is only consistent when its weight vanishes as well.
    eps_partner = eps_anchor;
    const double radicand = weight_radicand(rot.C, eps_partner, other(anchor));
    if (std::abs(radicand) > kWeightClamp) {
      throw NotConstructible("partner level absent but its weight does not vanish");
    }
  }

  const double eps_upper = anchor == Component::upper ? eps_anchor : eps_partner;
  const double eps_lower = anchor == Component::lower ? eps_anchor : eps_partner;
  state.prefactor_plus = clamp_weight(weight_radicand(rot.C, eps_upper, Component::upper));
  state.prefactor_minus = clamp_weight(weight_radicand(rot.C, eps_lower, Component::lower));
  if (state.prefactor_plus == 0.0 && state.prefactor_minus == 0.0) {
    throw NotConstructible("both component weights vanish");
  }

  const auto fill_shape = [&](Component side, const EnergyLevel& lvl, double ell) {
    RadialShape shape = make_radial_shape(lvl.qn.n, ell, lvl.q_eff);
    if (side == Component::upper) {
      state.shape_plus = shape;
      state.has_plus = true;
    } else {
      state.shape_minus = shape;
      state.has_minus = true;
    }
  };
  fill_shape(anchor, state.level, state.level.qn.ell_eff);
  if (state.partner_level) fill_shape(other(anchor), *state.partner_level, ell_partner);

  return state;
}

double spinor_component(const BoundState& state, Component component, double r) {
  if (component == Component::upper) {
    return state.has_plus ? state.prefactor_plus * state.shape_plus.value(r) : 0.0;
  }
  return state.has_minus ? state.prefactor_minus * state.shape_minus.value(r) : 0.0;
}

double spinor_component_d1(const BoundState& state, Component component, double r) {
  if (component == Component::upper) {
    return state.has_plus ? state.prefactor_plus * state.shape_plus.d1(r) : 0.0;
  }
  return state.has_minus ? state.prefactor_minus * state.shape_minus.d1(r) : 0.0;
}

double ode_residual(const BoundState& state, Component component, double r) {
  if (!(r > 0.0)) throw InvalidParameter("radius must be positive");
  const bool present = component == Component::upper ? state.has_plus : state.has_minus;
  if (!present) return 0.0;
  const RadialShape& shape =
      component == Component::upper ? state.shape_plus : state.shape_minus;
  const double pf =
      component == Component::upper ? state.prefactor_plus : state.prefactor_minus;
  const double phi = pf * shape.value(r);
  const double phi2 = pf * shape.d2(r);
  const double centrifugal = shape.ell * (shape.ell + 1.0) / (r * r);
  // (eps^2 - 1)/lambda^2 written through the mapped energy, which the exact
  // solution cancels to rounding.
  const double k2 = 2.0 * state.level.E_equiv;
  return -phi2 + (centrifugal + 2.0 * state.level.q_eff / r - k2) * phi;
}

CompatDirection natural_direction(const BoundState& state) {
  return state.rot.branch == BranchSign::plus ? CompatDirection::minus_from_plus
                                              : CompatDirection::plus_from_minus;
}

double first_order_image(const BoundState& state, CompatDirection direction, double r) {
  const double lam = state.vc.params.lambda;
  const double C = state.rot.C;
  const double S = state.rot.S;
  const double gamma = state.rot.gamma;
  const double eps = state.level.epsilon;

  if (direction == CompatDirection::plus_from_minus) {
    const double denom = C - eps;
    if (std::abs(denom) < kDegenerate * std::max({1.0, std::abs(C), std::abs(eps)})) {
      throw DegenerateDenominator("C - eps vanishes; relation degenerates");
    }
    const double src = spinor_component(state, Component::lower, r);
    const double src_d1 = spinor_component_d1(state, Component::lower, r);
    return (lam / denom) * ((S / lam - gamma / r) * src + src_d1);
  }
  const double denom = C + eps;
  if (std::abs(denom) < kDegenerate * std::max({1.0, std::abs(C), std::abs(eps)})) {
    throw DegenerateDenominator("C + eps vanishes; relation degenerates");
  }
  const double src = spinor_component(state, Component::upper, r);
  const double src_d1 = spinor_component_d1(state, Component::upper, r);
  return (lam / denom) * ((-S / lam + gamma / r) * src + src_d1);
}

double compatibility_residual(const BoundState& state, double r, CompatDirection direction) {
  if (!(r > 0.0)) throw InvalidParameter("radius must be positive");
  const Component target =
      direction == CompatDirection::plus_from_minus ? Component::upper : Component::lower;
  return spinor_component(state, target, r) - first_order_image(state, direction, r);
}

double compatibility_residual(const BoundState& state, double r) {
  return compatibility_residual(state, r, natural_direction(state));
}

std::vector<RadialSample> sample_grid(const BoundState& state, double r_min, double r_max,
                                      int count, Spacing spacing) {
  if (!(0.0 < r_min && r_min < r_max)) throw InvalidParameter("require 0 < r_min < r_max");
  if (count < 2) throw InvalidParameter("grid needs at least two points");

  std::vector<double> radii(count);
  for (int i = 0; i < count; ++i) {
    const double s = static_cast<double>(i) / (count - 1);
    radii[i] = spacing == Spacing::linear ? r_min + s * (r_max - r_min)
                                          : r_min * std::pow(r_max / r_min, s);
  }

  // Pick a non-degenerate relation direction once for the whole grid.
  CompatDirection dir = natural_direction(state);
  bool have_dir = true;
  try {
    first_order_image(state, dir, radii[0]);
  } catch (const DegenerateDenominator&) {
    dir = dir == CompatDirection::plus_from_minus ? CompatDirection::minus_from_plus
                                                  : CompatDirection::plus_from_minus;
    try {
      first_order_image(state, dir, radii[0]);
    } catch (const DegenerateDenominator&) {
      have_dir = false;
    }
  }

  std::vector<RadialSample> samples(count);
  double max_plus = 0.0, max_minus = 0.0;
  for (int i = 0; i < count; ++i) {
    RadialSample& s = samples[i];
    s.r = radii[i];
    s.phi_plus = spinor_component(state, Component::upper, s.r);
    s.phi_minus = spinor_component(state, Component::lower, s.r);
    const auto [g, f] = unrotate(s.phi_plus, s.phi_minus, state.rot);
    s.g = g;
    s.f = f;
    s.ode_residual_plus = ode_residual(state, Component::upper, s.r);
    s.ode_residual_minus = ode_residual(state, Component::lower, s.r);
    s.compat_residual = have_dir ? compatibility_residual(state, s.r, dir) : 0.0;
    max_plus = std::max(max_plus, std::abs(s.phi_plus));
    max_minus = std::max(max_minus, std::abs(s.phi_minus));
  }

  const double k2 = std::abs(2.0 * state.level.E_equiv);
  const double ode_scale_plus = k2 * max_plus;
  const double ode_scale_minus = k2 * max_minus;
  const double compat_scale = std::max(max_plus, max_minus);
  for (RadialSample& s : samples) {
    s.ode_residual_plus = ode_scale_plus > 0.0 ? s.ode_residual_plus / ode_scale_plus : 0.0;
    s.ode_residual_minus = ode_scale_minus > 0.0 ? s.ode_residual_minus / ode_scale_minus : 0.0;
    s.compat_residual = compat_scale > 0.0 ? s.compat_residual / compat_scale : 0.0;
  }
  return samples;
}

double normalization(const BoundState& state, Component component) {
  const bool present = component == Component::upper ? state.has_plus : state.has_minus;
  if (!present) return 0.0;
  const RadialShape& shape =
      component == Component::upper ? state.shape_plus : state.shape_minus;
  const double pf =
      component == Component::upper ? state.prefactor_plus : state.prefactor_minus;
  if (pf == 0.0) return 0.0;

  // phi^2 dr = pf^2 K^2 x^(2 ell + 2) e^{-x} L^2 dx / omega; the
  // x^alpha e^{-x} factor is the weight of the generalized rule, so the
  // summed integrand is the squared polynomial alone.
  const double alpha = 2.0 * shape.ell + 2.0;
  const double a = 2.0 * shape.ell + 1.0;
  const double k2_over_omega = std::exp(2.0 * shape.log_norm) / shape.omega;
  const auto eval = [&](int m) {
    const QuadratureRule rule = gauss_laguerre(m, alpha);
    double sum = 0.0;
    for (int i = 0; i < m; ++i) {
      const double L = laguerre(shape.n, a, rule.nodes[i]);
      sum += rule.weights[i] * L * L;
    }
    return pf * pf * k2_over_omega * sum;
  };
  const int m = std::max(shape.n + 2, 16);
  const double coarse = eval(m);
  const double fine = eval(2 * m);
  if (std::abs(fine - coarse) > 1e-8 * std::max({std::abs(fine), std::abs(coarse), 1e-300})) {
    throw NonConvergent("component normalization did not converge under rule doubling");
  }
  return fine;
}

}  // namespace diracpdm
