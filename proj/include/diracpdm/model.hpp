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

#include "diracpdm/errors.hpp"

namespace diracpdm {

/// Physical inputs in atomic units (hbar = m0 = e = 1).
///
/// Z is the charge strength of the 1/r potential and may carry either sign;
/// mu scales the singular 1/r mass term; lambda is the Compton wavelength
/// 1/c and must be strictly positive.  lambda is an explicit input rather
/// than a hard-coded 1/137 so the nonrelativistic limit lambda -> 0 can be
/// probed numerically.
struct ModelParams {
  double Z = 0.0;
  double mu = 0.0;
  double lambda = 1.0;
};

/// Upper (phi+) or lower (phi-) spinor component of the rotated doublet.
enum class Component { upper, lower };

/// Sign of the linear angle constraint C*mu + S*kappa/lambda = (+|-) Z.
enum class BranchSign { plus, minus };

/// Sign choice inside the energy formula (the +- in front of the square root).
enum class SignBranch { plus, minus };

inline double sign_value(BranchSign b) { return b == BranchSign::plus ? 1.0 : -1.0; }
inline double sign_value(SignBranch s) { return s == SignBranch::plus ? 1.0 : -1.0; }

/// One spin-orbit channel: kappa = +-1, +-2, ..., a constraint branch, and
/// the component whose level tower indexes the states of this channel.
struct ChannelSpec {
  int kappa = -1;
  BranchSign branch = BranchSign::minus;
  Component component = Component::upper;
};

/// Parameters plus channel that passed regime validation.
///
/// discriminant = (kappa/lambda)^2 + mu^2 - Z^2 is the radicand of the
/// angle solution; it must be nonnegative for the closed form to exist.
struct ValidatedChannel {
  ModelParams params;
  ChannelSpec channel;
  double discriminant = 0.0;
};

/// Checks finiteness, lambda > 0, kappa != 0, the subcritical condition
/// (kappa/lambda)^2 + mu^2 - Z^2 >= 0, and that the constraint angle admits
/// a positive cosine on the requested branch.
///
/// Throws InvalidParameter, SupercriticalCoupling, or NoPositiveCosine.
ValidatedChannel validate(const ModelParams& params, const ChannelSpec& channel);

}  // namespace diracpdm
