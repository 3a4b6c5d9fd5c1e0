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

#include <stdexcept>
#include <string>

namespace diracpdm {

/// Base class for every error thrown by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Nonfinite field, lambda <= 0, kappa == 0, or other precondition violation.
struct InvalidParameter : Error {
  using Error::Error;
};

/// (kappa/lambda)^2 + mu^2 - Z^2 < 0: the real closed-form solution ceases to exist.
struct SupercriticalCoupling : Error {
  using Error::Error;
};

/// Neither sign choice in the angle equation yields a cosine in (0, 1].
struct NoPositiveCosine : Error {
  using Error::Error;
};

/// Effective orbital number ell <= -1: no square-integrable r^(ell+1) behavior.
struct NonNormalizable : Error {
  using Error::Error;
};

/// Radicand of the energy formula is negative for the requested level.
struct ComplexEnergy : Error {
  using Error::Error;
};

/// Vanishing effective charge: the radial scale 2|q|/N degenerates.
struct ZeroCoupling : Error {
  using Error::Error;
};

/// log_gamma / Laguerre argument outside the supported domain.
struct DomainError : Error {
  using Error::Error;
};

/// Doubling the quadrature rule still moves the integral beyond tolerance.
struct NonConvergent : Error {
  using Error::Error;
};

/// Bound-state assembly failed: |epsilon| > C, non-binding level, or a
/// component weight inconsistent with an absent partner level.
struct NotConstructible : Error {
  using Error::Error;
};

/// |C -+ eps| below threshold: the first-order relation degenerates.
struct DegenerateDenominator : Error {
  using Error::Error;
};

/// Requested eigenvalue of the discretized radial operator is nonnegative.
struct NoBoundState : Error {
  using Error::Error;
};

/// Eigenfunction tail at the grid cutoff is not negligible.
struct GridTooSmall : Error {
  using Error::Error;
};

/// Self-consistency function has no sign change in the physical bracket.
struct NoRoot : Error {
  using Error::Error;
};

}  // namespace diracpdm
