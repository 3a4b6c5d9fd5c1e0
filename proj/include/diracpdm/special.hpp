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
#include <functional>

#include "diracpdm/errors.hpp"

namespace diracpdm {

/// Associated Laguerre polynomial L_n^alpha(x) by the three-term upward
/// recurrence (k+1) L_{k+1} = (2k+1+alpha-x) L_k - (k+alpha) L_{k-1}.
///
/// alpha may be any real > -1 (negative non-integer orders occur in the
/// spinor components); alpha <= -1 is rejected because the Gamma-factor
/// normalizations break down there.
double laguerre(int n, double alpha, double x);

/// d/dx L_n^alpha(x) = -L_{n-1}^{alpha+1}(x) for n >= 1, zero for n = 0.
double laguerre_derivative(int n, double alpha, double x);

/// Natural log of Gamma(x) for x > 0 (Lanczos approximation, g = 7).
/// Relative error below 1e-13 on [0.5, 1e6].
double log_gamma(double x);

/// Gauss-Laguerre rule for the weight x^alpha e^{-x} on (0, inf).
///
/// Nodes are strictly increasing and positive, weights positive.  The rule
/// integrates x^(k+alpha) e^{-x} exactly for polynomial degree k up to
/// 2*count - 1 (so plain moments x^k e^{-x} with integer alpha offset).
/// log_weights stores log(weights) so that e^{+x}-rescaled sums stay
/// representable for large rules.
struct QuadratureRule {
  Eigen::ArrayXd nodes;
  Eigen::ArrayXd weights;
  Eigen::ArrayXd log_weights;
  double alpha = 0.0;
  int count = 0;
};

/// Builds the rule via the Golub-Welsch eigenproblem of the Jacobi matrix.
/// Requires count >= 1 and alpha > -1; count is capped at 512.
QuadratureRule gauss_laguerre(int count, double alpha = 0.0);

/// Integral of f over (0, inf) for integrands decaying like
/// polynomial * e^{-omega r}.  Substitutes x = omega r and applies the
/// alpha = 0 rule with e^{+x}-rescaled weights; the result is validated by
/// doubling the rule size.  Throws NonConvergent when doubling moves the
/// value by more than 1e-8 relative.
double integrate_radial(const std::function<double(double)>& f, double omega, int rule_size);

}  // namespace diracpdm
