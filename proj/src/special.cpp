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

#include "diracpdm/special.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <string>

namespace diracpdm {

namespace {

void check_laguerre_domain(int n, double alpha, double x) {
  if (n < 0) throw DomainError("Laguerre degree must be nonnegative");
  if (!(alpha > -1.0)) {
    throw DomainError("Laguerre order must exceed -1, got " + std::to_string(alpha));
  }
  if (!(x >= 0.0)) throw DomainError("Laguerre argument must be nonnegative");
}

}  // namespace

double laguerre(int n, double alpha, double x) {
  check_laguerre_domain(n, alpha, x);
  if (n == 0) return 1.0;
  double lkm1 = 1.0;
  double lk = 1.0 + alpha - x;
  for (int k = 1; k < n; ++k) {
    const double lkp1 = ((2.0 * k + 1.0 + alpha - x) * lk - (k + alpha) * lkm1) / (k + 1.0);
    lkm1 = lk;
    lk = lkp1;
  }
  return lk;
}

double laguerre_derivative(int n, double alpha, double x) {
  check_laguerre_domain(n, alpha, x);
  if (n == 0) return 0.0;
  return -laguerre(n - 1, alpha + 1.0, x);
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma requires x > 0");
  // Lanczos, g = 7, 9 coefficients.
  static const double coeff[9] = {
      0.99999999999980993,  676.5203681218851,    -1259.1392167224028,
      771.32342877765313,   -176.61502916214059,  12.507343278686905,
      -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  if (x < 0.5) {
    // Reflection keeps the approximation in its accurate range.
    return std::log(M_PI / std::sin(M_PI * x)) - log_gamma(1.0 - x);
  }
  const double z = x - 1.0;
  double sum = coeff[0];
  for (int i = 1; i < 9; ++i) sum += coeff[i] / (z + i);
  const double t = z + 7.5;
  return 0.5 * std::log(2.0 * M_PI) + (z + 0.5) * std::log(t) - t + std::log(sum);
}

QuadratureRule gauss_laguerre(int count, double alpha) {
  if (count < 1 || count > 256) {
    throw InvalidParameter("quadrature rule size must be in [1, 256]");
  }
  if (!(alpha > -1.0)) {
    throw InvalidParameter("quadrature weight order must exceed -1");
  }

  // Eigenvalues of the Jacobi matrix seed the nodes (Golub-Welsch); the
  // dense eigensolver is accurate enough for that but not for the tiny
  // trailing weights, so nodes are polished by Newton on L_count^alpha and
  // weights come from the closed formula
  //   w_i = Gamma(count+alpha+1) x_i / (count! [(count+1) L_{count+1}(x_i)]^2).
  Eigen::VectorXd diag(count), sub(count > 1 ? count - 1 : 1);
  for (int k = 0; k < count; ++k) diag[k] = 2.0 * k + alpha + 1.0;
  for (int k = 1; k < count; ++k) sub[k - 1] = std::sqrt(k * (k + alpha));

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, count > 1 ? sub : Eigen::VectorXd::Zero(0),
                                Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NonConvergent("quadrature eigenproblem failed");
  }

  QuadratureRule rule;
  rule.alpha = alpha;
  rule.count = count;
  rule.nodes = solver.eigenvalues().array();
  rule.log_weights = Eigen::ArrayXd(count);
  rule.weights = Eigen::ArrayXd(count);
  const double log_head = log_gamma(count + alpha + 1.0) - log_gamma(count + 1.0);
  for (int i = 0; i < count; ++i) {
    double x = rule.nodes[i];
    for (int sweep = 0; sweep < 3; ++sweep) {
      const double value = laguerre(count, alpha, x);
      const double slope = laguerre_derivative(count, alpha, x);
      if (slope == 0.0) break;
      const double step = value / slope;
      x -= step;
      if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(x))) break;
    }
    rule.nodes[i] = x;
    const double tail = (count + 1.0) * laguerre(count + 1, alpha, x);
    rule.log_weights[i] = log_head + std::log(x) - 2.0 * std::log(std::abs(tail));
    rule.weights[i] = std::exp(rule.log_weights[i]);
  }
  return rule;
}

namespace {

double integrate_once(const std::function<double(double)>& f, double omega, int m) {
  const QuadratureRule rule = gauss_laguerre(m, 0.0);
  double sum = 0.0;
  for (int i = 0; i < m; ++i) {
    // w_i e^{x_i} f(x_i / omega) / omega, products formed in log space so
    // large nodes do not underflow the weight.
    const double scaled_w = std::exp(rule.log_weights[i] + rule.nodes[i]);
    sum += scaled_w * f(rule.nodes[i] / omega);
  }
  return sum / omega;
}

}  // namespace

double integrate_radial(const std::function<double(double)>& f, double omega, int rule_size) {
  if (!(omega > 0.0)) throw InvalidParameter("integration scale must be positive");
  if (rule_size < 2) throw InvalidParameter("rule_size must be at least 2");
  const int m = std::min(rule_size, 128);
  const double coarse = integrate_once(f, omega, m);
  const double fine = integrate_once(f, omega, 2 * m);
  const double scale = std::max({std::abs(coarse), std::abs(fine), 1e-300});
  if (std::abs(fine - coarse) > 1e-8 * scale) {
    throw NonConvergent("radial integral moved by " + std::to_string(std::abs(fine - coarse)) +
                        " when doubling the rule");
  }
  return fine;
}

}  // namespace diracpdm
