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

#include <doctest.h>

#include <cmath>

#include "diracpdm/special.hpp"
#include "oracles.hpp"

using namespace diracpdm;

TEST_CASE("laguerre low-degree closed forms") {
  CHECK(laguerre(0, 2.5, 7.0) == 1.0);
  CHECK(laguerre(0, -0.5, 0.0) == 1.0);
  // L_1^alpha(x) = alpha + 1 - x
  CHECK(laguerre(1, 2.0, 0.5) == doctest::Approx(2.5).epsilon(1e-15));
  // series: L_2^1(x) = 3 - 3x + x^2/2
  CHECK(laguerre(2, 1.0, 1.0) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("laguerre recurrence matches the explicit series") {
  const double alphas[] = {-0.9, -0.5, 0.0, 0.5, 1.0, 2.5, 10.0};
  const double xs[] = {0.0, 0.1, 1.0, 5.0, 20.0, 50.0};
  for (int n = 0; n <= 15; ++n) {
    for (double alpha : alphas) {
      for (double x : xs) {
        const double ours = laguerre(n, alpha, x);
        const double ref = test_oracles::laguerre_series(n, alpha, x);
        CHECK(std::abs(ours - ref) <= 1e-10 * std::max(1.0, std::abs(ref)));
      }
    }
  }
}

TEST_CASE("laguerre domain errors") {
  CHECK_THROWS_AS(laguerre(-1, 0.0, 1.0), DomainError);
  CHECK_THROWS_AS(laguerre(2, -1.0, 1.0), DomainError);
  CHECK_THROWS_AS(laguerre(2, -1.5, 1.0), DomainError);
  CHECK_THROWS_AS(laguerre(2, 0.0, -0.1), DomainError);
}

TEST_CASE("laguerre derivative identity and finite differences") {
  CHECK(laguerre_derivative(0, 3.0, 2.0) == 0.0);
  CHECK(laguerre_derivative(1, 0.5, 9.0) == -1.0);
  CHECK(laguerre_derivative(2, 1.0, 1.0) == doctest::Approx(-2.0).epsilon(1e-14));

  const double alphas[] = {-0.5, 0.0, 1.5, 4.0};
  const double xs[] = {0.5, 1.0, 5.0, 17.0};
  for (int n = 1; n <= 9; ++n) {
    for (double alpha : alphas) {
      for (double x : xs) {
        const double fd = test_oracles::central_difference(
            [&](double t) { return laguerre(n, alpha, t); }, x);
        CHECK(std::abs(laguerre_derivative(n, alpha, x) - fd) <= 1e-5);
      }
    }
  }
}

TEST_CASE("log_gamma against closed forms") {
  CHECK(log_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(std::abs(log_gamma(2.0)) <= 1e-14);
  // Gamma(1/2) = sqrt(pi)
  CHECK(log_gamma(0.5) == doctest::Approx(0.57236494292470009).epsilon(1e-14));
  // Gamma(10) = 9! = 362880
  CHECK(log_gamma(10.0) == doctest::Approx(std::log(362880.0)).epsilon(1e-14));
  CHECK_THROWS_AS(log_gamma(0.0), DomainError);
  CHECK_THROWS_AS(log_gamma(-3.2), DomainError);
}

TEST_CASE("log_gamma accuracy across the stated range") {
  // std::lgamma is an independent reference implementation here.
  for (double x : {0.5, 0.75, 1.0, 1.5, 3.0, 7.5, 20.0, 123.0, 4567.0, 1e5, 1e6}) {
    const double ref = std::lgamma(x);
    const double scale = std::max(1.0, std::abs(ref));
    CHECK(std::abs(log_gamma(x) - ref) <= 1e-13 * scale);
  }
  // functional equation Gamma(x+1) = x Gamma(x)
  for (double x : {0.6, 1.3, 2.4, 11.0, 400.0}) {
    CHECK(log_gamma(x + 1.0) ==
          doctest::Approx(log_gamma(x) + std::log(x)).epsilon(1e-13));
  }
}

TEST_CASE("gauss-laguerre rule structure and moments") {
  for (double alpha : {0.0, 0.5, 2.0, 3.7}) {
    const QuadratureRule rule = gauss_laguerre(24, alpha);
    REQUIRE(rule.count == 24);
    for (int i = 0; i < rule.count; ++i) {
      CHECK(rule.nodes[i] > 0.0);
      CHECK(rule.weights[i] > 0.0);
      if (i > 0) CHECK(rule.nodes[i] > rule.nodes[i - 1]);
    }
    // integral of x^(k+alpha) e^-x = Gamma(k+alpha+1), exact through 2*count-1
    for (int k = 0; k <= 2 * rule.count - 2; ++k) {
      double sum = 0.0;
      for (int i = 0; i < rule.count; ++i) {
        sum += rule.weights[i] * std::pow(rule.nodes[i], k);
      }
      const double exact = std::exp(std::lgamma(k + alpha + 1.0));
      CHECK(std::abs(sum - exact) <= 1e-12 * exact);
    }
  }
}

TEST_CASE("integrate_radial moments and hydrogen normalization") {
  const double unit = integrate_radial([](double r) { return std::exp(-r); }, 1.0, 16);
  CHECK(unit == doctest::Approx(1.0).epsilon(1e-12));

  const double second_moment =
      integrate_radial([](double r) { return r * r * std::exp(-r); }, 1.0, 16);
  CHECK(second_moment == doctest::Approx(2.0).epsilon(1e-12));

  // moments Gamma(k+1)/omega^(k+1) of e^{-omega r} r^k
  for (double omega : {0.5, 1.0, 3.0}) {
    for (int k = 0; k <= 10; ++k) {
      const double value = integrate_radial(
          [&](double r) { return std::pow(r, k) * std::exp(-omega * r); }, omega, 16);
      const double exact = std::exp(std::lgamma(k + 1.0)) / std::pow(omega, k + 1.0);
      CHECK(std::abs(value - exact) <= 1e-12 * exact);
    }
  }

  // normalized hydrogen ground state: integral of (2 r e^-r)^2 dr = 1
  const double hydrogen = integrate_radial(
      [](double r) { return 4.0 * r * r * std::exp(-2.0 * r); }, 2.0, 16);
  CHECK(hydrogen == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("integrate_radial rejects misdeclared decay") {
  // The integrand decays far slower than the claimed scale, so doubling the
  // rule keeps moving the value.
  CHECK_THROWS_AS(integrate_radial([](double r) { return std::exp(-0.02 * r); }, 5.0, 8),
                  NonConvergent);
}
