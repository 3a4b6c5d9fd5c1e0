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
#include <limits>
#include <random>
#include <tuple>

#include "diracpdm/model.hpp"
#include "diracpdm/rotation.hpp"

using namespace diracpdm;

TEST_CASE("validate computes the radicand") {
  const ValidatedChannel a =
      validate(ModelParams{0.0, 0.0, 1.0}, ChannelSpec{-1, BranchSign::plus, Component::upper});
  CHECK(a.discriminant == doctest::Approx(1.0).epsilon(1e-15));

  const ValidatedChannel b =
      validate(ModelParams{1.0, 0.0, 0.1}, ChannelSpec{-1, BranchSign::plus, Component::upper});
  CHECK(b.discriminant == doctest::Approx(99.0).epsilon(1e-15));
}

TEST_CASE("validate rejects bad input") {
  const ChannelSpec ch{-1, BranchSign::plus, Component::upper};
  CHECK_THROWS_AS(validate(ModelParams{200.0, 0.0, 0.1}, ch), SupercriticalCoupling);
  CHECK_THROWS_AS(validate(ModelParams{1.0, 0.0, 0.0}, ch), InvalidParameter);
  CHECK_THROWS_AS(validate(ModelParams{1.0, 0.0, -0.5}, ch), InvalidParameter);
  CHECK_THROWS_AS(
      validate(ModelParams{std::numeric_limits<double>::quiet_NaN(), 0.0, 1.0}, ch),
      InvalidParameter);
  CHECK_THROWS_AS(
      validate(ModelParams{1.0, std::numeric_limits<double>::infinity(), 1.0}, ch),
      InvalidParameter);
  CHECK_THROWS_AS(validate(ModelParams{1.0, 0.0, 1.0},
                           ChannelSpec{0, BranchSign::plus, Component::upper}),
                  InvalidParameter);
}

TEST_CASE("validate is total over finite inputs") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> zs(-3.0, 3.0), mus(-2.0, 2.0), ls(1e-3, 0.8);
  std::uniform_int_distribution<int> ks(-3, 3);
  int returned = 0, supercritical = 0, no_cosine = 0;
  for (int i = 0; i < 2000; ++i) {
    int kappa = ks(rng);
    if (kappa == 0) kappa = 1;
    const ChannelSpec ch{kappa, i % 2 ? BranchSign::plus : BranchSign::minus, Component::upper};
    try {
      validate(ModelParams{zs(rng), mus(rng), ls(rng)}, ch);
      ++returned;
    } catch (const SupercriticalCoupling&) {
      ++supercritical;
    } catch (const NoPositiveCosine&) {
      ++no_cosine;
    }
  }
  CHECK(returned + supercritical + no_cosine == 2000);
  CHECK(returned > 0);
}

TEST_CASE("no positive cosine is reachable") {
  // lambda^2 Z mu = -0.5 exactly cancels |kappa gamma| = 0.5 on the + branch.
  CHECK_THROWS_AS(validate(ModelParams{2.0, -1.0, 0.5},
                           ChannelSpec{1, BranchSign::plus, Component::upper}),
                  NoPositiveCosine);
}

namespace {

RotationSolution solve(double Z, double mu, double lambda, int kappa, BranchSign branch) {
  const ValidatedChannel vc = validate(ModelParams{Z, mu, lambda},
                                       ChannelSpec{kappa, branch, Component::upper});
  return solve_rotation(vc);
}

}  // namespace

TEST_CASE("rotation closed-form spot values") {
  // No couplings: identity rotation.
  const RotationSolution id = solve(0.0, 0.0, 1.0, -1, BranchSign::plus);
  CHECK(id.C == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(id.S == doctest::Approx(0.0).epsilon(1e-15));

  // mu = 0 reduces to C = sqrt(1 - (lambda Z / kappa)^2).
  const RotationSolution a = solve(1.0, 0.0, 0.5, -1, BranchSign::plus);
  CHECK(a.C == doctest::Approx(std::sqrt(0.75)).epsilon(1e-14));

  const RotationSolution b = solve(1.0, 0.0, 0.1, -1, BranchSign::plus);
  CHECK(b.gamma == doctest::Approx(-std::sqrt(0.99)).epsilon(1e-14));
  CHECK(b.t == 1);
}

TEST_CASE("rotation invariants over a parameter grid") {
  for (double Z : {-1.5, -0.3, 0.0, 0.4, 1.2}) {
    for (double mu : {-0.8, 0.0, 0.25, 0.9}) {
      for (double lambda : {0.02, 0.1, 0.45}) {
        for (int kappa : {-3, -1, 1, 2}) {
          for (BranchSign branch : {BranchSign::plus, BranchSign::minus}) {
            RotationSolution rot;
            try {
              rot = solve(Z, mu, lambda, kappa, branch);
            } catch (const Error&) {
              continue;
            }
            const double scale =
                std::max({1.0, std::abs(Z), std::abs(mu), std::abs(kappa / lambda)});
            const double constraint =
                rot.C * mu + rot.S * kappa / lambda - sign_value(branch) * Z;
            CHECK(std::abs(constraint) <= 1e-12 * scale);
            CHECK(std::abs(rot.C * rot.C + rot.S * rot.S - 1.0) <= 1e-12);
            CHECK(rot.C > 0.0);
            CHECK(rot.C <= 1.0 + 1e-15);
            const double gamma2 = kappa * kappa + lambda * lambda * (mu * mu - Z * Z);
            CHECK(std::abs(rot.gamma * rot.gamma - gamma2) <= 1e-12 * std::abs(gamma2));
            CHECK((rot.gamma > 0.0) == ((rot.t > 0) == (kappa > 0)));
            // gamma = C kappa - lambda S mu on every branch
            CHECK(rot.gamma ==
                  doctest::Approx(rot.C * kappa - lambda * rot.S * mu).epsilon(1e-12));
          }
        }
      }
    }
  }
}

TEST_CASE("forced sign choice flips gamma and can fail") {
  const ValidatedChannel vc = validate(ModelParams{-1.0, 0.6, 0.4},
                                       ChannelSpec{-1, BranchSign::plus, Component::upper});
  const RotationSolution plus = solve_rotation(vc, TSign::plus);
  CHECK(std::abs(plus.gamma) > 0.0);
  try {
    const RotationSolution minus = solve_rotation(vc, TSign::minus);
    CHECK(minus.gamma == doctest::Approx(-plus.gamma).epsilon(1e-14));
    CHECK(minus.C > 0.0);
  } catch (const NoPositiveCosine&) {
    // acceptable: the second angle has a nonpositive cosine here
  }
}

TEST_CASE("brute-force scan over the angle agrees with the solver") {
  // Scan lambda*eta in [-pi/2, pi/2] and minimize the constraint residual.
  for (auto [Z, mu, lambda, kappa] :
       {std::tuple{-1.0, 0.1, 0.1, -1}, std::tuple{0.7, -0.4, 0.3, 2},
        std::tuple{1.0, 0.0, 0.5, -1}}) {
    for (BranchSign branch : {BranchSign::plus, BranchSign::minus}) {
      RotationSolution rot;
      try {
        rot = solve(Z, mu, lambda, kappa, branch);
      } catch (const Error&) {
        continue;
      }
      const int steps = 1000000;
      double best_angle = 0.0, best_res = std::numeric_limits<double>::infinity();
      for (int i = 0; i <= steps; ++i) {
        const double theta = -M_PI_2 + M_PI * i / steps;
        const double c = std::cos(theta);
        if (c <= 0.0) continue;
        const double res =
            std::abs(c * mu + std::sin(theta) * kappa / lambda - sign_value(branch) * Z);
        if (res < best_res) {
          best_res = res;
          best_angle = theta;
        }
      }
      CHECK(std::abs(best_angle - rot.angle()) <= 2.0 * M_PI / steps);
    }
  }
}

TEST_CASE("rotate spot values and norm preservation") {
  RotationSolution id;  // C = 1, S = 0
  const auto [p1, m1] = rotate(1.0, 0.0, id);
  CHECK(p1 == 1.0);
  CHECK(m1 == 0.0);

  RotationSolution quarter;  // lambda*eta = pi/2
  quarter.C = 0.0;
  quarter.S = 1.0;
  const auto [p2, m2] = rotate(0.6, 0.8, quarter);
  CHECK(p2 == doctest::Approx(0.98994949366116654).epsilon(1e-14));
  CHECK(m2 == doctest::Approx(0.14142135623730950).epsilon(1e-13));

  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    RotationSolution rot;
    const double theta = u(rng) * M_PI_2;
    rot.C = std::cos(theta);
    rot.S = std::sin(theta);
    const double g = u(rng), f = u(rng);
    const auto [p, m] = rotate(g, f, rot);
    CHECK(std::abs(p * p + m * m - (g * g + f * f)) <= 1e-14);
  }
}

TEST_CASE("unrotate inverts rotate") {
  RotationSolution id;
  const auto [g0, f0] = unrotate(3.0, 4.0, id);
  CHECK(g0 == 3.0);
  CHECK(f0 == 4.0);

  // Exact inverse at lambda*eta = pi/2: the transpose of the rotation.
  RotationSolution quarter;
  quarter.C = 0.0;
  quarter.S = 1.0;
  const auto [g1, f1] = unrotate(1.0, 0.0, quarter);
  CHECK(g1 == doctest::Approx(M_SQRT1_2).epsilon(1e-14));
  CHECK(f1 == doctest::Approx(M_SQRT1_2).epsilon(1e-14));

  std::mt19937 rng(23);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    RotationSolution rot;
    const double theta = u(rng) * M_PI_2;
    rot.C = std::cos(theta);
    rot.S = std::sin(theta);
    const double g = u(rng), f = u(rng);
    const auto [p, m] = rotate(g, f, rot);
    const auto [g2, f2] = unrotate(p, m, rot);
    CHECK(std::abs(g2 - g) <= 1e-14);
    CHECK(std::abs(f2 - f) <= 1e-14);
    const auto [p2, m2] = rotate(g2, f2, rot);
    CHECK(std::abs(p2 - p) <= 1e-14);
    CHECK(std::abs(m2 - m) <= 1e-14);
  }
}
