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

#include "diracpdm/oracle.hpp"
#include "diracpdm/wavefunction.hpp"

using namespace diracpdm;

TEST_CASE("hydrogen eigenvalues with Richardson extrapolation") {
  // ground state: E -> -1/2 at O(h^2)
  const FdGrid coarse{40.0, 3999};  // h = 0.01
  const double e0 = solve_radial_eigen(0.0, -1.0, 0, coarse);
  CHECK(std::abs(e0 + 0.5) <= 2e-4);

  const FdGrid fine{40.0, 7999};  // h = 0.005
  const double e0f = solve_radial_eigen(0.0, -1.0, 0, fine);
  const double extrapolated = (4.0 * e0f - e0) / 3.0;
  CHECK(std::abs(extrapolated + 0.5) <= 1e-7);

  // first excited level
  const FdGrid wide{80.0, 7999};
  const double e1 = solve_radial_eigen(0.0, -1.0, 1, wide);
  CHECK(std::abs(e1 + 0.125) <= 2e-4);
}

TEST_CASE("non-integer centrifugal term") {
  // closed form -q^2 / (2 (k + ell + 1)^2) holds for real ell
  const FdGrid grid{60.0, 5999};
  const FdGrid grid2{60.0, 11999};
  {
    const double e = solve_radial_eigen(0.5, -1.0, 0, grid);
    const double e2 = solve_radial_eigen(0.5, -1.0, 0, grid2);
    CHECK(std::abs((4.0 * e2 - e) / 3.0 + 1.0 / 4.5) <= 1e-6);
  }
  {
    const double e = solve_radial_eigen(1.5, -1.0, 0, grid);
    const double e2 = solve_radial_eigen(1.5, -1.0, 0, grid2);
    CHECK(std::abs((4.0 * e2 - e) / 3.0 + 0.08) <= 1e-6);
  }
}

TEST_CASE("O(h^2) convergence rate") {
  const FdGrid g1{40.0, 1999};
  const FdGrid g2{40.0, 3999};
  const double err1 = std::abs(solve_radial_eigen(0.0, -1.0, 0, g1) + 0.5);
  const double err2 = std::abs(solve_radial_eigen(0.0, -1.0, 0, g2) + 0.5);
  const double ratio = err1 / err2;
  CHECK(ratio >= 3.7);
  CHECK(ratio <= 4.3);
}

TEST_CASE("eigenvector matches the closed-form radial function") {
  const FdGrid grid{40.0, 3999};
  Eigen::VectorXd vec;
  double residual = 0.0;
  solve_radial_eigen(0.0, -1.0, 0, grid, &vec, &residual);
  CHECK(residual <= 1e-9);

  // normalize the discrete vector to unit L2 on the grid
  const double h = grid.h();
  const double norm = vec.norm() * std::sqrt(h);
  double sign = 0.0;
  int peak_idx = 0;
  vec.cwiseAbs().maxCoeff(&peak_idx);
  sign = vec[peak_idx] > 0 ? 1.0 : -1.0;
  double worst = 0.0;
  for (int i = 0; i < grid.count; i += 37) {
    const double r = (i + 1) * h;
    const double fd = sign * vec[i] / norm;
    const double exact = nonrel_radial(0, 0.0, -1.0, r);
    worst = std::max(worst, std::abs(fd - exact));
  }
  CHECK(worst <= 1e-4);
}

TEST_CASE("failure modes of the inner solver") {
  // no negative eigenvalue on a grid far smaller than the bound state
  CHECK_THROWS_AS(solve_radial_eigen(0.0, -0.05, 0, FdGrid{10.0, 500}), Error);
  // third hydrogen level needs more room than r_max = 45 provides
  CHECK_THROWS_AS(solve_radial_eigen(0.0, -1.0, 2, FdGrid{45.0, 2000}), GridTooSmall);
  // precondition violations
  CHECK_THROWS_AS(solve_radial_eigen(0.0, 1.0, 0, FdGrid{40.0, 2000}), InvalidParameter);
  CHECK_THROWS_AS(solve_radial_eigen(-1.5, -1.0, 0, FdGrid{40.0, 2000}), InvalidParameter);
  CHECK_THROWS_AS(solve_radial_eigen(0.0, -1.0, -1, FdGrid{40.0, 2000}), InvalidParameter);
}

namespace {

struct ChannelData {
  ValidatedChannel vc;
  RotationSolution rot;
};

ChannelData make_channel(double Z, double mu, double lambda, int kappa, Component component) {
  ChannelData d;
  d.vc = validate(ModelParams{Z, mu, lambda}, ChannelSpec{kappa, BranchSign::minus, component});
  d.rot = solve_rotation(d.vc);
  return d;
}

}  // namespace

TEST_CASE("self-consistent solve reproduces the Z = 0 closed form") {
  // mu must be negative for the effective charge to attract at Z = 0.
  const ChannelData d = make_channel(0.0, -0.5, 0.1, -1, Component::upper);
  const EnergyLevel level = energy_level(d.vc, d.rot, 0, SignBranch::plus);
  REQUIRE(level.binding);
  const OracleResult res =
      self_consistent_epsilon(d.vc, d.rot, 0, SignBranch::plus, default_grid_for(level, 1500));
  CHECK(std::abs(res.epsilon - level.epsilon) <= 1e-6);
  CHECK(res.eig_residual <= 1e-9);
  CHECK(res.iterations > 0);
}

TEST_CASE("self-consistent solve reproduces the standard ground state") {
  const ChannelData d = make_channel(-1.0, 0.0, 0.1, -1, Component::upper);
  const EnergyLevel level = energy_level(d.vc, d.rot, 0, SignBranch::plus);
  REQUIRE(level.epsilon == doctest::Approx(std::sqrt(0.99)).epsilon(1e-14));
  const OracleResult res =
      self_consistent_epsilon(d.vc, d.rot, 0, SignBranch::plus, default_grid_for(level, 1500));
  CHECK(std::abs(res.epsilon - std::sqrt(0.99)) <= 1e-6);
  CHECK(res.grid_estimate <= 1e-4);
}

TEST_CASE("oracle grid refinement shrinks the error estimate") {
  // kappa = -2 keeps ell_eff near 1, where the scheme is cleanly O(h^2).
  const ChannelData d = make_channel(-1.0, 0.1, 0.1, -2, Component::upper);
  const EnergyLevel level = energy_level(d.vc, d.rot, 0, SignBranch::plus);
  FdGrid small = default_grid_for(level, 900);
  FdGrid large = default_grid_for(level, 1800);
  const OracleResult rs = self_consistent_epsilon(d.vc, d.rot, 0, SignBranch::plus, small);
  const OracleResult rl = self_consistent_epsilon(d.vc, d.rot, 0, SignBranch::plus, large);
  CHECK(rs.observed_order == doctest::Approx(2.0).epsilon(0.15));
  // O(h^2): doubling the point count shrinks the estimate ~4x
  CHECK(rl.grid_estimate < rs.grid_estimate / 2.5);
  CHECK(std::abs(rl.epsilon - level.epsilon) <= 1e-6);
}

TEST_CASE("oracle measures the degraded order at slightly negative ell") {
  // ell_eff ~ -0.005 puts a weak defect at the origin; the measured order
  // drops toward 1 and the order-aware extrapolation must still land the
  // closed-form value.
  const ChannelData d = make_channel(-1.0, 0.1, 0.1, -1, Component::upper);
  const EnergyLevel level = energy_level(d.vc, d.rot, 0, SignBranch::plus);
  REQUIRE(level.qn.ell_eff < 0.0);
  const OracleResult res =
      self_consistent_epsilon(d.vc, d.rot, 0, SignBranch::plus, default_grid_for(level, 1500));
  CHECK(res.observed_order < 1.7);
  CHECK(res.observed_order > 0.7);
  CHECK(std::abs(res.epsilon - level.epsilon) <= 1e-6);
}

TEST_CASE("non-binding targets are refused") {
  const ChannelData d = make_channel(-1.0, 0.1, 0.1, -1, Component::upper);
  // the opposite energy sign is non-binding at attractive Z
  CHECK_THROWS_AS(
      self_consistent_epsilon(d.vc, d.rot, 0, SignBranch::minus, FdGrid{40.0, 1000}),
      InvalidParameter);
}

TEST_CASE("negative-energy binding tower at repulsive Z") {
  // Z > 0 binds the negative-sign branch; the root lies in (-1, 0).
  const ChannelData d = make_channel(1.0, 0.0, 0.1, -1, Component::upper);
  const EnergyLevel level = energy_level(d.vc, d.rot, 0, SignBranch::minus);
  REQUIRE(level.binding);
  REQUIRE(level.epsilon < 0.0);
  const OracleResult res = self_consistent_epsilon(d.vc, d.rot, 0, SignBranch::minus,
                                                   default_grid_for(level, 1500));
  CHECK(std::abs(res.epsilon - level.epsilon) <= 1e-6);
}

TEST_CASE("fixed-point property of the converged root") {
  const ChannelData d = make_channel(-1.0, 0.1, 0.1, -1, Component::upper);
  const EnergyLevel level = energy_level(d.vc, d.rot, 0, SignBranch::plus);
  const FdGrid grid = default_grid_for(level, 1500);
  const OracleResult res = self_consistent_epsilon(d.vc, d.rot, 0, SignBranch::plus, grid);
  // substitute the fine-grid root back into g on the fine grid
  FdGrid fine = grid;
  fine.count = 2 * grid.count + 1;
  const double q = d.vc.params.Z * res.epsilon_fine + d.vc.params.mu;
  const double e_inner = solve_radial_eigen(level.qn.ell_eff, q, 0, fine);
  const double lam2 = d.vc.params.lambda * d.vc.params.lambda;
  const double g_val =
      (res.epsilon_fine * res.epsilon_fine - 1.0) / (2.0 * lam2) - e_inner;
  CHECK(std::abs(g_val) <= 1e-10);
}
