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

#include "diracpdm/oracle.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace diracpdm {

namespace {

// Diagonal of the discretized operator -d^2/dr^2 + ell(ell+1)/r^2 + 2q/r;
// the off-diagonal is the constant -1/h^2.
Eigen::VectorXd build_diagonal(double ell, double q, const FdGrid& grid) {
  const double h = grid.h();
  const double inv_h2 = 1.0 / (h * h);
  Eigen::VectorXd diag(grid.count);
  for (int i = 0; i < grid.count; ++i) {
    const double r = (i + 1) * h;
    diag[i] = 2.0 * inv_h2 + ell * (ell + 1.0) / (r * r) + 2.0 * q / r;
  }
  return diag;
}

// Number of eigenvalues of the symmetric tridiagonal matrix strictly below x
// (Sturm sequence via the shifted LDL^T recurrence).
int sturm_count(const Eigen::VectorXd& diag, double off2, double x) {
  int count = 0;
  double d = 1.0;
  const int m = static_cast<int>(diag.size());
  for (int i = 0; i < m; ++i) {
    d = diag[i] - x - (i > 0 ? off2 / d : 0.0);
    if (d == 0.0) d = 1e-300;
    if (d < 0.0) ++count;
  }
  return count;
}

// k-th lowest eigenvalue (0-based) by bisection on the Sturm count.
double bisect_eigenvalue(const Eigen::VectorXd& diag, double off, int k) {
  const double off2 = off * off;
  const int m = static_cast<int>(diag.size());
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (int i = 0; i < m; ++i) {
    const double radius = (i > 0 ? std::abs(off) : 0.0) + (i + 1 < m ? std::abs(off) : 0.0);
    lo = std::min(lo, diag[i] - radius);
    hi = std::max(hi, diag[i] + radius);
  }
  const double span = hi - lo;
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (sturm_count(diag, off2, mid) > k) {
      hi = mid;
    } else {
      lo = mid;
    }
    const double width = hi - lo;
    if (width <= 4.0 * std::numeric_limits<double>::epsilon() *
                     std::max(std::abs(lo), std::abs(hi)) + 1e-16 * span) {
      break;
    }
  }
  return 0.5 * (lo + hi);
}

// Solves (T - shift I) x = b for tridiagonal T with partial pivoting.
void shifted_tridiag_solve(const Eigen::VectorXd& diag, double off, double shift,
                           Eigen::VectorXd& x) {
  const int m = static_cast<int>(diag.size());
  Eigen::VectorXd d(m), u1(m), u2(m);
  Eigen::VectorXd rhs = x;
  for (int i = 0; i < m; ++i) {
    d[i] = diag[i] - shift;
    u1[i] = i + 1 < m ? off : 0.0;
    u2[i] = 0.0;
  }
  for (int i = 0; i + 1 < m; ++i) {
    double sub = off;
    if (std::abs(sub) > std::abs(d[i])) {
      // Row swap; afterwards `sub` holds the smaller subdiagonal entry.
      std::swap(d[i], sub);
      std::swap(u1[i], d[i + 1]);
      std::swap(u2[i], u1[i + 1]);
      std::swap(rhs[i], rhs[i + 1]);
    }
    if (d[i] == 0.0) d[i] = 1e-300;
    const double factor = sub / d[i];
    d[i + 1] -= factor * u1[i];
    u1[i + 1] -= factor * u2[i];
    rhs[i + 1] -= factor * rhs[i];
  }
  if (d[m - 1] == 0.0) d[m - 1] = 1e-300;
  x[m - 1] = rhs[m - 1] / d[m - 1];
  if (m >= 2) {
    x[m - 2] = (rhs[m - 2] - u1[m - 2] * x[m - 1]) / d[m - 2];
  }
  for (int i = m - 3; i >= 0; --i) {
    x[i] = (rhs[i] - u1[i] * x[i + 1] - u2[i] * x[i + 2]) / d[i];
  }
}

// Inverse iteration for the eigenvector at an accurately known eigenvalue.
Eigen::VectorXd inverse_iteration(const Eigen::VectorXd& diag, double off, double theta) {
  const int m = static_cast<int>(diag.size());
  Eigen::VectorXd v = Eigen::VectorXd::Constant(m, 1.0 / std::sqrt(double(m)));
  // A slight shift keeps the factorization well conditioned.
  const double shift = theta * (1.0 + 1e-13) + 1e-300;
  for (int sweep = 0; sweep < 3; ++sweep) {
    shifted_tridiag_solve(diag, off, shift, v);
    const double peak = v.cwiseAbs().maxCoeff();
    if (!(peak > 0.0) || !std::isfinite(peak)) {
      v = Eigen::VectorXd::Constant(m, 1.0 / std::sqrt(double(m)));
      continue;
    }
    v /= peak;  // guard the 2-norm against overflow before normalizing
    v.normalize();
  }
  return v;
}

double tridiag_residual(const Eigen::VectorXd& diag, double off, double theta,
                        const Eigen::VectorXd& v) {
  const int m = static_cast<int>(diag.size());
  double sum = 0.0;
  for (int i = 0; i < m; ++i) {
    double t = (diag[i] - theta) * v[i];
    if (i > 0) t += off * v[i - 1];
    if (i + 1 < m) t += off * v[i + 1];
    sum += t * t;
  }
  return std::sqrt(sum);
}

struct InnerSolve {
  double theta = 0.0;  // eigenvalue of the tridiagonal operator (2E convention)
  Eigen::VectorXd vec;
  double residual = 0.0;
};

InnerSolve solve_inner(double ell, double q, int k, const FdGrid& grid, bool want_vector) {
  const Eigen::VectorXd diag = build_diagonal(ell, q, grid);
  const double off = -1.0 / (grid.h() * grid.h());
  InnerSolve out;
  out.theta = bisect_eigenvalue(diag, off, k);
  if (want_vector) {
    out.vec = inverse_iteration(diag, off, out.theta);
    // Rayleigh quotient sharpens the bisected value.
    double rq = 0.0;
    for (int i = 0; i < grid.count; ++i) {
      double t = diag[i] * out.vec[i];
      if (i > 0) t += off * out.vec[i - 1];
      if (i + 1 < grid.count) t += off * out.vec[i + 1];
      rq += out.vec[i] * t;
    }
    out.theta = rq;
    out.residual = tridiag_residual(diag, off, out.theta, out.vec);
  }
  return out;
}

void check_eigen_preconditions(double ell, double q, int k, const FdGrid& grid) {
  if (!(q < 0.0)) throw InvalidParameter("oracle requires an attractive charge q < 0");
  if (!(ell > -1.0)) throw InvalidParameter("oracle requires ell > -1");
  if (k < 0) throw InvalidParameter("eigenvalue index must be nonnegative");
  if (grid.count < 100) throw InvalidParameter("grid needs at least 100 interior points");
  const double needed = 4.0 * (k + ell + 2.0) * (k + ell + 2.0) / std::abs(q);
  if (grid.r_max < needed) {
    throw GridTooSmall("r_max = " + std::to_string(grid.r_max) + " below required " +
                       std::to_string(needed));
  }
}

}  // namespace

double solve_radial_eigen(double ell, double q, int k, const FdGrid& grid,
                          Eigen::VectorXd* eigenvector, double* residual) {
  check_eigen_preconditions(ell, q, k, grid);
  InnerSolve inner = solve_inner(ell, q, k, grid, true);
  if (inner.theta >= 0.0) {
    throw NoBoundState("eigenvalue " + std::to_string(0.5 * inner.theta) + " is nonnegative");
  }
  const double tail = std::abs(inner.vec[grid.count - 1]);
  const double peak = inner.vec.cwiseAbs().maxCoeff();
  if (tail > 1e-8 * peak) {
    throw GridTooSmall("eigenfunction tail at r_max is " + std::to_string(tail / peak) +
                       " of its peak");
  }
  if (eigenvector) *eigenvector = inner.vec;
  if (residual) *residual = inner.residual;
  return 0.5 * inner.theta;
}

double solve_radial_eigen(double ell, double q, int k, const FdGrid& grid) {
  return solve_radial_eigen(ell, q, k, grid, nullptr, nullptr);
}

FdGrid default_grid_for(const EnergyLevel& level, int count) {
  const double q = std::abs(level.q_eff);
  const double N = level.qn.N;
  FdGrid grid;
  grid.count = count;
  grid.r_max = std::max(4.0 * (N + 1.0) * (N + 1.0), 32.0 * N) / std::max(q, 1e-6);
  return grid;
}

namespace {

struct RootResult {
  double eps = 0.0;
  int evals = 0;
};

// Bracketed root of g by bisection with secant acceleration.
template <typename F>
RootResult refine_root(F&& g, double a, double b, double ga, double gb) {
  RootResult out;
  double eps_a = a, eps_b = b;
  for (int iter = 0; iter < 120; ++iter) {
    // Well inside the stated 1e-10 tolerance so the residual of g at the
    // returned point stays at the inner-solver noise level.
    if (eps_b - eps_a <= 1e-13) break;
    // Secant candidate, safeguarded to the middle half of the bracket.
    double cand = eps_b - gb * (eps_b - eps_a) / (gb - ga);
    const double mid = 0.5 * (eps_a + eps_b);
    if (!(cand > eps_a + 0.1 * (eps_b - eps_a) && cand < eps_b - 0.1 * (eps_b - eps_a))) {
      cand = mid;
    }
    const double gc = g(cand);
    ++out.evals;
    if (gc == 0.0) {
      eps_a = eps_b = cand;
      break;
    }
    if ((gc < 0.0) == (ga < 0.0)) {
      eps_a = cand;
      ga = gc;
    } else {
      eps_b = cand;
      gb = gc;
    }
  }
  out.eps = 0.5 * (eps_a + eps_b);
  return out;
}

struct GridRoot {
  double eps = 0.0;
  int evals = 0;
};

GridRoot root_on_grid(const ModelParams& params, double ell, int n, double eps_target,
                      const FdGrid& grid) {
  const double lam2 = params.lambda * params.lambda;
  const auto g = [&](double eps) {
    const double q = params.Z * eps + params.mu;
    const InnerSolve inner = solve_inner(ell, q, n, grid, false);
    return (eps * eps - 1.0) / (2.0 * lam2) - 0.5 * inner.theta;
  };

  // Restrict to the attractive part of (-1, 1): Z eps + mu <= -1e-9.
  double lo = -1.0 + 1e-9, hi = 1.0 - 1e-9;
  if (params.Z > 0.0) {
    hi = std::min(hi, (-params.mu - 1e-9) / params.Z);
  } else if (params.Z < 0.0) {
    lo = std::max(lo, (-params.mu - 1e-9) / params.Z);
  } else if (!(params.mu < 0.0)) {
    throw NoRoot("effective charge is never attractive for these parameters");
  }
  if (!(lo < hi)) throw NoRoot("attractive window in (-1, 1) is empty");

  GridRoot out;
  const int scan = 25;
  double prev_eps = lo, prev_g = g(lo);
  ++out.evals;
  double best_a = 0.0, best_b = 0.0, best_ga = 0.0, best_gb = 0.0;
  double best_dist = std::numeric_limits<double>::infinity();
  bool found = false;
  for (int i = 1; i <= scan; ++i) {
    const double eps = lo + (hi - lo) * i / scan;
    const double ge = g(eps);
    ++out.evals;
    if ((prev_g < 0.0) != (ge < 0.0)) {
      const double mid = 0.5 * (prev_eps + eps);
      const double dist = std::abs(mid - eps_target);
      if (dist < best_dist) {
        best_dist = dist;
        best_a = prev_eps;
        best_b = eps;
        best_ga = prev_g;
        best_gb = ge;
        found = true;
      }
    }
    prev_eps = eps;
    prev_g = ge;
  }
  if (!found) throw NoRoot("g(eps) has no sign change in the physical bracket");

  const RootResult root = refine_root(g, best_a, best_b, best_ga, best_gb);
  out.eps = root.eps;
  out.evals += root.evals;
  return out;
}

}  // namespace

OracleResult self_consistent_epsilon(const ValidatedChannel& vc, const RotationSolution& rot,
                                     int n, SignBranch sign_branch, const FdGrid& grid) {
  const EnergyLevel target = energy_level(vc, rot, n, sign_branch);
  if (!target.binding) {
    throw InvalidParameter("target level is non-binding; the oracle cannot bracket it");
  }
  const double ell = target.qn.ell_eff;

  FdGrid mid = grid;
  mid.count = 2 * grid.count + 1;  // exactly halves the step at fixed r_max
  FdGrid fine = grid;
  fine.count = 4 * grid.count + 3;

  OracleResult result;
  const GridRoot r1 = root_on_grid(vc.params, ell, n, target.epsilon, grid);
  const GridRoot r2 = root_on_grid(vc.params, ell, n, target.epsilon, mid);
  const GridRoot r3 = root_on_grid(vc.params, ell, n, target.epsilon, fine);
  result.epsilon_coarse = r1.eps;
  result.epsilon_fine = r2.eps;
  result.epsilon_finest = r3.eps;
  result.iterations = r1.evals + r2.evals + r3.evals;

  const double d12 = r2.eps - r1.eps;
  const double d23 = r3.eps - r2.eps;
  if (std::abs(d23) <= 1e-11 || std::abs(d12) <= std::abs(d23)) {
    // Converged to root-finder noise (or no decay to measure): take the
    // finest value as is.
    result.epsilon = r3.eps;
    result.grid_estimate = std::abs(d23);
    result.observed_order = std::numeric_limits<double>::infinity();
  } else {
    double order = std::log2(std::abs(d12 / d23));
    order = std::min(4.0, std::max(0.5, order));
    const double ratio = std::exp2(order);
    result.epsilon = (ratio * r3.eps - r2.eps) / (ratio - 1.0);
    result.grid_estimate = std::abs(d23) / (ratio - 1.0);
    result.observed_order = order;
  }

  // Diagnostics of the inner eigenproblem at the converged point.
  const double q = vc.params.Z * r3.eps + vc.params.mu;
  Eigen::VectorXd vec;
  double residual = 0.0;
  solve_radial_eigen(ell, q, n, fine, &vec, &residual);
  result.eig_residual = residual;
  return result;
}

}  // namespace diracpdm
