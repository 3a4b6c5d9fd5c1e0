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

#include <string>
#include <vector>

#include "diracpdm/model.hpp"
#include "diracpdm/oracle.hpp"
#include "diracpdm/spectrum.hpp"
#include "diracpdm/wavefunction.hpp"

namespace diracpdm {

/// Decimal rendering with 17 significant digits: lossless for doubles.
std::string format_double(double x);

enum class TableFormat { csv, json };

/// One row of the spectrum table.
struct SpectrumRow {
  int kappa = 0;
  Component component = Component::upper;
  BranchSign branch = BranchSign::plus;
  SignBranch sign_branch = SignBranch::plus;
  EnergyLevel level;
};

/// One row of the oracle comparison table.
struct OracleRow {
  int kappa = 0;
  Component component = Component::upper;
  SignBranch sign_branch = SignBranch::plus;
  int n = 0;
  double ell_eff = 0.0;
  double epsilon_analytic = 0.0;
  double epsilon_oracle = 0.0;
  double abs_delta = 0.0;
  double grid_estimate = 0.0;
  std::string status;  ///< "ok" or "non-binding, skipped"
  bool skipped = false;
};

std::string component_label(Component c);
std::string branch_label(BranchSign b);
std::string sign_label(SignBranch s);

/// Column order: kappa, component, branch, sign_branch, n, ell_eff, N,
/// epsilon, E_equiv, q_eff, binding.
std::string spectrum_table(const std::vector<SpectrumRow>& rows, TableFormat format);

/// Column order: r, phi_plus, phi_minus, g, f, ode_residual_plus,
/// ode_residual_minus, compat_residual.
std::string wavefunction_table(const std::vector<RadialSample>& samples, TableFormat format);

std::string oracle_table(const std::vector<OracleRow>& rows, TableFormat format);

}  // namespace diracpdm
