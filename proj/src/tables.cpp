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

#include "diracpdm/tables.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace diracpdm {

using nlohmann::json;

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string component_label(Component c) { return c == Component::upper ? "+" : "-"; }
std::string branch_label(BranchSign b) { return b == BranchSign::plus ? "+" : "-"; }
std::string sign_label(SignBranch s) { return s == SignBranch::plus ? "+" : "-"; }

namespace {

json spectrum_row_json(const SpectrumRow& row) {
  return json{{"kappa", row.kappa},
              {"component", component_label(row.component)},
              {"branch", branch_label(row.branch)},
              {"sign_branch", sign_label(row.sign_branch)},
              {"n", row.level.qn.n},
              {"ell_eff", row.level.qn.ell_eff},
              {"N", row.level.qn.N},
              {"epsilon", row.level.epsilon},
              {"E_equiv", row.level.E_equiv},
              {"q_eff", row.level.q_eff},
              {"binding", row.level.binding}};
}

}  // namespace

std::string spectrum_table(const std::vector<SpectrumRow>& rows, TableFormat format) {
  if (format == TableFormat::json) {
    json arr = json::array();
    for (const auto& row : rows) arr.push_back(spectrum_row_json(row));
    return arr.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "kappa,component,branch,sign_branch,n,ell_eff,N,epsilon,E_equiv,q_eff,binding\n";
  for (const auto& row : rows) {
    out << row.kappa << ',' << component_label(row.component) << ','
        << branch_label(row.branch) << ',' << sign_label(row.sign_branch) << ','
        << row.level.qn.n << ',' << format_double(row.level.qn.ell_eff) << ','
        << format_double(row.level.qn.N) << ',' << format_double(row.level.epsilon) << ','
        << format_double(row.level.E_equiv) << ',' << format_double(row.level.q_eff) << ','
        << (row.level.binding ? 1 : 0) << '\n';
  }
  return out.str();
}

std::string wavefunction_table(const std::vector<RadialSample>& samples, TableFormat format) {
  if (format == TableFormat::json) {
    json arr = json::array();
    for (const auto& s : samples) {
      arr.push_back(json{{"r", s.r},
                         {"phi_plus", s.phi_plus},
                         {"phi_minus", s.phi_minus},
                         {"g", s.g},
                         {"f", s.f},
                         {"ode_residual_plus", s.ode_residual_plus},
                         {"ode_residual_minus", s.ode_residual_minus},
                         {"compat_residual", s.compat_residual}});
    }
    return arr.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "r,phi_plus,phi_minus,g,f,ode_residual_plus,ode_residual_minus,compat_residual\n";
  for (const auto& s : samples) {
    out << format_double(s.r) << ',' << format_double(s.phi_plus) << ','
        << format_double(s.phi_minus) << ',' << format_double(s.g) << ','
        << format_double(s.f) << ',' << format_double(s.ode_residual_plus) << ','
        << format_double(s.ode_residual_minus) << ',' << format_double(s.compat_residual)
        << '\n';
  }
  return out.str();
}

std::string oracle_table(const std::vector<OracleRow>& rows, TableFormat format) {
  if (format == TableFormat::json) {
    json arr = json::array();
    for (const auto& row : rows) {
      arr.push_back(json{{"kappa", row.kappa},
                         {"component", component_label(row.component)},
                         {"sign_branch", sign_label(row.sign_branch)},
                         {"n", row.n},
                         {"ell_eff", row.ell_eff},
                         {"epsilon_analytic", row.epsilon_analytic},
                         {"epsilon_oracle", row.epsilon_oracle},
                         {"abs_delta", row.abs_delta},
                         {"grid_estimate", row.grid_estimate},
                         {"status", row.status}});
    }
    return arr.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "kappa,component,sign_branch,n,ell_eff,epsilon_analytic,epsilon_oracle,abs_delta,"
         "grid_estimate,status\n";
  for (const auto& row : rows) {
    out << row.kappa << ',' << component_label(row.component) << ','
        << sign_label(row.sign_branch) << ',' << row.n << ',' << format_double(row.ell_eff)
        << ',' << format_double(row.epsilon_analytic) << ','
        << format_double(row.epsilon_oracle) << ',' << format_double(row.abs_delta) << ','
        << format_double(row.grid_estimate) << ',' << row.status << '\n';
  }
  return out.str();
}

}  // namespace diracpdm
