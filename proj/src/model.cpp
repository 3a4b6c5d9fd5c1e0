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

#include "diracpdm/model.hpp"

#include <cmath>
#include <string>

namespace diracpdm {

ValidatedChannel validate(const ModelParams& params, const ChannelSpec& channel) {
  if (!std::isfinite(params.Z) || !std::isfinite(params.mu) || !std::isfinite(params.lambda)) {
    throw InvalidParameter("model parameters must be finite");
  }
  if (params.lambda <= 0.0) {
    throw InvalidParameter("lambda must be strictly positive, got " +
                           std::to_string(params.lambda));
  }
  if (channel.kappa == 0) {
    throw InvalidParameter("kappa must be a nonzero integer");
  }

  const double kol = channel.kappa / params.lambda;
  const double discriminant = kol * kol + params.mu * params.mu - params.Z * params.Z;
  if (discriminant < 0.0) {
    throw SupercriticalCoupling("supercritical coupling: (kappa/lambda)^2 + mu^2 - Z^2 = " +
                                std::to_string(discriminant) + " < 0");
  }

  // The branch must admit a positive cosine; the best candidate uses the
  // positive sign on the root term.
  const double sigma = sign_value(channel.branch);
  const double lam2 = params.lambda * params.lambda;
  const double root_term = std::abs(channel.kappa) * params.lambda * std::sqrt(discriminant);
  const double c_best = sigma * lam2 * params.Z * params.mu + root_term;
  if (!(c_best > 0.0)) {
    throw NoPositiveCosine("no rotation angle with positive cosine on this branch");
  }

  return ValidatedChannel{params, channel, discriminant};
}

}  // namespace diracpdm
