// Copyright 2026 The cddgate Authors
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

// First-order Krotov iteration for the gate-fidelity objective
//   F = (1/16) |Tr(T^+ U(tau))|^2
// over piecewise-constant controls on the propagation grid. It is the
// baseline method: it reaches the target but does not minimize energy.

#include <cstdint>

#include "cddgate/metrics.hpp"
#include "cddgate/model.hpp"
#include "cddgate/variational.hpp"

namespace cddgate {

struct KrotovSettings {
  /// Step weight; the update is dh = (1/lambda_a) Im{(1/4) Tr(B^+ g_k U)}.
  double lambda_a = 1e-3;
  /// Double lambda_a (and redo the sweep) whenever a sweep lowers the
  /// fidelity, which makes the recorded fidelity monotone.
  bool auto_lambda = true;
  int max_iter = 5000;
  double infidelity_tol = 1e-5;
  /// Constant initial value of every active channel (units 1/tau).
  double init_amplitude = 0.1;

  void validate() const;
};

/// Runs the sequential Krotov scheme: the costate B is propagated backward
/// under the current controls from B(tau) = (1/16) Tr(T^+ U(tau)) T, then a
/// forward sweep updates interval n from B(t_n) and the already-updated
/// U(t_n) and propagates with the new value. The report's controls are node
/// samples (mean of the adjacent intervals); its energy is the exact
/// integral of the piecewise-constant controls.
///
/// Without auto_lambda, the tenth sweep that lowers the fidelity stops the
/// run with a non-converged report that advises a larger lambda_a.
OptimizationReport krotov_optimize(const GateTarget& target, const GeodesicProblem& problem,
                                   const KrotovSettings& settings);

}  // namespace cddgate
