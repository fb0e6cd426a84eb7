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

// Adjoint-gradient learning of the initial costate Lambda(0).
//
// For a costate L = sum_k lambda_k alpha_k the geodesic equation yields U(tau)
// and the infidelity I(lambda). The gradient dI/dlambda_k comes from one
// backward integration of the adjoint equation started at
//   G(tau) = (i/16) Tr(T^+ U) T U^+ - (i/16) Tr(U^+ T) U T^+
// followed by
//   dI/dlambda_k = -int_0^tau Tr(alpha_k U^+ P[G] U) dt.
// These formulas give the exact derivative of I (no extra constant factor),
// which the finite-difference tests confirm.

#include <cstdint>
#include <optional>
#include <vector>

#include "cddgate/algebra.hpp"
#include "cddgate/metrics.hpp"
#include "cddgate/model.hpp"
#include "cddgate/propagation.hpp"

namespace cddgate {

/// Everything that stays fixed while the costate varies.
struct GeodesicProblem {
  Mat4 drift = Mat4::Zero();  // dimensionless (H_d * tau)
  Distribution dist = Distribution::full();
  TimeGrid grid{2000, 0.0, 1.0};
};

/// Terminal condition G(tau) for the adjoint; Hermitian and traceless, and
/// zero whenever U equals the target up to a global phase.
Mat4 terminal_costate(const Mat4& u_final, const Mat4& target);

/// Trapezoidal quadrature of -Tr(alpha_k U^+ P[G] U) over the shared grid.
Coords costate_gradient(const UnitaryTrajectory& traj, const std::vector<Mat4>& gamma,
                        const Distribution& dist);

struct CostateEvaluation {
  double infidelity = 1.0;
  Coords gradient = Coords::Zero();
  GeodesicPath path;
};

/// Forward geodesic, infidelity and (optionally) the adjoint gradient.
CostateEvaluation evaluate_costate(const Coords& lambda0, const GeodesicProblem& problem,
                                   const Mat4& target, bool with_gradient = true);

/// Infidelity alone, via the storage-free endpoint integrator. Returns 1 for
/// costates whose integration loses unitarity.
double costate_infidelity(const Coords& lambda0, const GeodesicProblem& problem,
                          const Mat4& target);

struct DescentSettings {
  double eta = 0.5;               // learning rate, 0 < eta < 1
  int max_iter = 10000;
  double infidelity_tol = 1e-8;
  double gradient_tol = 1e-10;
  std::uint64_t seed = 1;
  double init_scale = 1.0;        // initial coords uniform in [-s, s]
  int starts = 1;                 // independent seeded starts; lowest energy wins
  int screen_iter = 0;            // > 0: short screening run per start, then finish the best
  double screen_tol = 1e-2;       // infidelity a screened start must reach to compete on energy
  std::optional<Coords> initial;  // overrides random initialization (first start)

  void validate() const;
};

/// Gradient descent on Lambda(0) with the step-halving guard:
///   lambda <- lambda - eta * dI/dlambda,
/// halving eta whenever a step would raise the infidelity (the step is then
/// retried) and growing it by 1.2x after three accepted steps, never above
/// the configured eta. Stops at infidelity_tol, at a gradient norm below
/// gradient_tol, or after max_iter steps; a run that misses infidelity_tol is
/// reported with converged = false.
///
/// With starts > 1 every start s uses the seed (seed + s) and the report of
/// the converged start with the lowest energy is returned (lowest
/// infidelity when none converged).
///
/// With screen_iter > 0 every start first runs only screen_iter steps. The
/// screened start with the lowest energy among those below screen_tol (the
/// lowest infidelity if none is) then continues up to max_iter steps in
/// total; the others are dropped.
OptimizationReport learn_lambda(const GateTarget& target, const GeodesicProblem& problem,
                                const DescentSettings& settings);

/// Builds the report fields shared by the geodesic methods from a costate.
OptimizationReport geodesic_report(Method method, const GateTarget& target,
                                   const GeodesicProblem& problem, const Coords& lambda0);

}  // namespace cddgate
