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

// Time integrators: exponential midpoint for linear Schrodinger problems,
// classical RK4 for the nonlinear geodesic equation
//   i dU/dt = (H_d + P[U L U^dagger]) U,     L = Lambda(0),
// and RK4 backwards in time for its adjoint
//   i dG/dt = [H_d + P[M], G] + [P[G], M],  M = U L U^dagger.

#include <functional>
#include <vector>

#include "cddgate/algebra.hpp"
#include "cddgate/trajectory.hpp"

namespace cddgate {

/// Maximum allowed ||U^dagger U - I||_F (or ||G - G^dagger||_F relative to
/// ||G||) before an integration is declared inaccurate.
inline constexpr double kDriftTolerance = 1e-8;

using HamiltonianFn = std::function<Mat4(double)>;

double unitarity_drift(const Mat4& u);

/// i dU/dt = H(t) U, U(t0) = I, via U_{n+1} = exp(-i H(t_{n+1/2}) dt) U_n.
/// Stores every node.
UnitaryTrajectory propagate_linear(const HamiltonianFn& h, const TimeGrid& grid);

/// Same integrator, returning only U(t1). Used for the long CDD runs where
/// storing every node would cost hundreds of MB.
Mat4 propagate_linear_final(const HamiltonianFn& h, const TimeGrid& grid);

/// Output of a forward geodesic integration.
struct GeodesicPath {
  UnitaryTrajectory traj;
  /// U at the interval midpoints (cubic Hermite from the node values and
  /// slopes), consumed by the backward adjoint RK4 stages.
  std::vector<Mat4> midpoints;
  /// h_k(t) = (1/4) Tr(g_k P[U L U^dagger]) at every node.
  ControlTrajectory controls;
};

/// Integrates the geodesic equation from U(t0) = I. Throws
/// kIntegrationAccuracy when unitarity drifts beyond kDriftTolerance.
GeodesicPath propagate_geodesic(const Coords& lambda0, const Mat4& drift,
                                const Distribution& dist, const TimeGrid& grid);

struct GeodesicEndpoint {
  Mat4 U;
  double max_drift = 0.0;
};

/// Final unitary only, without storage or the drift exception. Callers that
/// evaluate many costates (sampling, simplex search) check max_drift.
GeodesicEndpoint geodesic_endpoint(const Coords& lambda0, const Mat4& drift,
                                   const Distribution& dist, const TimeGrid& grid);

/// Integrates the adjoint equation from G(t1) = gamma_final back to t0 on the
/// forward path's grid. Returns G at every node. Throws kIntegrationAccuracy
/// when G loses Hermiticity beyond kDriftTolerance.
std::vector<Mat4> propagate_adjoint_backward(const GeodesicPath& path, const Coords& lambda0,
                                             const Mat4& drift, const Mat4& gamma_final,
                                             const Distribution& dist);

}  // namespace cddgate
