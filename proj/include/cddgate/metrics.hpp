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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cddgate/algebra.hpp"
#include "cddgate/trajectory.hpp"

namespace cddgate {

/// 1 - |(1/4) Tr(target^dagger U)|^2; invariant under a global phase of
/// either argument.
double infidelity(const Mat4& u, const Mat4& target);

/// (1/16) |Tr(U_id^dagger U_tst)|^2.
double cdd_fidelity(const Mat4& u_ideal, const Mat4& u_test);

/// (1/2) int sum_k h_k(t)^2 dt, trapezoidal on the control grid. With time
/// measured in units of the gate duration this is the energy in hbar^2/tau.
double energy_cost(const ControlTrajectory& controls);

/// 1 - infidelity(U(t_n), target) at every node.
std::vector<double> fidelity_curve(const UnitaryTrajectory& traj, const Mat4& target);

/// (1/2) sum_k h_k(t_n)^2 at every node.
std::vector<double> energy_integrand_curve(const ControlTrajectory& controls);

/// Trapezoidal rule for samples on a uniform grid.
double trapezoid(const std::vector<double>& values, double dt);

enum class Method { kVariational, kMonteCarlo, kKrotov };

std::string to_string(Method m);
Method parse_method(const std::string& s);

/// Persisted result of one optimization run.
struct OptimizationReport {
  Method method = Method::kVariational;
  std::string gate;
  std::string axes;
  double infidelity = 1.0;
  double energy = 0.0;  // hbar^2 / tau
  int iterations = 0;
  std::uint64_t seed = 0;
  bool converged = false;
  std::string note;  // why the run stopped
  ControlTrajectory controls;
  std::vector<double> fidelity_trace;  // 1 - infidelity per iteration
  std::optional<Coords> lambda0;       // geodesic methods only
  std::vector<double> fidelity_vs_time;
  double runtime_s = 0.0;
};

}  // namespace cddgate
