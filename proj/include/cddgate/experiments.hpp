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

// Experiment drivers shared by the C API, the CLI and the acceptance suite:
// the CDD fidelity benchmark, optimizer dispatch, control re-propagation and
// the combined CDD + control verification.

#include <optional>
#include <string>
#include <vector>

#include "cddgate/config.hpp"
#include "cddgate/metrics.hpp"

namespace cddgate {

/// F_CDD for the native Hamiltonian under a CDD drive at angular frequency
/// `omega` (rad/s), compared with exp(-i H_d tau). omega = 0 switches the
/// drive off and compares exp(-i H_N tau) directly.
///
/// The drive is handled in its own interaction frame: V solves
/// i dV/dt = U_CDD^dagger H_N U_CDD V by exponential midpoint with
/// `steps_per_fast_period` steps per period of the fastest (16 omega)
/// component, and U_tst = U_CDD(tau) V(tau) with the closed-form U_CDD.
double cdd_benchmark_fidelity(const PhysicalParams& params, double omega,
                              int steps_per_fast_period);

/// Step count used by the benchmark and the full-stack check.
int cdd_step_count(double tau, double omega, int steps_per_fast_period);

struct CddBenchRow {
  double omega_ghz = 0.0;
  double fidelity = 0.0;
  int steps = 0;
  double runtime_s = 0.0;
};

std::vector<CddBenchRow> cdd_benchmark(const RunConfig& config);

/// Runs one optimizer with the settings of `config`.
OptimizationReport run_optimization(Method method, const GateTarget& target,
                                    const Distribution& dist, const RunConfig& config);

/// Channel value at dimensionless time s by linear interpolation between
/// nodes (clamped at the ends).
ChannelValues interpolate_controls(const ControlTrajectory& controls, double s);

/// Propagates H_d + H_c(s) (dimensionless, drift already scaled by tau) by
/// exponential midpoint on the control grid.
Mat4 propagate_controls(const ControlTrajectory& controls, const Mat4& drift);

/// Exchanges the qubit-1 channels (X1, Y1, Z1) with the qubit-2 channels.
ControlTrajectory swap_qubit_channels(const ControlTrajectory& controls);

struct SwapCheck {
  double fidelity = 0.0;
  double swapped_fidelity = 0.0;
};

/// Re-propagates `controls` and their qubit-swapped copy under the drift of
/// `params`, both against `target`.
SwapCheck swap_fidelity(const ControlTrajectory& controls, const GateTarget& target,
                        const PhysicalParams& params);

struct FullStackResult {
  double omega_ghz = 0.0;
  double fidelity = 0.0;           // combined scheme against the target
  double cdd_only_fidelity = 0.0;  // cdd_benchmark_fidelity at the same omega
  int steps = 0;
};

/// Combined two-stage check. In the lab frame the device sees
/// H_N + H_CDD(t) + U_CDD(t) H_c(t) U_CDD^dagger(t); in the CDD interaction
/// frame this is U_CDD^dagger H_N U_CDD + H_c, whose propagator
/// W(tau) = U_CDD^dagger(tau) U_lab(tau) is compared with the target.
/// `controls` are dimensionless on [0, 1]. With omega = 0 the drive is off.
FullStackResult verify_full_stack(const ControlTrajectory& controls, const GateTarget& target,
                                  const PhysicalParams& params, double omega,
                                  int steps_per_fast_period);

struct ReferenceCell {
  const char* gate;
  const char* axes;
  double montecarlo;
  double krotov;
  double variational;
};

/// Published energy costs (hbar^2 / tau) for CX and R under each control
/// distribution.
const std::vector<ReferenceCell>& reference_table();

std::optional<double> reference_energy(const std::string& gate, const std::string& axes,
                                       Method method);

}  // namespace cddgate
