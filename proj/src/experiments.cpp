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

#include "cddgate/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "cddgate/error.hpp"
#include "cddgate/krotov.hpp"
#include "cddgate/montecarlo.hpp"
#include "cddgate/propagation.hpp"
#include "cddgate/variational.hpp"

namespace cddgate {

namespace {

Mat4 control_matrix(const ControlTrajectory& c, double s) {
  return from_channels(interpolate_controls(c, s));
}

double elapsed_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int cdd_step_count(double tau, double omega, int steps_per_fast_period) {
  if (steps_per_fast_period < 1) fail(ErrorCode::kConfig, "steps per fast period must be >= 1");
  if (omega <= 0.0) return std::max(2, steps_per_fast_period);
  const double fast_periods = tau * 16.0 * omega / kTwoPi;
  return std::max(2, int(std::ceil(fast_periods - 1e-9)) * steps_per_fast_period);
}

double cdd_benchmark_fidelity(const PhysicalParams& params, double omega,
                              int steps_per_fast_period) {
  params.validate();
  if (!(omega >= 0.0)) fail(ErrorCode::kConfig, "CDD frequency must be >= 0");
  const Mat4 hn = native_hamiltonian(params.coupling);
  const double tau = params.tau;
  const Mat4 u_id = expm_hermitian(drift_hamiltonian(params.j33()), tau);
  if (omega == 0.0) return cdd_fidelity(u_id, expm_hermitian(hn, tau));

  const TimeGrid grid(cdd_step_count(tau, omega, steps_per_fast_period), 0.0, tau);
  const Mat4 v = propagate_linear_final(
      [&](double t) {
        const Mat4 u = cdd_unitary(t, omega);
        return Mat4(u.adjoint() * hn * u);
      },
      grid);
  return cdd_fidelity(u_id, cdd_unitary(tau, omega) * v);
}

std::vector<CddBenchRow> cdd_benchmark(const RunConfig& config) {
  config.validate();
  std::vector<CddBenchRow> rows;
  for (double ghz : config.cdd_bench_omega_ghz) {
    const auto start = std::chrono::steady_clock::now();
    CddBenchRow row;
    row.omega_ghz = ghz;
    const double omega = kTwoPi * ghz * 1e9;
    row.steps = ghz > 0.0 ? cdd_step_count(config.physical.tau, omega,
                                           config.grids.cdd_steps_per_fast_period)
                          : 0;
    row.fidelity = cdd_benchmark_fidelity(config.physical, omega,
                                          config.grids.cdd_steps_per_fast_period);
    row.runtime_s = elapsed_since(start);
    rows.push_back(row);
  }
  return rows;
}

OptimizationReport run_optimization(Method method, const GateTarget& target,
                                    const Distribution& dist, const RunConfig& config) {
  config.validate();
  const GeodesicProblem problem = config.geodesic_problem(dist);
  OptimizationReport report;
  switch (method) {
    case Method::kVariational:
      report = learn_lambda(target, problem, config.variational);
      break;
    case Method::kMonteCarlo:
      report = monte_carlo_optimize(target, problem, config.montecarlo);
      break;
    case Method::kKrotov:
      report = krotov_optimize(target, problem, config.krotov);
      break;
  }
  report.gate = target.name;
  report.axes = dist.label();
  return report;
}

ChannelValues interpolate_controls(const ControlTrajectory& controls, double s) {
  const TimeGrid& g = controls.grid;
  if (int(controls.h.size()) != g.n_nodes()) {
    fail(ErrorCode::kInvalidInput, "control trajectory does not match its grid");
  }
  const double x = std::clamp((s - g.t0) / g.dt(), 0.0, double(g.n_steps));
  const int n = std::min(int(std::floor(x)), g.n_steps - 1);
  const double w = x - n;
  ChannelValues out{};
  for (int k = 0; k < 6; ++k) {
    out[k] = (1.0 - w) * controls.h[n][k] + w * controls.h[n + 1][k];
  }
  return out;
}

Mat4 propagate_controls(const ControlTrajectory& controls, const Mat4& drift) {
  return propagate_linear_final(
      [&](double s) { return Mat4(drift + control_matrix(controls, s)); }, controls.grid);
}

ControlTrajectory swap_qubit_channels(const ControlTrajectory& controls) {
  ControlTrajectory out = controls;
  for (auto& h : out.h) {
    for (int k = 0; k < 3; ++k) std::swap(h[k], h[k + 3]);
  }
  return out;
}

SwapCheck swap_fidelity(const ControlTrajectory& controls, const GateTarget& target,
                        const PhysicalParams& params) {
  const Mat4 drift = drift_hamiltonian(params.j33() * params.tau);
  SwapCheck out;
  out.fidelity = 1.0 - infidelity(propagate_controls(controls, drift), target.matrix);
  out.swapped_fidelity =
      1.0 - infidelity(propagate_controls(swap_qubit_channels(controls), drift), target.matrix);
  return out;
}

FullStackResult verify_full_stack(const ControlTrajectory& controls, const GateTarget& target,
                                  const PhysicalParams& params, double omega,
                                  int steps_per_fast_period) {
  params.validate();
  if (!(omega >= 0.0)) fail(ErrorCode::kConfig, "CDD frequency must be >= 0");
  const TimeGrid& cg = controls.grid;
  if (cg.t0 != 0.0 || cg.t1 != 1.0) {
    fail(ErrorCode::kInvalidInput, "controls must be given on the dimensionless grid [0, 1]");
  }
  const double tau = params.tau;
  const Mat4 hn = native_hamiltonian(params.coupling) * tau;

  FullStackResult out;
  out.omega_ghz = omega / (kTwoPi * 1e9);
  out.steps = std::max(cg.n_steps, cdd_step_count(tau, omega, steps_per_fast_period));
  const TimeGrid grid(out.steps, 0.0, 1.0);
  const Mat4 w = propagate_linear_final(
      [&](double s) {
        if (omega == 0.0) return Mat4(hn + control_matrix(controls, s));
        const Mat4 u = cdd_unitary(s * tau, omega);
        return Mat4(u.adjoint() * hn * u + control_matrix(controls, s));
      },
      grid);
  out.fidelity = 1.0 - infidelity(w, target.matrix);
  out.cdd_only_fidelity = cdd_benchmark_fidelity(params, omega, steps_per_fast_period);
  return out;
}

const std::vector<ReferenceCell>& reference_table() {
  static const std::vector<ReferenceCell> table{
      {"cx", "xyz", 3.41619, 3.49247, 3.41619},
      {"cx", "yz", 6.48627, 8.26504, 6.48769},
      {"cx", "xz", 5.6051, 5.7918, 5.60339},
      {"cx", "xy", 5.33592, 5.4952, 5.33736},
      {"r", "xyz", 5.60933, 5.63404, 5.60972},
      {"r", "yz", 5.74649, 6.01273, 5.74939},
      {"r", "xz", 8.43324, 11.1651, 8.43734},
      {"r", "xy", 8.20955, 11.9895, 8.20941},
  };
  return table;
}

std::optional<double> reference_energy(const std::string& gate, const std::string& axes,
                                       Method method) {
  const std::string label = Distribution::parse(axes).label();
  for (const auto& c : reference_table()) {
    if (gate != c.gate || label != c.axes) continue;
    switch (method) {
      case Method::kVariational: return c.variational;
      case Method::kMonteCarlo: return c.montecarlo;
      case Method::kKrotov: return c.krotov;
    }
  }
  return std::nullopt;
}

}  // namespace cddgate
