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

#include "cddgate/krotov.hpp"

#include <chrono>
#include <cmath>
#include <vector>

#include "cddgate/error.hpp"

namespace cddgate {

namespace {

using Controls = std::vector<ChannelValues>;  // one entry per interval

Mat4 step_unitary(const Mat4& drift, const ChannelValues& h, double dt) {
  return expm_hermitian(drift + from_channels(h), dt);
}

double fidelity_of(const Mat4& u, const Mat4& target) { return 1.0 - infidelity(u, target); }

Mat4 forward_final(const Controls& ctl, const Mat4& drift, double dt) {
  Mat4 u = Mat4::Identity();
  for (const auto& h : ctl) u = step_unitary(drift, h, dt) * u;
  return u;
}

// B(t_n) for n = 0..N under the given controls.
std::vector<Mat4> backward_costates(const Controls& ctl, const Mat4& drift, double dt,
                                    const Mat4& u_final, const Mat4& target) {
  const int n_int = int(ctl.size());
  std::vector<Mat4> b(n_int + 1);
  const cplx z = (target.adjoint() * u_final).trace();
  b[n_int] = (z / 16.0) * target;
  for (int n = n_int - 1; n >= 0; --n) b[n] = step_unitary(drift, ctl[n], dt).adjoint() * b[n + 1];
  return b;
}

// One sequential sweep; returns the new controls and their final unitary.
Mat4 sweep(const Controls& old_ctl, const std::vector<Mat4>& b, const Mat4& drift,
           const Distribution& dist, double dt, double lambda_a, Controls& new_ctl) {
  const auto& basis = GeneratorBasis::instance();
  new_ctl = old_ctl;
  Mat4 u = Mat4::Identity();
  for (std::size_t n = 0; n < old_ctl.size(); ++n) {
    const Mat4 bu = b[n].adjoint();
    for (int ch = 0; ch < kChannels; ++ch) {
      if (!dist.has_channel(ch)) continue;
      const Mat4& g = basis.dense(channel_basis_index(ch));
      const double im = (bu * g * u).trace().imag();
      new_ctl[n][ch] = old_ctl[n][ch] + 0.25 * im / lambda_a;
    }
    u = step_unitary(drift, new_ctl[n], dt) * u;
  }
  return u;
}

}  // namespace

void KrotovSettings::validate() const {
  if (!(lambda_a > 0.0)) fail(ErrorCode::kConfig, "krotov lambda_a must be positive");
  if (max_iter < 0) fail(ErrorCode::kConfig, "krotov max_iter must be non-negative");
  if (!(infidelity_tol >= 0.0)) fail(ErrorCode::kConfig, "krotov infidelity_tol must be >= 0");
  if (!std::isfinite(init_amplitude)) fail(ErrorCode::kConfig, "krotov init_amplitude must be finite");
}

OptimizationReport krotov_optimize(const GateTarget& target, const GeodesicProblem& problem,
                                   const KrotovSettings& settings) {
  settings.validate();
  const auto t_start = std::chrono::steady_clock::now();
  const TimeGrid& grid = problem.grid;
  const double dt = grid.dt();
  const Distribution& dist = problem.dist;

  ChannelValues init{};
  for (int ch = 0; ch < kChannels; ++ch) init[ch] = dist.has_channel(ch) ? settings.init_amplitude : 0.0;
  Controls ctl(grid.n_steps, init);

  OptimizationReport r;
  r.method = Method::kKrotov;
  r.gate = target.name;
  r.axes = dist.label();

  Mat4 u_final = forward_final(ctl, problem.drift, dt);
  double fid = fidelity_of(u_final, target.matrix);
  r.fidelity_trace.push_back(fid);
  double lambda_a = settings.lambda_a;
  int it = 0;
  int decreases = 0;
  Controls next;
  for (;;) {
    if (1.0 - fid <= settings.infidelity_tol) {
      r.converged = true;
      r.note = "infidelity tolerance reached";
      break;
    }
    if (it >= settings.max_iter) {
      r.note = "iteration limit reached";
      break;
    }
    const auto b = backward_costates(ctl, problem.drift, dt, u_final, target.matrix);
    Mat4 u_next = sweep(ctl, b, problem.drift, dist, dt, lambda_a, next);
    double fid_next = fidelity_of(u_next, target.matrix);
    if (settings.auto_lambda) {
      while (fid_next < fid && lambda_a < 1e12) {
        lambda_a *= 2.0;
        u_next = sweep(ctl, b, problem.drift, dist, dt, lambda_a, next);
        fid_next = fidelity_of(u_next, target.matrix);
      }
    } else if (fid_next < fid) {
      if (++decreases >= 10) {
        ++it;
        ctl.swap(next);
        u_final = u_next;
        fid = fid_next;
        r.fidelity_trace.push_back(fid);
        r.note = "fidelity decreased in 10 iterations; increase lambda_a";
        break;
      }
    }
    ++it;
    ctl.swap(next);
    u_final = u_next;
    fid = fid_next;
    r.fidelity_trace.push_back(fid);
  }

  r.iterations = it;
  r.infidelity = 1.0 - fid;
  double energy = 0.0;
  for (const auto& h : ctl)
    for (double v : h) energy += 0.5 * v * v * dt;
  r.energy = energy;

  r.controls.grid = grid;
  r.controls.h.resize(grid.n_nodes());
  for (int n = 0; n <= grid.n_steps; ++n) {
    const ChannelValues& left = ctl[std::max(n - 1, 0)];
    const ChannelValues& right = ctl[std::min(n, grid.n_steps - 1)];
    for (int ch = 0; ch < kChannels; ++ch) r.controls.h[n][ch] = 0.5 * (left[ch] + right[ch]);
  }
  UnitaryTrajectory traj{grid, {}};
  traj.U.reserve(grid.n_nodes());
  traj.U.push_back(Mat4::Identity());
  for (const auto& h : ctl) traj.U.push_back(step_unitary(problem.drift, h, dt) * traj.U.back());
  r.fidelity_vs_time = fidelity_curve(traj, target.matrix);
  r.runtime_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
  return r;
}

}  // namespace cddgate
