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

#include "cddgate/propagation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cddgate/error.hpp"

namespace cddgate {

namespace {

const cplx kMinusI(0.0, -1.0);

void check_grid(const TimeGrid& grid) {
  if (grid.n_steps < 2 || !(grid.t1 > grid.t0)) {
    fail(ErrorCode::kInvalidInput, "time grid needs n_steps >= 2 and t1 > t0");
  }
}

[[noreturn]] void drift_failure(const char* what, double drift, int steps) {
  std::ostringstream os;
  os << what << " drift " << drift << " exceeds " << kDriftTolerance << " with " << steps
     << " steps; use a finer grid";
  fail(ErrorCode::kIntegrationAccuracy, os.str());
}

// Right-hand side of the geodesic equation, dU/dt = -i (H_d + P[U L U^+]) U.
struct GeodesicRhs {
  const Mat4& drift;
  const Mat4& costate;
  const Distribution& dist;

  Mat4 operator()(const Mat4& u) const {
    const Mat4 m = u * costate * u.adjoint();
    return kMinusI * ((drift + project(m, dist)) * u);
  }
};

}  // namespace

TimeGrid::TimeGrid(int steps, double start, double end) : n_steps(steps), t0(start), t1(end) {
  check_grid(*this);
}

double unitarity_drift(const Mat4& u) {
  return (u.adjoint() * u - Mat4::Identity()).norm();
}

UnitaryTrajectory propagate_linear(const HamiltonianFn& h, const TimeGrid& grid) {
  check_grid(grid);
  UnitaryTrajectory out{grid, {}};
  out.U.reserve(grid.n_nodes());
  out.U.push_back(Mat4::Identity());
  const double dt = grid.dt();
  for (int n = 0; n < grid.n_steps; ++n) {
    const double tm = grid.t0 + (n + 0.5) * dt;
    out.U.push_back(expm_hermitian(h(tm), dt) * out.U.back());
  }
  const double drift = unitarity_drift(out.U.back());
  if (drift > kDriftTolerance) drift_failure("unitarity", drift, grid.n_steps);
  return out;
}

Mat4 propagate_linear_final(const HamiltonianFn& h, const TimeGrid& grid) {
  check_grid(grid);
  Mat4 u = Mat4::Identity();
  const double dt = grid.dt();
  for (int n = 0; n < grid.n_steps; ++n) {
    const double tm = grid.t0 + (n + 0.5) * dt;
    u = expm_hermitian(h(tm), dt) * u;
  }
  const double drift = unitarity_drift(u);
  if (drift > kDriftTolerance) drift_failure("unitarity", drift, grid.n_steps);
  return u;
}

GeodesicPath propagate_geodesic(const Coords& lambda0, const Mat4& drift,
                                const Distribution& dist, const TimeGrid& grid) {
  check_grid(grid);
  if (!lambda0.allFinite()) fail(ErrorCode::kInvalidInput, "costate has non-finite entries");
  const Mat4 costate = from_coords(lambda0);
  const GeodesicRhs f{drift, costate, dist};
  const double h = grid.dt();
  const int n_steps = grid.n_steps;

  GeodesicPath path;
  path.traj.grid = grid;
  path.controls.grid = grid;
  path.traj.U.reserve(n_steps + 1);
  path.midpoints.reserve(n_steps);
  path.controls.h.reserve(n_steps + 1);

  Mat4 u = Mat4::Identity();
  Mat4 k1 = f(u);
  double max_drift = 0.0;
  path.traj.U.push_back(u);
  path.controls.h.push_back(channel_coords(costate, dist));
  for (int n = 0; n < n_steps; ++n) {
    const Mat4 k2 = f(u + 0.5 * h * k1);
    const Mat4 k3 = f(u + 0.5 * h * k2);
    const Mat4 k4 = f(u + h * k3);
    const Mat4 next = u + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    const Mat4 k1_next = f(next);
    path.midpoints.push_back(0.5 * (u + next) + (h / 8.0) * (k1 - k1_next));
    u = next;
    k1 = k1_next;
    path.traj.U.push_back(u);
    path.controls.h.push_back(channel_coords(u * costate * u.adjoint(), dist));
    max_drift = std::max(max_drift, unitarity_drift(u));
  }
  if (!(max_drift <= kDriftTolerance)) drift_failure("geodesic unitarity", max_drift, n_steps);
  return path;
}

GeodesicEndpoint geodesic_endpoint(const Coords& lambda0, const Mat4& drift,
                                   const Distribution& dist, const TimeGrid& grid) {
  check_grid(grid);
  const Mat4 costate = from_coords(lambda0);
  const GeodesicRhs f{drift, costate, dist};
  const double h = grid.dt();
  Mat4 u = Mat4::Identity();
  for (int n = 0; n < grid.n_steps; ++n) {
    const Mat4 k1 = f(u);
    const Mat4 k2 = f(u + 0.5 * h * k1);
    const Mat4 k3 = f(u + 0.5 * h * k2);
    const Mat4 k4 = f(u + h * k3);
    u += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return {u, unitarity_drift(u)};
}

std::vector<Mat4> propagate_adjoint_backward(const GeodesicPath& path, const Coords& lambda0,
                                             const Mat4& drift, const Mat4& gamma_final,
                                             const Distribution& dist) {
  const TimeGrid& grid = path.traj.grid;
  const int n_steps = grid.n_steps;
  if (int(path.traj.U.size()) != n_steps + 1 || int(path.midpoints.size()) != n_steps) {
    fail(ErrorCode::kInvalidInput, "adjoint: forward path does not match its grid");
  }
  const Mat4 costate = from_coords(lambda0);

  // dG/dt = -i ([A, G] + [P[G], M]) with M = U L U^+, A = H_d + P[M].
  struct Frame {
    Mat4 a;
    Mat4 m;
  };
  auto frame = [&](const Mat4& u) {
    Frame fr;
    fr.m = u * costate * u.adjoint();
    fr.a = drift + project(fr.m, dist);
    return fr;
  };
  auto rhs = [&](const Frame& fr, const Mat4& g) -> Mat4 {
    const Mat4 pg = project(g, dist);
    return kMinusI * (fr.a * g - g * fr.a + pg * fr.m - fr.m * pg);
  };

  std::vector<Mat4> gamma(n_steps + 1);
  gamma[n_steps] = gamma_final;
  const double h = -grid.dt();
  Frame right = frame(path.traj.U[n_steps]);
  double max_drift = 0.0;
  for (int n = n_steps - 1; n >= 0; --n) {
    const Frame mid = frame(path.midpoints[n]);
    const Frame left = frame(path.traj.U[n]);
    const Mat4& g = gamma[n + 1];
    const Mat4 k1 = rhs(right, g);
    const Mat4 k2 = rhs(mid, g + 0.5 * h * k1);
    const Mat4 k3 = rhs(mid, g + 0.5 * h * k2);
    const Mat4 k4 = rhs(left, g + h * k3);
    gamma[n] = g + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    const double scale = std::max(1.0, gamma[n].norm());
    max_drift = std::max(max_drift, (gamma[n] - gamma[n].adjoint()).norm() / scale);
    right = left;
  }
  if (!(max_drift <= kDriftTolerance)) drift_failure("adjoint Hermiticity", max_drift, n_steps);
  return gamma;
}

}  // namespace cddgate
