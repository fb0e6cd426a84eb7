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

#include "cddgate/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "cddgate/error.hpp"

namespace cddgate {

double infidelity(const Mat4& u, const Mat4& target) {
  const double overlap = std::norm(0.25 * (target.adjoint() * u).trace());
  return std::clamp(1.0 - overlap, 0.0, 1.0);
}

double cdd_fidelity(const Mat4& u_ideal, const Mat4& u_test) {
  const double f = std::norm((u_ideal.adjoint() * u_test).trace()) / 16.0;
  return std::clamp(f, 0.0, 1.0);
}

double trapezoid(const std::vector<double>& values, double dt) {
  if (values.size() < 2) return 0.0;
  double acc = 0.5 * (values.front() + values.back());
  for (std::size_t n = 1; n + 1 < values.size(); ++n) acc += values[n];
  return acc * dt;
}

std::vector<double> energy_integrand_curve(const ControlTrajectory& controls) {
  std::vector<double> out;
  out.reserve(controls.h.size());
  for (const auto& h : controls.h) {
    double s = 0.0;
    for (double v : h) s += v * v;
    out.push_back(0.5 * s);
  }
  return out;
}

double energy_cost(const ControlTrajectory& controls) {
  if (int(controls.h.size()) != controls.grid.n_nodes()) {
    fail(ErrorCode::kInvalidInput, "control trajectory does not match its grid");
  }
  return trapezoid(energy_integrand_curve(controls), controls.grid.dt());
}

std::vector<double> fidelity_curve(const UnitaryTrajectory& traj, const Mat4& target) {
  std::vector<double> out;
  out.reserve(traj.U.size());
  for (const auto& u : traj.U) out.push_back(1.0 - infidelity(u, target));
  return out;
}

std::string to_string(Method m) {
  switch (m) {
    case Method::kVariational: return "variational";
    case Method::kMonteCarlo: return "montecarlo";
    case Method::kKrotov: return "krotov";
  }
  return "?";
}

Method parse_method(const std::string& s) {
  if (s == "variational") return Method::kVariational;
  if (s == "montecarlo") return Method::kMonteCarlo;
  if (s == "krotov") return Method::kKrotov;
  fail(ErrorCode::kConfig, "unknown method \"" + s + "\" (expected variational, montecarlo or krotov)");
}

}  // namespace cddgate
