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

#include "cddgate/variational.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "cddgate/error.hpp"
#include "cddgate/rng.hpp"

namespace cddgate {

Mat4 terminal_costate(const Mat4& u_final, const Mat4& target) {
  const cplx i(0.0, 1.0);
  const cplx z = (target.adjoint() * u_final).trace();  // Tr(T^+ U); Tr(U^+ T) = conj(z)
  const Mat4 a = (i / 16.0) * z * (target * u_final.adjoint());
  return a + a.adjoint();  // second term of the terminal condition is a^+
}

Coords costate_gradient(const UnitaryTrajectory& traj, const std::vector<Mat4>& gamma,
                        const Distribution& dist) {
  if (traj.U.size() != gamma.size() || int(gamma.size()) != traj.grid.n_nodes()) {
    fail(ErrorCode::kInvalidInput, "gradient: trajectories do not share a grid");
  }
  const int n_nodes = traj.grid.n_nodes();
  Coords acc = Coords::Zero();
  for (int n = 0; n < n_nodes; ++n) {
    const Mat4& u = traj.U[n];
    const Mat4 pulled = u.adjoint() * project(gamma[n], dist) * u;
    const double w = (n == 0 || n == n_nodes - 1) ? 0.5 : 1.0;
    // Tr(alpha_k X) = 4 * coord_k(X)
    acc += w * basis_coords_unchecked(pulled);
  }
  return -4.0 * traj.grid.dt() * acc;
}

CostateEvaluation evaluate_costate(const Coords& lambda0, const GeodesicProblem& problem,
                                   const Mat4& target, bool with_gradient) {
  CostateEvaluation ev;
  ev.path = propagate_geodesic(lambda0, problem.drift, problem.dist, problem.grid);
  ev.infidelity = infidelity(ev.path.traj.final(), target);
  if (with_gradient) {
    const Mat4 g_final = terminal_costate(ev.path.traj.final(), target);
    const auto gamma =
        propagate_adjoint_backward(ev.path, lambda0, problem.drift, g_final, problem.dist);
    ev.gradient = costate_gradient(ev.path.traj, gamma, problem.dist);
  }
  return ev;
}

double costate_infidelity(const Coords& lambda0, const GeodesicProblem& problem,
                          const Mat4& target) {
  if (!lambda0.allFinite()) return 1.0;
  const auto end = geodesic_endpoint(lambda0, problem.drift, problem.dist, problem.grid);
  if (!(end.max_drift <= kDriftTolerance)) return 1.0;
  return infidelity(end.U, target);
}

void DescentSettings::validate() const {
  if (!(eta > 0.0 && eta < 1.0)) fail(ErrorCode::kConfig, "learning rate eta must lie in (0, 1)");
  if (max_iter < 0) fail(ErrorCode::kConfig, "max_iter must be non-negative");
  if (!(infidelity_tol >= 0.0)) fail(ErrorCode::kConfig, "infidelity_tol must be >= 0");
  if (!(init_scale >= 0.0)) fail(ErrorCode::kConfig, "init_scale must be >= 0");
  if (starts < 1) fail(ErrorCode::kConfig, "starts must be >= 1");
  if (screen_iter < 0) fail(ErrorCode::kConfig, "screen_iter must be non-negative");
  if (!(screen_tol >= 0.0 && screen_tol <= 1.0)) fail(ErrorCode::kConfig, "screen_tol must lie in [0, 1]");
}

OptimizationReport geodesic_report(Method method, const GateTarget& target,
                                   const GeodesicProblem& problem, const Coords& lambda0) {
  const GeodesicPath path =
      propagate_geodesic(lambda0, problem.drift, problem.dist, problem.grid);
  OptimizationReport r;
  r.method = method;
  r.gate = target.name;
  r.axes = problem.dist.label();
  r.infidelity = infidelity(path.traj.final(), target.matrix);
  r.controls = path.controls;
  r.energy = energy_cost(path.controls);
  r.lambda0 = lambda0;
  r.fidelity_vs_time = fidelity_curve(path.traj, target.matrix);
  return r;
}

namespace {

struct DescentRun {
  Coords lambda = Coords::Zero();
  double infidelity = 1.0;
  int iterations = 0;
  bool converged = false;
  std::string note;
  std::vector<double> trace;
};

DescentRun descend(Coords lambda, const GateTarget& target, const GeodesicProblem& problem,
                   const DescentSettings& s, int max_iter) {
  DescentRun run;
  CostateEvaluation cur = evaluate_costate(lambda, problem, target.matrix);
  run.trace.push_back(1.0 - cur.infidelity);
  double eta = s.eta;
  int successes = 0;
  int it = 0;
  for (;;) {
    if (cur.infidelity <= s.infidelity_tol) {
      run.converged = true;
      run.note = "infidelity tolerance reached";
      break;
    }
    if (cur.gradient.norm() <= s.gradient_tol) {
      run.note = "gradient norm below tolerance";
      break;
    }
    if (it >= max_iter) {
      run.note = "iteration limit reached";
      break;
    }
    ++it;
    const Coords trial = lambda - eta * cur.gradient;
    CostateEvaluation next;
    bool accepted = false;
    try {
      next = evaluate_costate(trial, problem, target.matrix, /*with_gradient=*/false);
      accepted = next.infidelity <= cur.infidelity;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kIntegrationAccuracy) throw;
    }
    if (!accepted) {
      eta *= 0.5;
      successes = 0;
      if (eta < 1e-14) {
        run.note = "step size underflow";
        break;
      }
      continue;
    }
    const Mat4 g_final = terminal_costate(next.path.traj.final(), target.matrix);
    const auto gamma =
        propagate_adjoint_backward(next.path, trial, problem.drift, g_final, problem.dist);
    next.gradient = costate_gradient(next.path.traj, gamma, problem.dist);
    lambda = trial;
    cur = std::move(next);
    run.trace.push_back(1.0 - cur.infidelity);
    if (++successes >= 3) {
      eta = std::min(eta * 1.2, s.eta);
      successes = 0;
    }
  }
  run.lambda = lambda;
  run.infidelity = cur.infidelity;
  run.iterations = it;
  return run;
}

}  // namespace

OptimizationReport learn_lambda(const GateTarget& target, const GeodesicProblem& problem,
                                const DescentSettings& settings) {
  settings.validate();
  const auto t_start = std::chrono::steady_clock::now();
  const bool screening = settings.starts > 1 && settings.screen_iter > 0;
  const int first_budget = screening ? std::min(settings.screen_iter, settings.max_iter)
                                     : settings.max_iter;

  struct Candidate {
    DescentRun run;
    OptimizationReport report;
  };
  auto finish = [&](DescentRun run, std::uint64_t seed) {
    OptimizationReport r = geodesic_report(Method::kVariational, target, problem, run.lambda);
    r.iterations = run.iterations;
    r.seed = seed;
    r.converged = run.converged;
    r.note = run.note;
    r.fidelity_trace = run.trace;
    return Candidate{std::move(run), std::move(r)};
  };
  // Converged beats unconverged; among converged the lowest energy wins,
  // otherwise the lowest infidelity. While screening, "converged" means
  // below screen_tol.
  auto better = [](const OptimizationReport& a, const OptimizationReport& b, double tol) {
    const bool ca = a.infidelity <= tol, cb = b.infidelity <= tol;
    if (ca != cb) return ca;
    return ca ? a.energy < b.energy : a.infidelity < b.infidelity;
  };

  std::optional<Candidate> best;
  for (int start = 0; start < settings.starts; ++start) {
    const std::uint64_t seed = settings.seed + std::uint64_t(start);
    Coords init;
    if (start == 0 && settings.initial) {
      init = *settings.initial;
    } else {
      Rng rng(seed);
      init = rng.uniform_coords(settings.init_scale);
    }
    Candidate c = finish(descend(init, target, problem, settings, first_budget), seed);
    const double tol = screening ? settings.screen_tol : settings.infidelity_tol;
    if (!best || better(c.report, best->report, tol)) best = std::move(c);
  }

  if (screening && !best->run.converged && best->run.iterations < settings.max_iter) {
    DescentRun more = descend(best->run.lambda, target, problem, settings,
                              settings.max_iter - best->run.iterations);
    std::vector<double> trace = best->run.trace;
    trace.insert(trace.end(), more.trace.begin() + 1, more.trace.end());
    more.trace = std::move(trace);
    more.iterations += best->run.iterations;
    best = finish(std::move(more), best->report.seed);
  }
  best->report.runtime_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
  return std::move(best->report);
}

}  // namespace cddgate
