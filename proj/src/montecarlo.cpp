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

#include "cddgate/montecarlo.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <optional>

#include "cddgate/error.hpp"
#include "cddgate/rng.hpp"

namespace cddgate {

Coords gate_coords(const GateTarget& target, bool* branch_flag) {
  const LogResult log = principal_log(target.matrix);
  if (branch_flag) *branch_flag = log.near_branch_cut;
  return log.coords;
}

std::vector<Coords> representative_coords(const GateTarget& target) {
  std::vector<Coords> out;
  for (int k = 0; k < 4; ++k) {
    const Coords c = principal_log(std::pow(cplx(0.0, 1.0), k) * target.matrix).coords;
    const bool seen = std::any_of(out.begin(), out.end(), [&](const Coords& o) {
      return (o - c).cwiseAbs().maxCoeff() < 1e-9;
    });
    if (!seen) out.push_back(c);
  }
  return out;
}

bool sample_precedes(const SampleRecord& a, const SampleRecord& b) {
  if (a.distance != b.distance) return a.distance < b.distance;
  if (a.branch_flag != b.branch_flag) return !a.branch_flag;
  return a.index < b.index;
}

std::vector<SampleRecord> sample_candidates(const GateTarget& target,
                                            const GeodesicProblem& problem, int n_samples,
                                            double coord_bound, std::uint64_t seed, int keep) {
  if (n_samples < 1) fail(ErrorCode::kInvalidInput, "n_samples must be >= 1");
  if (keep < 1) fail(ErrorCode::kInvalidInput, "keep must be >= 1");
  const std::vector<Coords> goals = representative_coords(target);
  Rng rng(seed);
  std::vector<SampleRecord> best;
  best.reserve(keep + 1);
  for (int i = 0; i < n_samples; ++i) {
    SampleRecord rec;
    rec.index = i;
    rec.lambda0 = rng.uniform_coords(coord_bound);
    const auto end = geodesic_endpoint(rec.lambda0, problem.drift, problem.dist, problem.grid);
    if (!(end.max_drift <= kDriftTolerance)) continue;
    const LogResult log = principal_log(end.U);
    rec.coords = log.coords;
    rec.branch_flag = log.near_branch_cut;
    rec.distance = std::numeric_limits<double>::infinity();
    for (const Coords& goal : goals) {
      rec.distance = std::min(rec.distance, (log.coords - goal).cwiseAbs().sum());
    }
    if (int(best.size()) < keep || sample_precedes(rec, best.back())) {
      best.insert(std::upper_bound(best.begin(), best.end(), rec, sample_precedes), rec);
      if (int(best.size()) > keep) best.pop_back();
    }
  }
  if (best.empty()) {
    fail(ErrorCode::kIntegrationAccuracy, "every Monte Carlo sample lost unitarity; refine the grid");
  }
  return best;
}

SampleRecord sample_and_select(const GateTarget& target, const GeodesicProblem& problem,
                               int n_samples, double coord_bound, std::uint64_t seed) {
  return sample_candidates(target, problem, n_samples, coord_bound, seed, 1).front();
}

OptimizationReport refine(const Coords& candidate, const GateTarget& target,
                          const GeodesicProblem& problem, double tol, SimplexSettings simplex) {
  if (!candidate.allFinite()) fail(ErrorCode::kInvalidInput, "candidate costate is not finite");
  simplex.f_target = tol;
  const Objective objective = [&](const Eigen::VectorXd& x) {
    return costate_infidelity(Coords(x), problem, target.matrix);
  };
  const SimplexResult sr = nelder_mead(objective, Eigen::VectorXd(candidate), simplex);
  OptimizationReport r =
      geodesic_report(Method::kMonteCarlo, target, problem, Coords(sr.x));
  r.iterations = sr.iterations;
  r.converged = r.infidelity <= tol;
  r.note = sr.stop_reason;
  r.fidelity_trace.reserve(sr.trace.size());
  for (double v : sr.trace) r.fidelity_trace.push_back(1.0 - v);
  return r;
}

void MonteCarloSettings::validate() const {
  if (n_samples < 1) fail(ErrorCode::kConfig, "n_samples must be >= 1");
  if (!(coord_bound > 0.0)) fail(ErrorCode::kConfig, "coord_bound must be positive");
  if (candidates < 1) fail(ErrorCode::kConfig, "candidates must be >= 1");
  if (!(infidelity_tol >= 0.0)) fail(ErrorCode::kConfig, "infidelity_tol must be >= 0");
  if (!(screen_tol >= 0.0 && screen_tol <= 1.0)) fail(ErrorCode::kConfig, "screen_tol must lie in [0, 1]");
  if (screen_evals < 1) fail(ErrorCode::kConfig, "screen_evals must be >= 1");
  if (simplex.max_evals < 1) fail(ErrorCode::kConfig, "simplex max_evals must be >= 1");
}

OptimizationReport monte_carlo_optimize(const GateTarget& target,
                                        const GeodesicProblem& problem,
                                        const MonteCarloSettings& settings) {
  settings.validate();
  const auto t_start = std::chrono::steady_clock::now();
  const auto cands = sample_candidates(target, problem, settings.n_samples,
                                       settings.coord_bound, settings.seed, settings.candidates);
  const bool screening = settings.screen_tol > settings.infidelity_tol;
  const double first_tol = screening ? settings.screen_tol : settings.infidelity_tol;
  SimplexSettings first_simplex = settings.simplex;
  if (screening) first_simplex.max_evals = std::min(first_simplex.max_evals, settings.screen_evals);

  std::optional<OptimizationReport> best;
  for (const auto& cand : cands) {
    OptimizationReport r = refine(cand.lambda0, target, problem, first_tol, first_simplex);
    const bool better =
        !best || (r.converged && !best->converged) ||
        (r.converged == best->converged &&
         (r.converged ? r.energy < best->energy : r.infidelity < best->infidelity));
    if (better) best = std::move(r);
  }
  if (screening && best->infidelity > settings.infidelity_tol) {
    OptimizationReport r =
        refine(*best->lambda0, target, problem, settings.infidelity_tol, settings.simplex);
    std::vector<double> trace = std::move(best->fidelity_trace);
    trace.insert(trace.end(), r.fidelity_trace.begin(), r.fidelity_trace.end());
    r.fidelity_trace = std::move(trace);
    r.iterations += best->iterations;
    best = std::move(r);
  }
  best->converged = best->infidelity <= settings.infidelity_tol;
  best->seed = settings.seed;
  best->runtime_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
  return *best;
}

}  // namespace cddgate
