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

// Monte Carlo costate search. The geodesic equation is treated as a map
// lambda -> c from costate coordinates to the principal-log coordinates of
// U(tau). Random costates are pushed through that map, the ones whose c lies
// closest (in the l1 sense) to the target's coordinates are kept, and each
// kept candidate is refined with a Nelder-Mead search on the infidelity.
//
// Geodesics stay in SU(4), so U(tau) can approach any of the four
// representatives i^k T of the target. They are the same gate, but their
// principal logs differ; the distance is taken to the nearest one.

#include <cstdint>
#include <vector>

#include "cddgate/metrics.hpp"
#include "cddgate/model.hpp"
#include "cddgate/simplex.hpp"
#include "cddgate/variational.hpp"

namespace cddgate {

struct SampleRecord {
  int index = 0;  // position in the sample stream
  Coords lambda0 = Coords::Zero();
  Coords coords = Coords::Zero();  // principal-log coordinates of U(tau)
  bool branch_flag = false;
  double distance = 0.0;  // min over representatives of sum_k |c_k - target_k|
};

/// Principal-log coordinates of the target. branch_flag (optional) receives
/// the near-branch-cut flag.
Coords gate_coords(const GateTarget& target, bool* branch_flag = nullptr);

/// Distinct principal-log coordinates of the representatives i^k T,
/// k = 0..3, of the target. The first entry is gate_coords(target).
std::vector<Coords> representative_coords(const GateTarget& target);

/// Orders by distance; on equal distance an unflagged record precedes a
/// flagged one, then the lower sample index wins.
bool sample_precedes(const SampleRecord& a, const SampleRecord& b);

/// Draws n_samples costates with coordinates i.i.d. uniform in
/// [-coord_bound, coord_bound] (Rng(seed)), integrates each and returns the
/// `keep` best records in sample_precedes order. Samples whose integration
/// loses unitarity are discarded.
std::vector<SampleRecord> sample_candidates(const GateTarget& target,
                                            const GeodesicProblem& problem, int n_samples,
                                            double coord_bound, std::uint64_t seed, int keep);

/// The single closest sample.
SampleRecord sample_and_select(const GateTarget& target, const GeodesicProblem& problem,
                               int n_samples, double coord_bound, std::uint64_t seed);

/// Nelder-Mead minimization of the infidelity over the 15 costate
/// coordinates, starting at the candidate. Converged when the infidelity
/// reaches tol.
OptimizationReport refine(const Coords& candidate, const GateTarget& target,
                          const GeodesicProblem& problem, double tol,
                          SimplexSettings simplex = {});

struct MonteCarloSettings {
  int n_samples = 10000;
  double coord_bound = 4.0;
  std::uint64_t seed = 1;
  /// How many of the closest samples are refined; the converged refinement
  /// with the lowest energy is reported.
  int candidates = 1;
  double infidelity_tol = 1e-8;
  /// With screen_tol > infidelity_tol every candidate is first refined only
  /// to screen_tol (at most screen_evals evaluations); the best of them
  /// (below screen_tol first, then lowest energy) is refined to
  /// infidelity_tol. 0 disables screening.
  double screen_tol = 0.0;
  int screen_evals = 8000;
  SimplexSettings simplex;

  void validate() const;
};

OptimizationReport monte_carlo_optimize(const GateTarget& target,
                                        const GeodesicProblem& problem,
                                        const MonteCarloSettings& settings);

}  // namespace cddgate
