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

// Nelder-Mead downhill simplex minimizer.
//
// Each iteration reflects the worst vertex through the centroid of the
// others, then expands, contracts (outside or inside) or shrinks the whole
// simplex towards the best vertex. Coefficients default to the
// dimension-adaptive set of Gao and Han,
//   reflection 1, expansion 1 + 2/n, contraction 3/4 - 1/(2n), shrink 1 - 1/n,
// which behaves much better than the classical (1, 2, 1/2, 1/2) beyond a
// handful of dimensions. adaptive = false selects the classical set.

#include <functional>
#include <limits>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace cddgate {

struct SimplexSettings {
  double initial_step = 0.05;  // edge length of the axis-aligned start simplex
  double x_tol = 1e-10;        // stop when every vertex is this close to the best
  double f_target = -std::numeric_limits<double>::infinity();
  int max_evals = 50000;
  /// Re-seeds a collapsed simplex around the best point (at the initial
  /// step) while f_target is unmet, up to this many times.
  int max_restarts = 4;
  bool adaptive = true;
};

struct SimplexResult {
  Eigen::VectorXd x;
  double f = std::numeric_limits<double>::infinity();
  int evals = 0;
  int iterations = 0;
  int restarts = 0;
  bool reached_target = false;
  std::string stop_reason;
  std::vector<double> trace;  // best value after each iteration
};

using Objective = std::function<double(const Eigen::VectorXd&)>;

SimplexResult nelder_mead(const Objective& f, const Eigen::VectorXd& x0,
                          const SimplexSettings& settings = {});

}  // namespace cddgate
