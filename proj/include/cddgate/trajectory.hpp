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

// Value types for sampled trajectories on a uniform time grid.

#include <vector>

#include "cddgate/algebra.hpp"

namespace cddgate {

/// Uniform grid with n_steps intervals, i.e. n_steps + 1 nodes on [t0, t1].
struct TimeGrid {
  int n_steps = 2000;
  double t0 = 0.0;
  double t1 = 1.0;

  TimeGrid() = default;
  TimeGrid(int steps, double start, double end);

  double dt() const { return (t1 - t0) / n_steps; }
  int n_nodes() const { return n_steps + 1; }
  double node(int n) const { return t0 + (t1 - t0) * double(n) / n_steps; }

  bool operator==(const TimeGrid&) const = default;
};

struct UnitaryTrajectory {
  TimeGrid grid;
  /// One unitary per node; U.front() is the identity.
  std::vector<Mat4> U;

  const Mat4& final() const { return U.back(); }
};

/// Six control channels per node, (X1, Y1, Z1, X2, Y2, Z2); channels outside
/// the distribution stay identically zero.
struct ControlTrajectory {
  TimeGrid grid;
  std::vector<ChannelValues> h;
};

}  // namespace cddgate
